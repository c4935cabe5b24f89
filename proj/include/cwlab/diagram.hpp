#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cwlab/presentation.hpp"

namespace cwlab {

/// Rank-2 root diagram as SVG: labeled arrows from the origin, fixed
/// viewBox [-3,3]^2. Scalars are converted to binary64 here and nowhere else.
/// Throws RankNotTwo on a rank != 2 input or an empty root list.
std::string render_diagram_svg(const std::vector<std::pair<std::string, RootVector>>& roots);

/// Same data as a fixed-size ASCII grid with a legend.
std::string render_diagram_ascii(const std::vector<std::pair<std::string, RootVector>>& roots);

}  // namespace cwlab
