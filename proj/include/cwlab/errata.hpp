#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cwlab/presentation.hpp"

namespace cwlab {

/// One row where the published table and exact recomputation disagree.
struct ErrataEntry {
    std::string location;    // e.g. "[X1,X5]" or "root(X1)"
    std::string printed;
    std::string recomputed;
};

struct ErrataReport {
    std::string source;
    std::vector<ErrataEntry> entries;
    std::vector<std::string> notes;
};

/// Recomputes every embedded published table row for the given preset and
/// lists the mismatches. Presets without embedded published tables (and
/// user files) yield an empty list with an explanatory note.
ErrataReport compute_errata(const std::string& source_name, const Presentation& p);

}  // namespace cwlab
