#pragma once

#include <string>
#include <vector>

#include "cwlab/lie.hpp"
#include "cwlab/presentation.hpp"

namespace cwlab {

/// Preset names: su3-x, su3-boson, sl3c, su3-gellmann. Throws UnknownPreset.
Presentation make_preset(const std::string& name);

const std::vector<std::string>& preset_names();
bool is_preset(const std::string& name);

/// One published table row: the bracket [left, right] with its printed
/// decomposition (label, coefficient grammar string). Kept verbatim as data
/// so that recomputation can be compared against it.
struct PrintedBracket {
    std::string left, right;
    std::vector<std::pair<std::string, std::string>> terms;
};

struct PrintedRoot {
    std::string label;
    std::vector<std::string> components;  // scalar grammar strings
};

/// Published commutator table for the raw infinitesimal operators
/// (28 rows, i < j).
const std::vector<PrintedBracket>& printed_x_brackets();

/// Published commutator table for the boson operators, in the published
/// bracket order (includes [E, H]-ordered rows).
const std::vector<PrintedBracket>& printed_boson_brackets();

/// Published root table for X1..X6.
const std::vector<PrintedRoot>& printed_x_roots();

/// Published root table for the boson ladders; the published signs follow the
/// [E, H] convention.
const std::vector<PrintedRoot>& printed_boson_roots();

/// The published table transcribed as a structure-constant tensor over
/// X1..X8 (antisymmetry filled in); input for the Jacobi sweep.
StructureTensor printed_x_tensor();

}  // namespace cwlab
