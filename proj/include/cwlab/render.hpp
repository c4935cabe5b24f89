#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cwlab/errata.hpp"
#include "cwlab/presentation.hpp"
#include "cwlab/verifier.hpp"

namespace cwlab {

enum class DocFormat { kMd, kJson, kTxt, kSvg };

/// "md" | "json" | "txt" | "svg". Throws UnsupportedFormat.
DocFormat parse_format(const std::string& name);

struct TableRow {
    std::string left, right;
    std::vector<std::pair<std::string, std::string>> terms;  // (label, coeff string)
    std::string display;                                     // "2*i · X7"
};

/// Every bracket [g_i, g_j], i < j, decomposed in the generator basis.
std::vector<TableRow> commutator_table(const Presentation& p);

std::string render_table(const std::string& source, const std::vector<TableRow>& rows,
                         DocFormat format);

struct RootsRow {
    std::string label;
    std::optional<RootVector> root;
    std::string failing_cartan;  // when NotEigen
};

/// Eq. (2)-convention roots (or NotEigen) for every non-Cartan generator.
std::vector<RootsRow> roots_table(const Presentation& p);

std::string render_roots(const std::string& source, const std::vector<std::string>& cartan,
                         const std::vector<RootsRow>& rows, DocFormat format);

std::string render_report(const CartanWeylReport& report, DocFormat format);

std::string render_errata(const ErrataReport& report, DocFormat format);

/// The normalized presentation; json emits the algebra-file schema so the
/// output can be reloaded.
std::string render_presentation(const Presentation& p, DocFormat format);

}  // namespace cwlab
