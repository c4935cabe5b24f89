#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwlab/lie.hpp"
#include "cwlab/presentation.hpp"

namespace cwlab {

struct Eq1Row {
    std::string left, right;
    bool zero = false;
    std::string bracket;  // rendering of the bracket when nonzero
};

struct Eq2Row {
    std::string label;
    std::optional<RootVector> root;
    std::string failing_cartan;  // set when NotEigen
};

struct Eq3Row {
    std::string plus_label, minus_label;
    RootVector root;                                  // root of plus_label
    bool in_cartan_span = false;                      // relaxed mode
    std::optional<std::vector<Scalar>> cartan_coeffs; // bracket over the Cartan set
    std::vector<Scalar> expected_coeffs;              // the root itself (Euclidean contraction)
    bool strict_pass = false;
    std::string residual;  // bracket - sum root_i H_i
};

struct NTableRow {
    std::string alpha_label, beta_label, sum_label;
    Scalar n;
};

struct Eq4Violation {
    std::string alpha_label, beta_label;
    // "nonzero-without-root-sum": alpha+beta is not a root yet the bracket is nonzero
    // "not-proportional": alpha+beta is a root but the bracket is not a multiple of its ladder
    // "missing-root": a pair member has no root (eq2 NotEigen) and the bracket is nonzero
    // "ambiguous-root": several generators carry the root alpha+beta
    // "not-closed": the bracket leaves the presentation span
    std::string kind;
    std::string bracket;
    std::string detail;
};

struct Verdicts {
    bool eq1 = false;
    bool eq2 = false;
    bool eq3_strict = false;
    bool eq3_relaxed = false;
    bool eq4 = false;

    bool strict_all() const { return eq1 && eq2 && eq3_strict && eq4; }
};

/// Per-axiom evidence for Eqs. (1)-(4) against one presentation.
struct CartanWeylReport {
    std::string source;
    std::string backend;
    std::vector<std::string> cartan_labels;
    std::vector<Eq1Row> eq1;
    std::vector<Eq2Row> eq2;
    std::vector<Eq3Row> eq3;
    std::vector<std::string> eq3_unpaired;  // rooted ladders without a -root partner
    std::vector<NTableRow> eq4_n;
    std::vector<Eq4Violation> eq4_violations;
    Verdicts verdicts;
};

/// Runs the four axiom checks. Closure failures surface as eq4 violations of
/// kind "not-closed", never as exceptions.
CartanWeylReport verify_cartan_weyl(const Presentation& p);

struct CompareResult {
    bool equal = false;
    // First mismatch under the mapping, in p's labels.
    std::string i, j, k;
    std::string lhs, rhs;
};

/// Entry-for-entry comparison of two structure-constant tensors under a
/// label bijection p-label -> q-label. Throws UnknownLabel / DuplicateLabel /
/// Error on an invalid mapping and propagates NotClosedError.
CompareResult compare_presentations(const Presentation& p, const Presentation& q,
                                    const std::vector<std::pair<std::string, std::string>>& mapping);

}  // namespace cwlab
