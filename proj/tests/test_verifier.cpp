#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "cwlab/presets.hpp"
#include "cwlab/verifier.hpp"
#include "support/test_support.hpp"

using namespace cwlab;
using cwlab::testing::S;

namespace {

const Eq2Row& eq2_row(const CartanWeylReport& r, const std::string& label) {
    for (const auto& row : r.eq2)
        if (row.label == label) return row;
    throw std::runtime_error("no eq2 row for " + label);
}

const Eq3Row& eq3_row(const CartanWeylReport& r, const std::string& plus) {
    for (const auto& row : r.eq3)
        if (row.plus_label == plus) return row;
    throw std::runtime_error("no eq3 row for " + plus);
}

std::optional<Scalar> n_of(const CartanWeylReport& r, const std::string& a, const std::string& b) {
    for (const auto& row : r.eq4_n)
        if (row.alpha_label == a && row.beta_label == b) return row.n;
    return std::nullopt;
}

// Correspondence forced by the bilinear map C_i+ C_j <-> E_ij.
const std::vector<std::pair<std::string, std::string>> kBosonToSl3c = {
    {"H1", "H1"}, {"H2", "H2"}, {"Eg", "Ea"}, {"E-g", "E-a"},
    {"Ea", "Eg"}, {"E-a", "E-g"}, {"Eb", "E-b"}, {"E-b", "Eb"},
};

}  // namespace

TEST_CASE("verify su3-boson: all four axioms hold in strict mode") {
    auto report = verify_cartan_weyl(make_preset("su3-boson"));
    CHECK(report.verdicts.eq1);
    CHECK(report.verdicts.eq2);
    CHECK(report.verdicts.eq3_strict);
    CHECK(report.verdicts.eq3_relaxed);
    CHECK(report.verdicts.eq4);
    CHECK(report.verdicts.strict_all());

    CHECK(*eq2_row(report, "Eg").root == RootVector{S("1/3*sqrt3"), S("0")});
    CHECK(*eq2_row(report, "Ea").root == RootVector{S("1/6*sqrt3"), S("1/2")});
    CHECK(*eq2_row(report, "Eb").root == RootVector{S("1/6*sqrt3"), S("-1/2")});
    CHECK(*eq2_row(report, "E-g").root == RootVector{S("-1/3*sqrt3"), S("0")});

    // alpha + beta = gamma and N_{alpha beta} = 1/sqrt6.
    RootVector sum = {S("1/6*sqrt3") + S("1/6*sqrt3"), S("1/2") + S("-1/2")};
    CHECK(sum == *eq2_row(report, "Eg").root);
    REQUIRE(n_of(report, "Ea", "Eb").has_value());
    CHECK(*n_of(report, "Ea", "Eb") == S("1/6*sqrt6"));

    CHECK(eq3_row(report, "Ea").cartan_coeffs ==
          std::vector<Scalar>{S("1/6*sqrt3"), S("1/2")});
    CHECK(eq3_row(report, "Eb").cartan_coeffs ==
          std::vector<Scalar>{S("1/6*sqrt3"), S("-1/2")});
    CHECK(eq3_row(report, "Eg").cartan_coeffs ==
          std::vector<Scalar>{S("1/3*sqrt3"), S("0")});
}

TEST_CASE("verify su3-x: NotEigen ladders and Eq.(4) violations") {
    auto report = verify_cartan_weyl(make_preset("su3-x"));
    CHECK(report.verdicts.eq1);  // [X7, X8] = 0
    CHECK(!report.verdicts.eq2);
    CHECK(!report.verdicts.eq4);

    for (const auto& label : {"X1", "X2", "X3", "X4", "X5", "X6"})
        CHECK(!eq2_row(report, label).root.has_value());

    bool found_x1_x5 = false;
    for (const auto& v : report.eq4_violations)
        if (v.alpha_label == "X1" && v.beta_label == "X5") found_x1_x5 = true;
    CHECK(found_x1_x5);
    CHECK(!report.eq4_violations.empty());
}

TEST_CASE("verify sl3c: strict eq3 fails, relaxed passes, report says so") {
    auto report = verify_cartan_weyl(make_preset("sl3c"));
    CHECK(report.verdicts.eq1);
    CHECK(report.verdicts.eq2);
    CHECK(report.verdicts.eq4);
    CHECK(!report.verdicts.eq3_strict);
    CHECK(report.verdicts.eq3_relaxed);

    CHECK(*eq2_row(report, "Ea").root == RootVector{S("2"), S("-1")});
    CHECK(*eq2_row(report, "Eb").root == RootVector{S("-1"), S("2")});
    CHECK(*eq2_row(report, "Eg").root == RootVector{S("1"), S("1")});

    // [Ea, E-a] = H1 while alpha.H = 2 H1 - H2.
    const auto& row = eq3_row(report, "Ea");
    CHECK(row.in_cartan_span);
    CHECK(row.cartan_coeffs == std::vector<Scalar>{S("1"), S("0")});
    CHECK(row.expected_coeffs == std::vector<Scalar>{S("2"), S("-1")});
    CHECK(!row.strict_pass);
    // [Eg, E-g] = H1 + H2 = gamma.H holds even here.
    CHECK(eq3_row(report, "Eg").strict_pass);
}

TEST_CASE("verify su3-gellmann") {
    auto report = verify_cartan_weyl(make_preset("su3-gellmann"));
    CHECK(report.verdicts.eq1);
    CHECK(report.verdicts.eq2);
    CHECK(report.verdicts.eq4);
    // Same Euclidean-contraction tension as sl3c.
    CHECK(!report.verdicts.eq3_strict);
    CHECK(report.verdicts.eq3_relaxed);
}

TEST_CASE("eq4 N-table antisymmetry in every report") {
    for (const char* preset : {"su3-boson", "sl3c", "su3-gellmann"}) {
        auto report = verify_cartan_weyl(make_preset(preset));
        for (const auto& row : report.eq4_n) {
            auto mirrored = n_of(report, row.beta_label, row.alpha_label);
            REQUIRE(mirrored.has_value());
            CHECK(*mirrored == -row.n);
        }
    }
}

TEST_CASE("root additivity whenever N is nonzero") {
    for (const char* preset : {"su3-boson", "sl3c", "su3-gellmann"}) {
        auto report = verify_cartan_weyl(make_preset(preset));
        std::map<std::string, RootVector> roots;
        for (const auto& row : report.eq2)
            if (row.root) roots[row.label] = *row.root;
        for (const auto& row : report.eq4_n) {
            if (row.n.is_zero()) continue;
            RootVector sum = roots.at(row.alpha_label);
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += roots.at(row.beta_label)[k];
            CHECK(sum == roots.at(row.sum_label));
        }
    }
}

TEST_CASE("root multiset closed under negation when eq2 passes") {
    for (const char* preset : {"su3-boson", "sl3c", "su3-gellmann"}) {
        auto report = verify_cartan_weyl(make_preset(preset));
        REQUIRE(report.verdicts.eq2);
        std::vector<RootVector> roots;
        for (const auto& row : report.eq2) roots.push_back(*row.root);
        for (const auto& r : roots) {
            RootVector neg;
            for (const auto& x : r) neg.push_back(-x);
            CHECK(std::count(roots.begin(), roots.end(), neg) ==
                  std::count(roots.begin(), roots.end(), r));
        }
    }
}

TEST_CASE("strict eq3 implies relaxed eq3") {
    for (const char* preset : {"su3-x", "su3-boson", "sl3c", "su3-gellmann"}) {
        auto report = verify_cartan_weyl(make_preset(preset));
        for (const auto& row : report.eq3)
            if (row.strict_pass) CHECK(row.in_cartan_span);
        if (report.verdicts.eq3_strict) CHECK(report.verdicts.eq3_relaxed);
    }
}

TEST_CASE("closure failure is reported, not thrown") {
    MatrixPresentation p;
    p.name = "open";
    p.labels = {"H", "A"};
    // [E12, E21] = E11 - E22 lies outside span{E12, E21}.
    p.elements = {Mat::unit(2, 0, 1), Mat::unit(2, 1, 0)};
    p.cartan = {"H"};
    auto report = verify_cartan_weyl(Presentation(p));
    bool has_not_closed = false;
    for (const auto& v : report.eq4_violations)
        if (v.kind == "not-closed") has_not_closed = true;
    CHECK(has_not_closed);
    CHECK(!report.verdicts.eq4);
}

TEST_CASE("eq4 reports AmbiguousRoot when two generators share the sum root") {
    // Upper-triangular gl(4) slice with Cartan diag(3,1,-1,-3): E12, E23, E34
    // all carry root (2), E13 and E24 share root (4), so alpha + beta for
    // (E12, E23) is ambiguous.
    MatrixPresentation p;
    p.name = "shared-roots";
    p.labels = {"H", "E12", "E23", "E34", "E13", "E24", "E14"};
    Mat h(4);
    h.at(0, 0) = S("3");
    h.at(1, 1) = S("1");
    h.at(2, 2) = S("-1");
    h.at(3, 3) = S("-3");
    p.elements = {h,
                  Mat::unit(4, 0, 1), Mat::unit(4, 1, 2), Mat::unit(4, 2, 3),
                  Mat::unit(4, 0, 2), Mat::unit(4, 1, 3), Mat::unit(4, 0, 3)};
    p.cartan = {"H"};

    auto report = verify_cartan_weyl(Presentation(p));
    CHECK(report.verdicts.eq2);
    bool ambiguous = false;
    for (const auto& v : report.eq4_violations)
        if (v.kind == "ambiguous-root" && v.alpha_label == "E12" && v.beta_label == "E23")
            ambiguous = true;
    CHECK(ambiguous);
}

TEST_CASE("every tensor produced by structure_constants satisfies Jacobi") {
    for (const char* preset : {"su3-x", "su3-boson", "sl3c", "su3-gellmann"}) {
        auto tensor = std::visit([](const auto& q) { return structure_constants(q); },
                                 make_preset(preset));
        CHECK(jacobi_check(tensor).empty());
    }
}

TEST_CASE("compare su3-boson with normalized sl3c under the forced map") {
    auto boson = make_preset("su3-boson");
    auto normalized = Presentation(
        normalize_presentation(std::get<MatrixPresentation>(make_preset("sl3c"))));
    auto result = compare_presentations(boson, normalized, kBosonToSl3c);
    CHECK(result.equal);
}

TEST_CASE("compare a presentation with itself under the identity map") {
    auto p = make_preset("sl3c");
    std::vector<std::pair<std::string, std::string>> identity;
    for (const auto& l : std::get<MatrixPresentation>(p).labels) identity.push_back({l, l});
    CHECK(compare_presentations(p, p, identity).equal);
}

TEST_CASE("compare su3-boson with raw sl3c: first mismatch reported") {
    auto boson = make_preset("su3-boson");
    auto raw = make_preset("sl3c");
    auto result = compare_presentations(boson, raw, kBosonToSl3c);
    CHECK(!result.equal);
    CHECK(!result.i.empty());
    CHECK(result.lhs != result.rhs);
}

TEST_CASE("compare rejects non-bijections") {
    auto p = make_preset("sl3c");
    std::vector<std::pair<std::string, std::string>> bad = {
        {"H1", "H1"}, {"H2", "H1"}, {"Ea", "Ea"}, {"E-a", "E-a"},
        {"Eb", "Eb"}, {"E-b", "E-b"}, {"Eg", "Eg"}, {"E-g", "E-g"},
    };
    CHECK_THROWS_AS(compare_presentations(p, p, bad), DuplicateLabel);
    std::vector<std::pair<std::string, std::string>> short_map = {{"H1", "H1"}};
    CHECK_THROWS_AS(compare_presentations(p, p, short_map), Error);
}

TEST_CASE("backend agreement: boson vs normalized sl3c roots and N tables") {
    auto boson_report = verify_cartan_weyl(make_preset("su3-boson"));
    auto normalized = Presentation(
        normalize_presentation(std::get<MatrixPresentation>(make_preset("sl3c"))));
    auto matrix_report = verify_cartan_weyl(normalized);

    std::map<std::string, std::string> to_matrix(kBosonToSl3c.begin(), kBosonToSl3c.end());

    std::map<std::string, RootVector> matrix_roots;
    for (const auto& row : matrix_report.eq2) matrix_roots[row.label] = *row.root;
    for (const auto& row : boson_report.eq2)
        CHECK(matrix_roots.at(to_matrix.at(row.label)) == *row.root);

    auto matrix_n = [&matrix_report](const std::string& a, const std::string& b) {
        for (const auto& row : matrix_report.eq4_n)
            if (row.alpha_label == a && row.beta_label == b) return row.n;
        throw std::runtime_error("missing N row");
    };
    CHECK(boson_report.eq4_n.size() == matrix_report.eq4_n.size());
    for (const auto& row : boson_report.eq4_n)
        CHECK(matrix_n(to_matrix.at(row.alpha_label), to_matrix.at(row.beta_label)) == row.n);
}
