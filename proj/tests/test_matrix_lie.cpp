#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cwlab/lie.hpp"
#include "cwlab/presets.hpp"
#include "cwlab/verifier.hpp"
#include "support/test_support.hpp"

using namespace cwlab;
using cwlab::testing::S;

namespace {

MatrixPresentation su3x() { return std::get<MatrixPresentation>(make_preset("su3-x")); }
MatrixPresentation sl3c() { return std::get<MatrixPresentation>(make_preset("sl3c")); }

const Mat& gen(const MatrixPresentation& p, const std::string& label) {
    return p.elements[p.index_of(label)];
}

// Brute-force Killing oracle: explicit ad matrices over the generator basis,
// multiplied and traced. Independent of the structure-constant contraction
// used by killing_form.
Scalar killing_bruteforce(const Mat& a, const Mat& b, const MatrixPresentation& p) {
    auto ad_matrix = [&p](const Mat& x) {
        std::size_t n = p.size();
        std::vector<std::vector<Scalar>> ad(n, std::vector<Scalar>(n));
        for (std::size_t j = 0; j < n; ++j) {
            auto dec = decompose_in_basis(commutator(x, p.elements[j]), p.elements);
            REQUIRE(dec.coeffs.has_value());
            for (std::size_t i = 0; i < n; ++i) ad[i][j] = (*dec.coeffs)[i];
        }
        return ad;
    };
    auto ada = ad_matrix(a), adb = ad_matrix(b);
    std::size_t n = p.size();
    Scalar trace;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) trace += ada[i][k] * adb[k][i];
    return trace;
}

}  // namespace

TEST_CASE("commutator examples") {
    auto p = su3x();
    CHECK(commutator(gen(p, "X1"), gen(p, "X2")) == S("2*i") * gen(p, "X7"));
    CHECK(commutator(gen(p, "X3"), gen(p, "X3")).is_zero());

    // [X1, X5] has +1 at (1,3) and -1 at (3,1), i.e. +i X4 -- the published
    // label "-i X4" is one of the errata rows.
    Mat x1x5 = commutator(gen(p, "X1"), gen(p, "X5"));
    Mat expected(3);
    expected.at(0, 2) = S("1");
    expected.at(2, 0) = S("-1");
    CHECK(x1x5 == expected);
    CHECK(x1x5 == S("i") * gen(p, "X4"));

    CHECK_THROWS_AS(commutator(Mat(2), Mat(3)), DimensionMismatch);
}

TEST_CASE("decompose_in_basis") {
    auto p = su3x();

    auto dec = decompose_in_basis(commutator(gen(p, "X3"), gen(p, "X4")), p.elements);
    REQUIRE(dec.coeffs.has_value());
    std::vector<Scalar> expected(8);
    expected[6] = S("i");
    expected[7] = S("sqrt3*i");
    CHECK(*dec.coeffs == expected);

    auto zero = decompose_in_basis(Mat(3), p.elements);
    REQUIRE(zero.coeffs.has_value());
    CHECK(*zero.coeffs == std::vector<Scalar>(8));

    // E13 = (1/2) X3 + (i/2) X4, checked by recomposition.
    auto e13 = decompose_in_basis(Mat::unit(3, 0, 2), p.elements);
    REQUIRE(e13.coeffs.has_value());
    CHECK((*e13.coeffs)[2] == S("1/2"));
    CHECK((*e13.coeffs)[3] == S("1/2*i"));
    Mat recomposed(3);
    for (std::size_t k = 0; k < 8; ++k) recomposed += (*e13.coeffs)[k] * p.elements[k];
    CHECK(recomposed == Mat::unit(3, 0, 2));

    // The identity has a trace; the X span is traceless.
    auto not_in_span = decompose_in_basis(Mat::identity(3), p.elements);
    CHECK(!not_in_span.coeffs.has_value());
    CHECK(!not_in_span.residual.is_zero());

    std::vector<Mat> dependent = {gen(p, "X1"), S("2") * gen(p, "X1")};
    CHECK_THROWS_AS(decompose_in_basis(Mat(3), dependent), DependentBasis);
}

TEST_CASE("structure constants of su3-x") {
    auto p = su3x();
    StructureTensor t = structure_constants(p);  // closed: no NotClosed over all 28 pairs
    CHECK(t.at(0, 1, 6) == S("2*i"));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t l = 0; l < 8; ++l) CHECK(t.at(i, i, l).is_zero());
    // Antisymmetry in (i, j).
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            for (std::size_t l = 0; l < 8; ++l) CHECK(t.at(i, j, l) == -t.at(j, i, l));
}

TEST_CASE("structure constants failure modes") {
    MatrixPresentation p;
    p.name = "open";
    p.labels = {"A", "B"};
    p.elements = {Mat::unit(2, 0, 1), Mat::unit(2, 1, 0)};  // [A,B] = E11-E22, outside span
    p.cartan = {"A"};
    CHECK_THROWS_AS(structure_constants(p), NotClosedError);
}

TEST_CASE("jacobi_check") {
    auto p = su3x();
    CHECK(jacobi_check(structure_constants(p)).empty());
    CHECK(jacobi_check(StructureTensor(5)).empty());  // abelian

    auto violations = jacobi_check(printed_x_tensor());
    CHECK(!violations.empty());
}

TEST_CASE("ad_root") {
    auto p = sl3c();
    auto cartan = p.cartan_elements();

    auto ea = ad_root(cartan, gen(p, "Ea"));
    REQUIRE(ea.root.has_value());
    CHECK(*ea.root == RootVector{S("2"), S("-1")});

    // A Cartan element against its own Cartan: zero root.
    auto h1 = ad_root(cartan, gen(p, "H1"));
    REQUIRE(h1.root.has_value());
    CHECK(*h1.root == RootVector{S("0"), S("0")});

    auto x = su3x();
    auto x1 = ad_root(x.cartan_elements(), gen(x, "X1"));
    CHECK(!x1.root.has_value());
    CHECK(x1.failing_cartan == 0);  // [X7, X1] is proportional to X2, not X1

    CHECK_THROWS_AS(ad_root(cartan, Mat(3)), ZeroElement);
}

TEST_CASE("ladder_combine") {
    auto p = su3x();

    auto combined = ladder_combine(p, {{"X1", "X2"}}, S("1/2"));
    CHECK(combined.elements[combined.index_of("X1+iX2")] == Mat::unit(3, 0, 1));
    CHECK(combined.elements[combined.index_of("X1-iX2")] == Mat::unit(3, 1, 0));
    CHECK(combined.cartan == std::vector<std::string>{"X7", "X8"});

    auto wide = ladder_combine(p, {{"X1", "X2"}}, S("1"));
    CHECK(wide.elements[wide.index_of("X1-iX2")] == S("2") * Mat::unit(3, 1, 0));

    // Pair with a zero partner: both branches equal the surviving element.
    MatrixPresentation q;
    q.name = "with-zero";
    q.labels = {"A", "Z", "H"};
    q.elements = {Mat::unit(2, 0, 1), Mat(2), Mat::identity(2)};
    q.cartan = {"H"};
    auto r = ladder_combine(q, {{"A", "Z"}}, S("1"));
    CHECK(r.elements[r.index_of("A+iZ")] == Mat::unit(2, 0, 1));
    CHECK(r.elements[r.index_of("A-iZ")] == Mat::unit(2, 0, 1));

    CHECK_THROWS_AS(ladder_combine(p, {{"X1", "nope"}}, S("1")), UnknownLabel);
}

TEST_CASE("killing form values and oracle agreement") {
    auto p = sl3c();
    const Mat& e12 = gen(p, "Ea");
    const Mat& e21 = gen(p, "E-a");

    Scalar k = killing_form(e12, e21, p);
    CHECK(k == S("6"));
    CHECK(k == killing_bruteforce(e12, e21, p));
    // Cross-check against 2n tr(AB) for sl(n), n = 3.
    CHECK(k == S("6") * (e12 * e21).trace());

    CHECK(killing_form(gen(p, "H1"), gen(p, "Ea"), p) == Scalar());
    CHECK(killing_form(gen(p, "H1"), gen(p, "H1"), p) == S("12"));
    CHECK(killing_form(gen(p, "H1"), gen(p, "H2"), p) == S("-6"));
}

TEST_CASE("killing form symmetry and ad-invariance on random span elements") {
    auto p = sl3c();
    testing::ScalarGen gen(101);
    auto random_span = [&]() {
        Mat m(3);
        for (const auto& g : p.elements) m += gen.scalar() * g;
        return m;
    };
    for (int k = 0; k < 25; ++k) {
        Mat x = random_span(), y = random_span(), z = random_span();
        CHECK(killing_form(x, y, p) == killing_form(y, x, p));
        CHECK(killing_form(commutator(x, y), z, p) == killing_form(x, commutator(y, z), p));
    }
}

TEST_CASE("normalize_presentation on sl3c") {
    auto p = sl3c();
    auto n = normalize_presentation(p);

    Mat h1(3), h2(3);
    h1.at(0, 0) = S("1/6*sqrt3");
    h1.at(1, 1) = S("-1/6*sqrt3");
    h2.at(0, 0) = S("1/6");
    h2.at(1, 1) = S("1/6");
    h2.at(2, 2) = S("-1/3");
    CHECK(n.elements[n.index_of("H1")] == h1);
    CHECK(n.elements[n.index_of("H2")] == h2);

    // Every ladder is scaled by 1/sqrt6.
    Scalar scale = S("1/6*sqrt6");
    for (const auto& label : {"Ea", "E-a", "Eb", "E-b", "Eg", "E-g"})
        CHECK(n.elements[n.index_of(label)] == scale * p.elements[p.index_of(label)]);

    // K-orthonormality of the new Cartan and unit ladder pairings.
    CHECK(killing_form(h1, h1, n) == S("1"));
    CHECK(killing_form(h2, h2, n) == S("1"));
    CHECK(killing_form(h1, h2, n) == Scalar());
    CHECK(killing_form(n.elements[n.index_of("Ea")], n.elements[n.index_of("E-a")], n) == S("1"));

    // Idempotence (up to the derived name).
    auto again = normalize_presentation(n);
    CHECK(again.labels == n.labels);
    CHECK(again.elements == n.elements);
    CHECK(again.cartan == n.cartan);

    // Strict Eq. (3) holds after normalization.
    auto report = verify_cartan_weyl(Presentation(n));
    CHECK(report.verdicts.eq3_strict);
    CHECK(report.verdicts.strict_all());
}

TEST_CASE("normalize_presentation missing partner") {
    // Closed two-element algebra (Borel of sl2): the raising ladder has root
    // (2) against H but nothing carries (-2).
    MatrixPresentation borel;
    borel.name = "no-partner";
    borel.labels = {"H", "E"};
    Mat h(2);
    h.at(0, 0) = S("1");
    h.at(1, 1) = S("-1");
    borel.elements = {h, Mat::unit(2, 0, 1)};
    borel.cartan = {"H"};
    CHECK_THROWS_AS(normalize_presentation(borel), NoPartner);
}

TEST_CASE("bracket bilinearity, antisymmetry, zero trace on random matrices") {
    testing::ScalarGen g(55);
    for (int k = 0; k < 50; ++k) {
        Mat a = g.mat(3), b = g.mat(3), c = g.mat(3);
        Scalar s = g.scalar();
        CHECK(commutator(a, b) == -commutator(b, a));
        CHECK(commutator(a + b, c) == commutator(a, c) + commutator(b, c));
        CHECK(commutator(s * a, b) == s * commutator(a, b));
        CHECK(commutator(a, b).trace() == Scalar());
        CHECK(commutator(a, a).is_zero());
    }
}

TEST_CASE("roots found by normalization come in +- pairs") {
    for (const char* preset : {"sl3c", "su3-gellmann"}) {
        auto p = std::get<MatrixPresentation>(make_preset(preset));
        auto cartan = p.cartan_elements();
        std::vector<RootVector> roots;
        for (auto li : p.ladder_indices()) {
            auto r = ad_root(cartan, p.elements[li]);
            REQUIRE(r.root.has_value());
            roots.push_back(*r.root);
        }
        for (const auto& root : roots) {
            RootVector neg;
            for (const auto& x : root) neg.push_back(-x);
            CHECK(std::count(roots.begin(), roots.end(), neg) == 1);
        }
    }
}
