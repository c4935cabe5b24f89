#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cwlab/scalar.hpp"
#include "support/test_support.hpp"

using namespace cwlab;
using cwlab::testing::S;

TEST_CASE("radical multiplication table") {
    CHECK(S("sqrt3") * S("sqrt3") == S("3"));
    CHECK(S("i") * S("i") == S("-1"));
    CHECK(S("sqrt2") * S("sqrt3") == S("sqrt6"));
    CHECK(S("sqrt2") * S("sqrt6") == S("2*sqrt3"));
    CHECK(S("sqrt3") * S("sqrt6") == S("3*sqrt2"));
    CHECK(S("sqrt6") * S("sqrt6") == S("6"));
}

TEST_CASE("inverse of 1 + sqrt3") {
    Scalar a = S("1 + sqrt3");
    Scalar inv = S("1") / a;
    CHECK(inv == S("-1/2 + 1/2*sqrt3"));
    CHECK(a * inv == S("1"));
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(S("1") / Scalar(), DivisionByZero);
    CHECK_THROWS_AS(Scalar().inverse(), DivisionByZero);
}

TEST_CASE("parse examples") {
    Scalar x = parse_scalar("1/2 + 1/2*sqrt3*i");
    CHECK(x.coord(Scalar::kOne, false) == make_rational(1, 2));
    CHECK(x.coord(Scalar::kSqrt3, true) == make_rational(1, 2));
    CHECK(x.coord(Scalar::kSqrt3, false) == 0);

    Scalar minus_i = parse_scalar("-i");
    CHECK(minus_i.coord(Scalar::kOne, true) == -1);

    Scalar s6 = parse_scalar("sqrt2*sqrt3");
    CHECK(s6.coord(Scalar::kSqrt6, false) == 1);
    CHECK(s6 == Scalar::sqrt6());

    CHECK(parse_scalar("(1+i)*(1-i)") == S("2"));
    CHECK(parse_scalar(" - 2 / 4 ") == S("-1/2"));
}

TEST_CASE("parse errors carry offset and expected set") {
    // '/' accepts only a positive integer literal on the right.
    try {
        parse_scalar("1/sqrt3");
        FAIL("should have thrown");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
        CHECK(!e.expected.empty());
    }
    CHECK_THROWS_AS(parse_scalar("2sqrt3"), ParseError);  // missing '*'
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK_THROWS_AS(parse_scalar("1+"), ParseError);
    CHECK_THROWS_AS(parse_scalar("sqrt5"), ParseError);
    CHECK_THROWS_AS(parse_scalar("(1+i"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);

    try {
        parse_scalar("1 + @");
        FAIL("should have thrown");
    } catch (const ParseError& e) {
        CHECK(e.offset == 4);
    }
}

TEST_CASE("format canonical forms") {
    CHECK(format_scalar(S("2*i")) == "2*i");
    CHECK(format_scalar(Scalar()) == "0");
    // 1/sqrt6 rationalized: constructed as sqrt6/6, checked by squaring.
    Scalar inv_sqrt6 = Scalar::rational(1, 6) * Scalar::sqrt6();
    CHECK(inv_sqrt6 * inv_sqrt6 == S("1/6"));
    CHECK(format_scalar(inv_sqrt6) == "1/6*sqrt6");
    CHECK(format_scalar(S("1") / Scalar::sqrt6()) == "1/6*sqrt6");
    CHECK(format_scalar(S("-i")) == "-i");
    CHECK(format_scalar(S("1/2 + 1/2*sqrt3*i")) == "1/2 + 1/2*sqrt3*i");
    CHECK(format_scalar(S("1 - sqrt2")) == "1 - sqrt2");
}

TEST_CASE("round trips") {
    testing::ScalarGen gen(2024);
    for (int k = 0; k < 10000; ++k) {
        Scalar x = gen.scalar();
        std::string text = format_scalar(x);
        CHECK(parse_scalar(text) == x);
        // Idempotence on strings.
        CHECK(format_scalar(parse_scalar(text)) == text);
    }
}

TEST_CASE("field axioms on random elements") {
    testing::ScalarGen gen(7);
    for (int k = 0; k < 10000; ++k) {
        Scalar a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Scalar());
    }
}

TEST_CASE("multiplicative inverses on random nonzero elements") {
    testing::ScalarGen gen(11);
    for (int k = 0; k < 10000; ++k) {
        Scalar a = gen.nonzero_scalar();
        CHECK(a * a.inverse() == S("1"));
    }
}

TEST_CASE("canonical-form uniqueness") {
    testing::ScalarGen gen(13);
    for (int k = 0; k < 1000; ++k) {
        Scalar a = gen.scalar(), b = gen.scalar();
        bool coords_equal = true;
        for (int r = 0; r < 4 && coords_equal; ++r)
            for (int u = 0; u < 2; ++u)
                if (a.coord(static_cast<Scalar::Radical>(r), u != 0) !=
                    b.coord(static_cast<Scalar::Radical>(r), u != 0)) {
                    coords_equal = false;
                    break;
                }
        CHECK((a - b).is_zero() == coords_equal);
        CHECK((a == b) == coords_equal);
    }
}

TEST_CASE("arbitrary-precision coordinates") {
    Scalar big = S("123456789123456789123456789/2");
    Scalar prod = big * big;
    CHECK(prod == S("15241578780673678546105778281054720515622620750190521/4"));
    CHECK(big * big.inverse() == S("1"));
    // Repeated squaring inflates well past 64 bits and stays exact.
    Scalar x = S("3/7 + 5/3*sqrt2");
    for (int k = 0; k < 6; ++k) x = x * x;
    CHECK(x * x.inverse() == S("1"));
    CHECK(parse_scalar(format_scalar(x)) == x);
}

TEST_CASE("scalar square roots") {
    CHECK(scalar_sqrt(S("12")) == S("2*sqrt3"));
    CHECK(scalar_sqrt(S("9")) == S("3"));
    CHECK(scalar_sqrt(S("6")) == S("sqrt6"));
    CHECK(scalar_sqrt(S("4/9")) == S("2/3"));
    CHECK(scalar_sqrt(S("1/6")) == S("1/6*sqrt6"));
    CHECK(scalar_sqrt(S("-6")) == S("sqrt6") * S("i"));
    CHECK(scalar_sqrt(S("0")) == Scalar());
    CHECK(!scalar_sqrt(S("5")).has_value());
    CHECK(!scalar_sqrt(S("sqrt2")).has_value());
    CHECK(!scalar_sqrt(S("i")).has_value());
}
