#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "cwlab/errors.hpp"

namespace cwlab {

/// Exact rational with arbitrary-precision numerator/denominator.
/// Canonical form (gcd 1, positive denominator) is maintained by GMP.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string rational_to_string(const Rational& r);

/// Element of the field Q(i, sqrt2, sqrt3): eight Rational coordinates over
/// the basis {1, sqrt2, sqrt3, sqrt6} x {1, i}. The representation is unique,
/// so equality is coordinate-wise and all arithmetic is exact.
class Scalar {
public:
    enum Radical { kOne = 0, kSqrt2 = 1, kSqrt3 = 2, kSqrt6 = 3 };

    Scalar() = default;  // zero

    static Scalar from_rational(const Rational& r);
    static Scalar integer(long v);
    static Scalar rational(long num, long den);
    static Scalar i();
    static Scalar sqrt2();
    static Scalar sqrt3();
    static Scalar sqrt6();

    /// Coordinate on basis element radical * (imag ? i : 1).
    const Rational& coord(Radical radical, bool imag) const { return c_[index(radical, imag)]; }
    void set_coord(Radical radical, bool imag, const Rational& value) { c_[index(radical, imag)] = value; }

    bool is_zero() const;
    /// True when only the (1, real) coordinate may be nonzero.
    bool is_rational() const;
    bool is_real() const;
    /// Value of the (1, real) coordinate; meaningful when is_rational().
    const Rational& rational_part() const { return c_[0]; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(const Scalar& lhs, const Scalar& rhs);
    friend Scalar operator/(const Scalar& lhs, const Scalar& rhs);
    friend bool operator==(const Scalar& lhs, const Scalar& rhs) { return lhs.c_ == rhs.c_; }
    friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }

    /// Multiplicative inverse, found by solving the 8x8 rational system
    /// x * (*this) = 1. Throws DivisionByZero on zero.
    Scalar inverse() const;

    /// Floating-point value; used only by diagram rendering.
    double to_double_real() const;
    double to_double_imag() const;

private:
    static std::size_t index(Radical radical, bool imag) {
        return static_cast<std::size_t>(radical) * 2 + (imag ? 1 : 0);
    }

    std::array<Rational, 8> c_{};
};

/// Square root of a rational Scalar when the result stays in the field, i.e.
/// when the squarefree part of |value| is one of {1, 2, 3, 6}. Negative input
/// yields i times the positive root. Non-rational or out-of-field input
/// returns nullopt.
std::optional<Scalar> scalar_sqrt(const Scalar& value);

/// Parses the scalar grammar:
///   expr     := term (('+' | '-') term)*
///   term     := factor ('*' factor)*
///   factor   := rational | 'i' | 'sqrt2' | 'sqrt3' | 'sqrt6' | '(' expr ')' | '-' factor
///   rational := integer ('/' posinteger)?
/// Whitespace is insignificant. Throws ParseError with byte offset and the
/// expected-token set.
Scalar parse_scalar(const std::string& text);

/// Canonical rendering: zero prints "0"; otherwise terms in the fixed order
/// (1, sqrt2, sqrt3, sqrt6) x (real, imaginary), joined with " + " / " - ".
/// parse_scalar(format_scalar(x)) == x for every Scalar.
std::string format_scalar(const Scalar& x);

}  // namespace cwlab
