#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cwlab/scalar.hpp"

namespace cwlab {

/// Dense square matrix over the exact field Scalar, row-major.
class Mat {
public:
    Mat() = default;
    explicit Mat(std::size_t n) : n_(n), e_(n * n) {}

    static Mat identity(std::size_t n);
    /// Matrix unit E_rc: single 1 at (row, col), zero-based indices.
    static Mat unit(std::size_t n, std::size_t row, std::size_t col);

    std::size_t n() const { return n_; }
    const Scalar& at(std::size_t row, std::size_t col) const { return e_[row * n_ + col]; }
    Scalar& at(std::size_t row, std::size_t col) { return e_[row * n_ + col]; }

    bool is_zero() const;
    Scalar trace() const;

    Mat operator-() const;
    Mat& operator+=(const Mat& rhs);
    Mat& operator-=(const Mat& rhs);
    friend Mat operator+(Mat lhs, const Mat& rhs) { return lhs += rhs; }
    friend Mat operator-(Mat lhs, const Mat& rhs) { return lhs -= rhs; }
    friend Mat operator*(const Mat& lhs, const Mat& rhs);
    friend Mat operator*(const Scalar& s, const Mat& m);
    friend bool operator==(const Mat& lhs, const Mat& rhs) { return lhs.n_ == rhs.n_ && lhs.e_ == rhs.e_; }
    friend bool operator!=(const Mat& lhs, const Mat& rhs) { return !(lhs == rhs); }

    /// "[["0","1"],["1","0"]]" with format_scalar entries.
    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::vector<Scalar> e_;
};

/// AB - BA, exact. Throws DimensionMismatch.
Mat commutator(const Mat& a, const Mat& b);

}  // namespace cwlab
