#include "cwlab/matrix.hpp"

namespace cwlab {

Mat Mat::identity(std::size_t n) {
    Mat m(n);
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = Scalar::integer(1);
    return m;
}

Mat Mat::unit(std::size_t n, std::size_t row, std::size_t col) {
    Mat m(n);
    m.at(row, col) = Scalar::integer(1);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

Scalar Mat::trace() const {
    Scalar t;
    for (std::size_t k = 0; k < n_; ++k) t += at(k, k);
    return t;
}

Mat Mat::operator-() const {
    Mat out(n_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = -e_[k];
    return out;
}

Mat& Mat::operator+=(const Mat& rhs) {
    if (n_ != rhs.n_) throw DimensionMismatch("matrix addition: " + std::to_string(n_) + " vs " + std::to_string(rhs.n_));
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += rhs.e_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& rhs) {
    if (n_ != rhs.n_) throw DimensionMismatch("matrix subtraction: " + std::to_string(n_) + " vs " + std::to_string(rhs.n_));
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= rhs.e_[k];
    return *this;
}

Mat operator*(const Mat& lhs, const Mat& rhs) {
    if (lhs.n_ != rhs.n_) throw DimensionMismatch("matrix product: " + std::to_string(lhs.n_) + " vs " + std::to_string(rhs.n_));
    std::size_t n = lhs.n_;
    Mat out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& a = lhs.at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) {
                const Scalar& b = rhs.at(k, c);
                if (b.is_zero()) continue;
                out.at(r, c) += a * b;
            }
        }
    return out;
}

Mat operator*(const Scalar& s, const Mat& m) {
    Mat out(m.n_);
    for (std::size_t k = 0; k < m.e_.size(); ++k) out.e_[k] = s * m.e_[k];
    return out;
}

std::string Mat::to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < n_; ++r) {
        if (r > 0) out += ",";
        out += "[";
        for (std::size_t c = 0; c < n_; ++c) {
            if (c > 0) out += ",";
            out += "\"" + format_scalar(at(r, c)) + "\"";
        }
        out += "]";
    }
    out += "]";
    return out;
}

Mat commutator(const Mat& a, const Mat& b) {
    if (a.n() != b.n()) throw DimensionMismatch("commutator: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
    return a * b - b * a;
}

}  // namespace cwlab
