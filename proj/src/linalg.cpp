#include "cwlab/linalg.hpp"

#include <utility>

namespace cwlab {

SpanSolution solve_span(const std::vector<std::vector<Scalar>>& columns,
                        const std::vector<Scalar>& rhs) {
    std::size_t k = columns.size();
    std::size_t dim = rhs.size();
    for (const auto& col : columns)
        if (col.size() != dim) throw DimensionMismatch("solve_span: ragged columns");

    // Augmented matrix [A | b], rows = dim, cols = k + 1.
    std::vector<std::vector<Scalar>> a(dim, std::vector<Scalar>(k + 1));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < k; ++c) a[r][c] = columns[c][r];
        a[r][k] = rhs[r];
    }

    std::vector<std::size_t> pivot_row(k);
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = dim;
        for (std::size_t r = next_row; r < dim; ++r)
            if (!a[r][col].is_zero()) { pivot = r; break; }
        if (pivot == dim)
            throw DependentBasis("column " + std::to_string(col) +
                                 " is a linear combination of earlier columns");
        if (pivot != next_row) std::swap(a[pivot], a[next_row]);
        Scalar inv = a[next_row][col].inverse();
        for (std::size_t c = col; c <= k; ++c) a[next_row][c] = inv * a[next_row][c];
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == next_row || a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (std::size_t c = col; c <= k; ++c) a[r][c] -= f * a[next_row][c];
        }
        pivot_row[col] = next_row;
        ++next_row;
    }

    SpanSolution out;
    out.candidate.resize(k);
    for (std::size_t col = 0; col < k; ++col) out.candidate[col] = a[pivot_row[col]][k];
    out.exact = true;
    for (std::size_t r = next_row; r < dim; ++r)
        if (!a[r][k].is_zero()) { out.exact = false; break; }
    return out;
}

}  // namespace cwlab
