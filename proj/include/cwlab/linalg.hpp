#pragma once

#include <vector>

#include "cwlab/errors.hpp"
#include "cwlab/scalar.hpp"

namespace cwlab {

struct SpanSolution {
    std::vector<Scalar> candidate;  // one coefficient per column
    bool exact;                     // true iff columns * candidate == rhs
};

/// Exact Gauss-Jordan over the field: solves columns * c = rhs. Throws
/// DependentBasis when the columns are linearly dependent. When rhs is
/// outside the column span, exact is false and candidate holds the
/// pivot-row solution (a witness for residual construction).
SpanSolution solve_span(const std::vector<std::vector<Scalar>>& columns,
                        const std::vector<Scalar>& rhs);

}  // namespace cwlab
