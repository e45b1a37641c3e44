#pragma once

#include <cstddef>

#include "endsym/cf_core.hpp"

namespace endsym {

/// Signed index into a quotient sequence. Ranges are inclusive [i, j] and may be
/// empty (j = i - 1) or "sub-empty" (j = i - 2).
using Index = std::ptrdiff_t;

/// Continuant [q_i, ..., q_j], built by K_{i,j} = q_j K_{i,j-1} + K_{i,j-2}
/// from K_{i,i-2} = 0 and K_{i,i-1} = 1. Requires 0 <= i <= j + 2 <= size + 1.
Integer continuant_range(const QuotientSequence& q, Index i, Index j);

/// Continuant of the whole sequence (1 for the empty sequence).
Integer continuant(const QuotientSequence& q);

/// Anticontinuant [q_i, ..., q_j]* = K_{i,j-1} - K_{i+1,j}.
/// Requires 0 <= i <= j + 1 <= size.
Integer anticontinuant_range(const QuotientSequence& q, Index i, Index j);

/// Same value as anticontinuant_range, computed by peeling both ends:
/// A_{i,j} = (q_i - q_j) K_{i+1,j-1} - A_{i+1,j-1}.
Integer anticontinuant_range_by_recursion(const QuotientSequence& q, Index i, Index j);

/// Anticontinuant of the whole sequence (0 for the empty sequence).
Integer anticontinuant(const QuotientSequence& q);

/// K_{k,n} K_{l,m} - K_{k,m} K_{l,n} - (-1)^{l+m+1} K_{k,l-2} K_{m+2,n}.
///
/// Always zero for indices with 0 <= k <= l <= m + 2 and m <= n <= size - 1; the
/// residual is returned so that callers can check it.
Integer euler_residual(const QuotientSequence& q, Index k, Index l, Index m, Index n);

/// F_0 = 0, F_1 = F_2 = 1. F_{s+1} is the least continuant of length s.
Integer fibonacci(std::size_t k);

}  // namespace endsym
