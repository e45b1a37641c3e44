#include "endsym/continuants.hpp"

#include <string>
#include <utility>

namespace endsym {

namespace {

Index length(const QuotientSequence& q) { return static_cast<Index>(q.size()); }

std::string range_text(Index i, Index j) {
    return "[" + std::to_string(i) + ", " + std::to_string(j) + "]";
}

void check_continuant_range(const QuotientSequence& q, Index i, Index j) {
    if (!(0 <= i && i <= j + 2 && j + 2 <= length(q) + 1))
        throw DomainError("continuant range " + range_text(i, j) + " out of bounds for length " +
                          std::to_string(q.size()));
}

void check_anticontinuant_range(const QuotientSequence& q, Index i, Index j) {
    if (!(0 <= i && i <= j + 1 && j + 1 <= length(q)))
        throw DomainError("anticontinuant range " + range_text(i, j) + " out of bounds for length " +
                          std::to_string(q.size()));
}

// Unchecked forward recursion.
Integer forward_continuant(const QuotientSequence& q, Index i, Index j) {
    if (j == i - 2) return 0;
    Integer before = 0, current = 1;
    for (Index t = i; t <= j; ++t) {
        Integer next = q[static_cast<std::size_t>(t)] * current + before;
        before = std::move(current);
        current = std::move(next);
    }
    return current;
}

}  // namespace

Integer continuant_range(const QuotientSequence& q, Index i, Index j) {
    check_continuant_range(q, i, j);
    return forward_continuant(q, i, j);
}

Integer continuant(const QuotientSequence& q) { return forward_continuant(q, 0, length(q) - 1); }

Integer anticontinuant_range(const QuotientSequence& q, Index i, Index j) {
    check_anticontinuant_range(q, i, j);
    return forward_continuant(q, i, j - 1) - forward_continuant(q, i + 1, j);
}

Integer anticontinuant_range_by_recursion(const QuotientSequence& q, Index i, Index j) {
    check_anticontinuant_range(q, i, j);
    // Peel matching ends until the range has at most one entry; signs alternate.
    Integer total = 0;
    Integer sign = 1;
    while (i < j) {
        const auto& left = q[static_cast<std::size_t>(i)];
        const auto& right = q[static_cast<std::size_t>(j)];
        total += sign * (left - right) * forward_continuant(q, i + 1, j - 1);
        sign = -sign;
        ++i;
        --j;
    }
    return total;
}

Integer anticontinuant(const QuotientSequence& q) {
    if (q.empty()) return 0;
    return anticontinuant_range(q, 0, length(q) - 1);
}

Integer euler_residual(const QuotientSequence& q, Index k, Index l, Index m, Index n) {
    if (!(0 <= k && k <= l && l <= m + 2 && m <= n && n <= length(q) - 1))
        throw DomainError("Euler identity needs 0 <= k <= l <= m+2 and m <= n <= s-1, got (" +
                          std::to_string(k) + ", " + std::to_string(l) + ", " + std::to_string(m) + ", " +
                          std::to_string(n) + ")");
    const Integer lhs = continuant_range(q, k, n) * continuant_range(q, l, m) -
                        continuant_range(q, k, m) * continuant_range(q, l, n);
    const Integer tail = continuant_range(q, k, l - 2) * continuant_range(q, m + 2, n);
    const bool odd_exponent = ((l + m + 1) % 2) != 0;
    return odd_exponent ? Integer(lhs + tail) : Integer(lhs - tail);
}

Integer fibonacci(std::size_t k) {
    Integer a = 0, b = 1;
    for (std::size_t t = 0; t < k; ++t) {
        Integer next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

}  // namespace endsym
