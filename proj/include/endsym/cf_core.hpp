#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "endsym/integer.hpp"

namespace endsym {

/// Finite sequence of partial quotients q_0, ..., q_{s-1}; every entry is >= 1.
///
/// An empty sequence is allowed (it is the empty core of an asymmetry type) but
/// cannot be evaluated as a fraction.
class QuotientSequence {
public:
    QuotientSequence() = default;
    explicit QuotientSequence(std::vector<Integer> entries);
    QuotientSequence(std::initializer_list<long long> entries);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const Integer& operator[](std::size_t i) const { return entries_[i]; }
    const Integer& front() const { return entries_.front(); }
    const Integer& back() const { return entries_.back(); }
    std::span<const Integer> entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    Parity length_parity() const { return parity_of(entries_.size()); }

    /// First entry is 1 exactly when the last entry is 1.
    bool satisfies_convention() const;

    QuotientSequence reversed() const;

    /// Parses "3,1,1,3". Whitespace is not accepted.
    static QuotientSequence parse(std::string_view text);

    friend bool operator==(const QuotientSequence&, const QuotientSequence&) = default;
    friend std::strong_ordering operator<=>(const QuotientSequence& a, const QuotientSequence& b);

private:
    std::vector<Integer> entries_;
};

/// Comma-separated rendering, "3,1,1,3".
std::string to_string(const QuotientSequence& q, char separator = ',');

/// Reduced fraction alpha/beta with 1 <= beta <= alpha.
class RationalPair {
public:
    RationalPair(Integer alpha, Integer beta);

    const Integer& alpha() const { return alpha_; }
    const Integer& beta() const { return beta_; }

    friend bool operator==(const RationalPair&, const RationalPair&) = default;

private:
    Integer alpha_;
    Integer beta_;
};

struct ParityPrediction {
    Integer u;
    Integer v;
    Integer v_inverse;
    bool same_side = false;
    Parity predicted_parity = Parity::even;
};

/// Expansion of alpha/beta chosen so that the final quotient is 1 iff the first is.
QuotientSequence expand(const RationalPair& pair);

/// The expansion of alpha/beta whose length has the requested parity.
/// Throws DomainError for (1, 1) with even parity.
QuotientSequence expand_with_parity(const RationalPair& pair, Parity parity);

/// Numerator and denominator of the continued fraction with quotients `q`.
RationalPair evaluate(const QuotientSequence& q);

/// Predicts the length parity of expand(u/v) from the position of v and its
/// inverse modulo u relative to u/2: same side means odd length.
ParityPrediction parity_by_inverse(const Integer& u, const Integer& v);

/// Smallest positive inverse of v modulo u (u >= 2, gcd(u, v) = 1).
Integer modular_inverse(const Integer& v, const Integer& u);

}  // namespace endsym
