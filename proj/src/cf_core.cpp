#include "endsym/cf_core.hpp"

#include <algorithm>
#include <utility>

namespace endsym {

namespace {

Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

// Plain Euclidean algorithm; the last quotient is >= 2 unless the result is [1].
std::vector<Integer> euclid_quotients(Integer a, Integer b) {
    std::vector<Integer> out;
    while (b != 0) {
        Integer q, r;
        boost::multiprecision::divide_qr(a, b, q, r);
        out.push_back(std::move(q));
        a = std::move(b);
        b = std::move(r);
    }
    return out;
}

// Replaces the final quotient q by (q - 1, 1).
void split_last(std::vector<Integer>& q) {
    q.back() -= 1;
    q.emplace_back(1);
}

}  // namespace

QuotientSequence::QuotientSequence(std::vector<Integer> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_)
        if (e < 1) throw DomainError("partial quotients must be >= 1, got " + e.str());
}

QuotientSequence::QuotientSequence(std::initializer_list<long long> entries)
    : QuotientSequence(std::vector<Integer>(entries.begin(), entries.end())) {}

bool QuotientSequence::satisfies_convention() const {
    if (entries_.empty()) return false;
    return (entries_.front() == 1) == (entries_.back() == 1);
}

QuotientSequence QuotientSequence::reversed() const {
    QuotientSequence r;
    r.entries_.assign(entries_.rbegin(), entries_.rend());
    return r;
}

QuotientSequence QuotientSequence::parse(std::string_view text) {
    std::vector<Integer> entries;
    if (text.empty()) return QuotientSequence{};
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        if (piece.empty()) throw DomainError("empty entry in sequence '" + std::string(text) + "'");
        entries.push_back(parse_integer(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return QuotientSequence(std::move(entries));
}

std::strong_ordering operator<=>(const QuotientSequence& a, const QuotientSequence& b) {
    return std::lexicographical_compare_three_way(
        a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
        [](const Integer& x, const Integer& y) {
            return x < y ? std::strong_ordering::less
                         : (y < x ? std::strong_ordering::greater : std::strong_ordering::equal);
        });
}

std::string to_string(const QuotientSequence& q, char separator) {
    std::string out;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (i) out += separator;
        out += q[i].str();
    }
    return out;
}

RationalPair::RationalPair(Integer alpha, Integer beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_ < 1) throw DomainError("alpha must be >= 1, got " + alpha_.str());
    if (beta_ < 1 || beta_ > alpha_)
        throw DomainError("beta must satisfy 1 <= beta <= alpha, got " + beta_.str() + "/" + alpha_.str());
    if (gcd(alpha_, beta_) != 1)
        throw DomainError("alpha and beta must be coprime, got " + alpha_.str() + "/" + beta_.str());
}

QuotientSequence expand(const RationalPair& pair) {
    auto q = euclid_quotients(pair.alpha(), pair.beta());
    if ((q.front() == 1) != (q.back() == 1)) split_last(q);
    return QuotientSequence(std::move(q));
}

QuotientSequence expand_with_parity(const RationalPair& pair, Parity parity) {
    auto q = euclid_quotients(pair.alpha(), pair.beta());
    if (parity_of(q.size()) != parity) {
        if (q.size() == 1 && q.front() == 1)
            throw DomainError("1/1 has no expansion of even length");
        split_last(q);
    }
    return QuotientSequence(std::move(q));
}

RationalPair evaluate(const QuotientSequence& q) {
    if (q.empty()) throw DomainError("cannot evaluate an empty quotient sequence");
    // Walk from the back: (num, den) of [q_i; q_{i+1}, ...].
    Integer num = 1, den = 0;
    for (auto it = q.entries().rbegin(); it != q.entries().rend(); ++it) {
        Integer next = *it * num + den;
        den = std::move(num);
        num = std::move(next);
    }
    return RationalPair(std::move(num), std::move(den));
}

Integer modular_inverse(const Integer& v, const Integer& u) {
    if (u < 2) throw DomainError("modulus must be >= 2, got " + u.str());
    Integer old_r = mod_floor(v, u), r = u;
    Integer old_s = 1, s = 0;
    while (r != 0) {
        Integer q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1) throw DomainError(v.str() + " is not invertible modulo " + u.str());
    return mod_floor(old_s, u);
}

ParityPrediction parity_by_inverse(const Integer& u, const Integer& v) {
    if (u < 2) throw DomainError("u must be >= 2, got " + u.str());
    if (v <= 0 || v >= u) throw DomainError("v must satisfy 0 < v < u, got " + v.str());
    if (gcd(u, v) != 1) throw DomainError("u and v must be coprime");
    ParityPrediction p;
    p.u = u;
    p.v = v;
    p.v_inverse = modular_inverse(v, u);
    // Compare against u/2 without fractions: x <= u/2  <=>  2x <= u.
    const bool v_low = 2 * v <= u;
    const bool inv_low = 2 * p.v_inverse <= u;
    p.same_side = v_low == inv_low;
    p.predicted_parity = p.same_side ? Parity::odd : Parity::even;
    return p;
}

}  // namespace endsym
