#include "endsym/asymmetry.hpp"

#include <algorithm>
#include <functional>

#include "endsym/continuants.hpp"

namespace endsym {

namespace {

std::strong_ordering compare(const Integer& a, const Integer& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// Fixed values sort before the free parameter.
std::strong_ordering compare(const PatternEntry& a, const PatternEntry& b) {
    if (a && b) return compare(*a, *b);
    if (!a && !b) return std::strong_ordering::equal;
    return a ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<PatternEntry> fixed_pattern(const QuotientSequence& q) {
    return std::vector<PatternEntry>(q.begin(), q.end());
}

std::vector<Integer> slice(const QuotientSequence& q, std::size_t from, std::size_t to) {
    return std::vector<Integer>(q.begin() + static_cast<std::ptrdiff_t>(from),
                                q.begin() + static_cast<std::ptrdiff_t>(to));
}

ExtendedAsymmetryType negate_reverse(const ExtendedAsymmetryType& t) {
    return {-t.c, t.core.reversed(), t.sigma};
}

TypeFamily negate_reverse(const TypeFamily& f) {
    return {-f.c, std::vector<PatternEntry>(f.pattern.rbegin(), f.pattern.rend()), f.sigma};
}

// The two families with value 2: (1 ; p,1) at even depth and (1 ; 1,p) at odd depth.
std::vector<TypeFamily> families_for_two() {
    return {
        TypeFamily{1, {std::nullopt, Integer(1)}, Parity::even},
        TypeFamily{1, {Integer(1), std::nullopt}, Parity::odd},
    };
}

// Calls `visit` for every sequence of `length` positive entries whose continuant is <= bound.
void for_each_bounded_sequence(std::size_t length, const Integer& bound,
                               const std::function<void(const std::vector<Integer>&)>& visit) {
    std::vector<Integer> seq;
    seq.reserve(length);
    // prev/cur continuants of the prefix built so far.
    std::function<void(const Integer&, const Integer&)> extend = [&](const Integer& prev, const Integer& cur) {
        if (seq.size() == length) {
            visit(seq);
            return;
        }
        for (Integer e = 1;; ++e) {
            Integer next = e * cur + prev;
            if (next > bound) break;
            seq.push_back(e);
            extend(cur, next);
            seq.pop_back();
        }
    };
    extend(Integer(0), Integer(1));
}

// Finite types with a positive target value, both depth parities, family members excluded.
std::vector<ExtendedAsymmetryType> enumerate_positive(const Integer& n, const std::vector<TypeFamily>& families) {
    std::vector<ExtendedAsymmetryType> found;
    auto keep = [&](ExtendedAsymmetryType t) {
        for (const auto& f : families)
            if (f.matches(t)) return;
        if (type_value(t) == n) found.push_back(std::move(t));
    };

    for (Parity sigma : {Parity::even, Parity::odd}) {
        keep({n, QuotientSequence{}, sigma});
        // |value| >= c F_{lambda+1}, so lambda and c are bounded by n.
        for (std::size_t lambda = 1; fibonacci(lambda + 1) <= n; ++lambda) {
            const Integer c_max = n / fibonacci(lambda + 1);
            // Value >= continuant of the core without its free end, and each entry is <= n.
            // At even depth the free end is the first entry, at odd depth the last.
            for_each_bounded_sequence(lambda - 1, n, [&](const std::vector<Integer>& rest) {
                for (Integer free = 1; free <= n; ++free) {
                    std::vector<Integer> core;
                    core.reserve(lambda);
                    if (sigma == Parity::even) core.push_back(free);
                    core.insert(core.end(), rest.begin(), rest.end());
                    if (sigma == Parity::odd) core.push_back(free);
                    QuotientSequence x(std::move(core));
                    for (Integer c = 1; c <= c_max; ++c) keep({c, x, sigma});
                }
            });
        }
    }
    return found;
}

}  // namespace

std::strong_ordering operator<=>(const ExtendedAsymmetryType& a, const ExtendedAsymmetryType& b) {
    if (auto r = a.core.size() <=> b.core.size(); r != 0) return r;
    if (auto r = compare(a.c, b.c); r != 0) return r;
    if (auto r = a.core <=> b.core; r != 0) return r;
    return a.sigma <=> b.sigma;
}

std::strong_ordering operator<=>(const CoarseType& a, const CoarseType& b) {
    if (auto r = a.core.size() <=> b.core.size(); r != 0) return r;
    if (auto r = compare(a.c, b.c); r != 0) return r;
    for (std::size_t i = 0; i < a.core.size(); ++i)
        if (auto r = compare(a.core[i], b.core[i]); r != 0) return r;
    return std::strong_ordering::equal;
}

bool TypeFamily::matches(const ExtendedAsymmetryType& t) const {
    if (t.sigma != sigma || t.c != c || t.core.size() != pattern.size()) return false;
    std::optional<Integer> p;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i]) {
            if (*pattern[i] != t.core[i]) return false;
        } else if (p && *p != t.core[i]) {
            return false;
        } else {
            p = t.core[i];
        }
    }
    return true;
}

ExtendedAsymmetryType TypeFamily::instance(const Integer& p) const {
    if (p < 1) throw DomainError("family parameter must be >= 1");
    std::vector<Integer> core;
    for (const auto& e : pattern) core.push_back(e ? *e : p);
    return {c, QuotientSequence(std::move(core)), sigma};
}

std::string pattern_to_string(const std::vector<PatternEntry>& pattern, char separator) {
    std::string out;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (i) out += separator;
        out += pattern[i] ? pattern[i]->str() : "p";
    }
    return out;
}

std::string to_string(const CoarseType& t) {
    return "(" + t.c.str() + " ;" + (t.core.empty() ? "" : " " + pattern_to_string(t.core)) + ")";
}

std::string to_string(const ExtendedAsymmetryType& t) {
    return "(" + t.c.str() + " ;" + (t.core.empty() ? "" : " " + to_string(t.core)) + " ; " +
           std::string(to_string(t.sigma)) + ")";
}

std::string to_string(const TypeFamily& f) {
    return "(" + f.c.str() + " ; " + pattern_to_string(f.pattern) + " ; " + std::string(to_string(f.sigma)) + ")";
}

bool TypeCatalog::contains(const ExtendedAsymmetryType& t) const {
    if (std::binary_search(finite_types.begin(), finite_types.end(), t)) return true;
    return std::any_of(parametric_families.begin(), parametric_families.end(),
                       [&](const TypeFamily& f) { return f.matches(t); });
}

std::vector<CoarseType> TypeCatalog::coarse_projection(std::optional<Parity> sigma) const {
    std::vector<CoarseType> out;
    for (const auto& t : finite_types)
        if (!sigma || t.sigma == *sigma) out.push_back(coarse(t));
    for (const auto& f : parametric_families)
        if (!sigma || f.sigma == *sigma) out.push_back({f.c, f.pattern});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

AsymmetryDecomposition decompose(const QuotientSequence& q) {
    if (q.empty()) throw DomainError("cannot decompose an empty sequence");
    const std::size_t len = q.size();
    std::size_t d = 0;
    while (d + 1 < len - d && q[d] == q[len - 1 - d]) ++d;

    AsymmetryDecomposition out;
    if (d + 1 >= len - d) {
        out.c = 0;
        out.outer = QuotientSequence(slice(q, 0, len / 2));
        out.core = QuotientSequence(slice(q, len / 2, len - len / 2));
        return out;
    }
    out.outer = QuotientSequence(slice(q, 0, d));
    out.pivot = q[len - 1 - d];
    out.c = q[d] - *out.pivot;
    if (d % 2 == 1) out.c = -out.c;
    out.core = QuotientSequence(slice(q, d + 1, len - 1 - d));
    return out;
}

QuotientSequence compose(const AsymmetryDecomposition& d) {
    std::vector<Integer> seq(d.outer.begin(), d.outer.end());
    if (d.c == 0) {
        if (d.pivot) throw DomainError("a symmetric decomposition has no pivot");
        if (d.core.size() > 1) throw DomainError("a symmetric decomposition has at most one middle entry");
        seq.insert(seq.end(), d.core.begin(), d.core.end());
    } else {
        if (!d.pivot) throw DomainError("an asymmetric decomposition needs a pivot");
        Integer head = *d.pivot + (d.depth() % 2 == 0 ? d.c : Integer(-d.c));
        if (head < 1)
            throw DomainError("pivot " + d.pivot->str() + " with c = " + d.c.str() + " gives entry " + head.str());
        seq.push_back(std::move(head));
        seq.insert(seq.end(), d.core.begin(), d.core.end());
        seq.push_back(*d.pivot);
    }
    seq.insert(seq.end(), d.outer.entries().rbegin(), d.outer.entries().rend());
    if (seq.empty()) throw DomainError("decomposition describes an empty sequence");
    return QuotientSequence(std::move(seq));
}

std::optional<ExtendedAsymmetryType> extended_type(const QuotientSequence& q) {
    auto d = decompose(q);
    if (d.symmetric()) return std::nullopt;
    return ExtendedAsymmetryType{std::move(d.c), std::move(d.core), parity_of(d.depth())};
}

CoarseType coarse(const ExtendedAsymmetryType& t) { return {t.c, fixed_pattern(t.core)}; }

Integer type_value(const ExtendedAsymmetryType& t) {
    if (t.c == 0) throw DomainError("symmetric types (c = 0) have value 0 and no finite catalog");
    const Integer k = continuant(t.core);
    const Integer a = anticontinuant(t.core);
    return t.c * k - sign_power(t.sigma) * a;
}

TypeCatalog enumerate_types(const Integer& n, LambdaFilter filter) {
    if (n == 0) throw DomainError("anticontinuant 0 means symmetric: every sequence (0 ; x) qualifies");
    const Integer magnitude = boost::multiprecision::abs(n);

    std::vector<TypeFamily> families;
    if (magnitude == 2) families = families_for_two();
    auto types = enumerate_positive(magnitude, families);

    if (n < 0) {
        for (auto& t : types) t = negate_reverse(t);
        for (auto& f : families) f = negate_reverse(f);
    }

    auto wanted = [filter](std::size_t lambda) {
        return filter == LambdaFilter::both || (filter == LambdaFilter::even) == (lambda % 2 == 0);
    };
    TypeCatalog catalog;
    catalog.target = n;
    for (auto& t : types)
        if (wanted(t.lambda())) catalog.finite_types.push_back(std::move(t));
    for (auto& f : families)
        if (wanted(f.pattern.size())) catalog.parametric_families.push_back(std::move(f));
    std::sort(catalog.finite_types.begin(), catalog.finite_types.end());
    catalog.finite_types.erase(std::unique(catalog.finite_types.begin(), catalog.finite_types.end()),
                               catalog.finite_types.end());
    return catalog;
}

}  // namespace endsym
