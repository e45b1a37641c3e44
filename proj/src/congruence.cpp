#include "endsym/congruence.hpp"

#include <algorithm>
#include <map>

#include "endsym/asymmetry.hpp"
#include "endsym/continuants.hpp"

namespace endsym {

namespace {

using boost::multiprecision::abs;

// Residue scan in 64-bit arithmetic. Caller guarantees alpha < 2^31 so every
// intermediate stays below 2^34.
std::vector<Integer> scan_roots_small(std::int64_t n, std::int64_t constant, std::int64_t alpha) {
    std::vector<Integer> roots;
    const std::int64_t n_mod = ((n % alpha) + alpha) % alpha;
    const std::int64_t c_mod = ((constant % alpha) + alpha) % alpha;
    // f(beta) = beta^2 + n beta + constant; f(beta + 1) - f(beta) = 2 beta + 1 + n.
    std::int64_t value = (1 + n_mod + c_mod) % alpha;
    for (std::int64_t beta = 1; beta < alpha; ++beta) {
        if (value == 0) roots.emplace_back(beta);
        value = (value + 2 * beta + 1 + n_mod) % alpha;
    }
    return roots;
}

std::vector<Integer> scan_roots(const Integer& n, const Integer& constant, const Integer& alpha) {
    std::vector<Integer> roots;
    const Integer n_mod = mod_floor(n, alpha);
    Integer value = mod_floor(1 + n_mod + constant, alpha);
    for (Integer beta = 1; beta < alpha; ++beta) {
        if (value == 0) roots.push_back(beta);
        value = mod_floor(value + 2 * beta + 1 + n_mod, alpha);
    }
    return roots;
}

std::vector<Integer> divisors(Integer value) {
    value = abs(value);
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= value; ++d) {
        if (value % d != 0) continue;
        small.push_back(d);
        if (d * d != value) large.push_back(value / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// gamma(gamma - |n|) + (-1)^s and eta(eta - 2|n|) + 4 (-1)^s; a modulus satisfies the
// condition when it divides the value.
Integer gamma_value(const CongruenceSpec& spec, const Integer& gamma) {
    return gamma * (gamma - abs(spec.n)) + sign_power(spec.s);
}

Integer eta_value(const CongruenceSpec& spec, const Integer& eta) {
    return eta * (eta - 2 * abs(spec.n)) + 4 * sign_power(spec.s);
}

bool has_expansion_with_value(const Integer& alpha, const Integer& beta, const Integer& value) {
    RationalPair pair(alpha, beta);
    for (Parity p : {Parity::even, Parity::odd})
        if (anticontinuant(expand_with_parity(pair, p)) == value) return true;
    return false;
}

}  // namespace

CongruenceSpec CongruenceSpec::make(Integer n, int s) {
    if (s != 0 && s != 1) throw DomainError("s must be 0 or 1, got " + std::to_string(s));
    return {std::move(n), s == 0 ? Parity::even : Parity::odd};
}

bool CongruenceSpec::is_folded_case() const { return s == Parity::even && abs(n) == 2; }

std::vector<Integer> solve_quadratic(const CongruenceSpec& spec, const Integer& alpha) {
    if (alpha < 1) throw DomainError("alpha must be >= 1, got " + alpha.str());
    constexpr std::int64_t small_limit = std::int64_t{1} << 31;
    std::int64_t a = 0, n = 0;
    if (fits_int64(alpha, a) && a < small_limit && fits_int64(mod_floor(spec.n, alpha), n))
        return scan_roots_small(n, spec.s == Parity::even ? 1 : -1, a);
    return scan_roots(spec.n, sign_power(spec.s), alpha);
}

std::string_view to_string(ExceptionCondition c) {
    switch (c) {
        case ExceptionCondition::small_alpha: return "small_alpha";
        case ExceptionCondition::gamma_condition: return "gamma_condition";
        case ExceptionCondition::eta_condition: return "eta_condition";
    }
    return "unknown";
}

std::vector<ExceptionalModulus> exceptional_candidates(const CongruenceSpec& spec) {
    if (spec.is_folded_case())
        throw DomainError("s = 0 with n = +-2 has no finite exceptional set; use the folded-family operations");
    const Integer m = abs(spec.n);
    std::map<Integer, std::vector<ExceptionalCertificate>> found;

    for (Integer alpha = 1; alpha <= 2 * m; ++alpha)
        found[alpha].push_back({ExceptionCondition::small_alpha, std::nullopt});

    auto add_divisors = [&](const Integer& value, ExceptionCondition cond, const Integer& witness) {
        if (value == 0) throw DomainError("condition value vanishes at witness " + witness.str());
        for (auto& d : divisors(value)) found[d].push_back({cond, witness});
    };
    for (Integer gamma = 1; gamma <= m - 1; ++gamma)
        add_divisors(gamma_value(spec, gamma), ExceptionCondition::gamma_condition, gamma);
    for (Integer eta = 1; eta <= 2 * m - 1; ++eta)
        add_divisors(eta_value(spec, eta), ExceptionCondition::eta_condition, eta);

    std::vector<ExceptionalModulus> out;
    out.reserve(found.size());
    for (auto& [modulus, certs] : found) out.push_back({modulus, std::move(certs)});
    return out;
}

bool certificate_holds(const CongruenceSpec& spec, const Integer& modulus, const ExceptionalCertificate& cert) {
    if (modulus < 1) return false;
    const Integer m = abs(spec.n);
    switch (cert.condition) {
        case ExceptionCondition::small_alpha:
            return modulus <= 2 * m;
        case ExceptionCondition::gamma_condition:
            return cert.witness && *cert.witness >= 1 && *cert.witness <= m - 1 &&
                   mod_floor(gamma_value(spec, *cert.witness), modulus) == 0;
        case ExceptionCondition::eta_condition:
            return cert.witness && *cert.witness >= 1 && *cert.witness <= 2 * m - 1 &&
                   mod_floor(eta_value(spec, *cert.witness), modulus) == 0;
    }
    return false;
}

std::vector<std::pair<Integer, Integer>> true_exceptions(const CongruenceSpec& spec, bool include_negated,
                                                         const Integer& folded_scan_limit) {
    std::vector<Integer> moduli;
    if (spec.is_folded_case()) {
        for (Integer alpha = 1; alpha <= folded_scan_limit; ++alpha) moduli.push_back(alpha);
    } else {
        for (auto& e : exceptional_candidates(spec)) moduli.push_back(e.modulus);
    }

    std::vector<CongruenceSpec> variants{spec};
    if (include_negated && spec.n != 0) variants.push_back(spec.negated());

    std::vector<std::pair<Integer, Integer>> out;
    for (const auto& alpha : moduli) {
        // beta -> whether some congruence it solves is matched by an expansion.
        std::map<Integer, bool> matched;
        for (const auto& v : variants)
            for (auto& beta : solve_quadratic(v, alpha)) {
                bool ok = has_expansion_with_value(alpha, beta, v.n);
                auto [it, inserted] = matched.emplace(beta, ok);
                if (!inserted) it->second = it->second || ok;
            }
        for (auto& [beta, ok] : matched)
            if (!ok) out.emplace_back(alpha, beta);
    }
    return out;
}

FoldedParams folded_normalize(const FoldedParams& p) {
    if (p.b < 1 || p.n < 1 || p.a < 1) throw DomainError("folded parameters b, n, a must be >= 1");
    if (p.epsilon != 1 && p.epsilon != -1) throw DomainError("epsilon must be +1 or -1");
    const Integer d = boost::multiprecision::gcd(p.a, p.n);
    return {p.b * d * d, p.n / d, p.a / d, p.epsilon};
}

std::optional<FoldedForm> classify_folded(const QuotientSequence& q) {
    if (q.empty()) return std::nullopt;
    const auto d = decompose(q);
    if (d.symmetric()) return std::nullopt;
    const Integer delta = (d.depth() % 2 == 0) ? d.c : Integer(-d.c);  // head entry - pivot
    const Integer& pivot = *d.pivot;
    if (d.core.empty() && abs(delta) == 2) return FoldedForm{1, std::nullopt, pivot};
    if (d.core.size() == 2 && delta == 1 && d.core[1] == 1) return FoldedForm{2, d.core[0], pivot};
    if (d.core.size() == 2 && delta == -1 && d.core[0] == 1) return FoldedForm{3, d.core[1], pivot};
    return std::nullopt;
}

std::pair<QuotientSequence, FoldedForm> folded_expand_classify(const FoldedParams& p) {
    if (boost::multiprecision::gcd(p.a, p.n) != 1) throw DomainError("folded parameters must be normalized");
    const Integer alpha = p.alpha(), beta = p.beta();
    if (!(0 < beta && beta < alpha))
        throw DomainError("folded pair needs 0 < beta < alpha, got " + beta.str() + "/" + alpha.str());
    // (beta + epsilon)^2 = 0 is the s = 0 congruence, so the even-length expansion is the one
    // carrying anticontinuant 2 epsilon.
    auto q = expand_with_parity(RationalPair(alpha, beta), Parity::even);
    auto form = classify_folded(q);
    if (!form)
        throw ClassificationError("expansion " + to_string(q) + " of " + alpha.str() + "/" + beta.str() +
                                      " matches no folded form",
                                  q);
    return {std::move(q), *form};
}

}  // namespace endsym
