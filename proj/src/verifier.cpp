#include "endsym/verifier.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>
#include <thread>

#include "endsym/continuants.hpp"

namespace endsym {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Splits [first, last] into contiguous blocks, runs `work` on each (possibly on
// separate threads) and merges the partial reports in ascending block order.
VerificationReport sweep(const Integer& first, const Integer& last, SweepOptions options,
                         const std::function<VerificationReport(const Integer&, const Integer&)>& work) {
    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    if (last < first) return work(first, last);
    const Integer span = last - first + 1;
    if (span < threads) threads = span.convert_to<unsigned>();
    if (threads <= 1) return work(first, last);

    // Later moduli cost more (a scan over beta < alpha); cut blocks by equal sum of alpha.
    std::vector<std::pair<Integer, Integer>> blocks;
    const Integer total = (first + last) * span / 2;
    Integer lo = first, acc = 0;
    for (Integer a = first; a <= last; ++a) {
        acc += a;
        if (acc * threads >= total * (blocks.size() + 1) || a == last) {
            blocks.emplace_back(lo, a);
            lo = a + 1;
        }
    }
    std::vector<std::future<VerificationReport>> parts;
    for (auto& [b_lo, b_hi] : blocks)
        parts.push_back(std::async(std::launch::async, work, b_lo, b_hi));
    VerificationReport merged = parts.front().get();
    for (std::size_t i = 1; i < parts.size(); ++i) merged.merge(parts[i].get());
    return merged;
}

Violation violation(std::string check, const Integer& alpha, const Integer& beta, QuotientSequence q,
                    std::string detail) {
    return {std::move(check), alpha, beta, std::move(q), std::move(detail)};
}

// Checks for one coprime pair; returns the number of failed checks appended.
std::size_t check_pair(const Integer& alpha, const Integer& beta, std::vector<Violation>& out) {
    const std::size_t before = out.size();
    const RationalPair pair(alpha, beta);
    const QuotientSequence q = expand(pair);

    if (!q.satisfies_convention())
        out.push_back(violation("convention", alpha, beta, q, "expansion violates the end-coefficient convention"));
    if (!(evaluate(q) == pair))
        out.push_back(violation("round_trip", alpha, beta, q, "evaluate(expand) differs from the pair"));

    for (Parity p : {Parity::even, Parity::odd}) {
        const QuotientSequence e = expand_with_parity(pair, p);
        const Integer a = anticontinuant(e);
        const Integer residue = mod_floor(beta * beta + a * beta + sign_power(e.length_parity()), alpha);
        if (residue != 0)
            out.push_back(violation("cf_congruence", alpha, beta, e,
                                    "beta^2 + [q]* beta + (-1)^len = " + residue.str() + " (mod alpha)"));
    }

    if (2 * abs(anticontinuant(q)) >= continuant(q))
        out.push_back(violation("half_bound", alpha, beta, q, "|[q]*| >= K(q)/2"));

    const auto prediction = parity_by_inverse(alpha, beta);
    if (prediction.predicted_parity != q.length_parity())
        out.push_back(violation("parity_lemma", alpha, beta, q,
                                "inverse " + prediction.v_inverse.str() + " predicts " +
                                    std::string(to_string(prediction.predicted_parity)) + " length"));
    return out.size() - before;
}

QuotientSequence random_sequence(std::mt19937_64& rng, std::size_t max_len, std::uint64_t max_entry) {
    const std::size_t len = 1 + static_cast<std::size_t>(rng() % max_len);
    std::vector<Integer> entries;
    for (std::size_t i = 0; i < len; ++i) entries.emplace_back(1 + rng() % max_entry);
    return QuotientSequence(std::move(entries));
}

Index pick(std::mt19937_64& rng, Index lo, Index hi) {
    return lo + static_cast<Index>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::size_t check_random_sequence(std::mt19937_64& rng, std::vector<Violation>& out) {
    const std::size_t before = out.size();
    const QuotientSequence q = random_sequence(rng, 12, 9);
    const auto s = static_cast<Index>(q.size());
    const auto fraction = evaluate(q);
    auto record = [&](std::string check, std::string detail) {
        out.push_back(violation(std::move(check), fraction.alpha(), fraction.beta(), q, std::move(detail)));
    };

    const Index n = pick(rng, 0, s - 1);
    const Index m = pick(rng, -2, n);
    const Index l = pick(rng, 0, m + 2);
    const Index k = pick(rng, 0, l);
    const Integer residual = euler_residual(q, k, l, m, n);
    if (residual != 0)
        record("euler_identity", "residual " + residual.str() + " at (k,l,m,n) = (" + std::to_string(k) + "," +
                                     std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + ")");

    const QuotientSequence r = q.reversed();
    if (anticontinuant(r) != -anticontinuant(q)) record("reversal_antisymmetry", "[rev q]* != -[q]*");
    if (continuant(r) != continuant(q)) record("continuant_symmetry", "K(rev q) != K(q)");

    const Index i = pick(rng, 0, s);
    const Index j = pick(rng, i - 1, s - 1);
    if (anticontinuant_range(q, i, j) != anticontinuant_range_by_recursion(q, i, j))
        record("anticontinuant_recursion", "definition and recursion differ on [" + std::to_string(i) + ", " +
                                               std::to_string(j) + "]");
    return out.size() - before;
}

struct ModulusOutcome {
    std::uint64_t checked = 0;
    std::uint64_t matches = 0;
    std::vector<Violation> violations;
    std::vector<CoarseCounterexample> coarse;
};

// Roots versus type-matching betas at one modulus.
ModulusOutcome examine_modulus(const CongruenceSpec& spec, const TypeCatalog& catalog,
                               const std::vector<CoarseType>* coarse_list, const Integer& alpha) {
    ModulusOutcome result;
    const auto roots = solve_quadratic(spec, alpha);
    for (Integer beta = 1; beta < alpha; ++beta) {
        ++result.checked;
        const bool is_root = std::binary_search(roots.begin(), roots.end(), beta);
        if (gcd(alpha, beta) != 1) {
            if (is_root)
                result.violations.push_back(
                    violation("non_coprime_root", alpha, beta, {}, "a root shares a factor with alpha"));
            else
                ++result.matches;
            continue;
        }
        const QuotientSequence q = expand(RationalPair(alpha, beta));
        const bool parity_ok = q.length_parity() == spec.s;
        const bool by_value = parity_ok && anticontinuant(q) == spec.n;
        const auto type = extended_type(q);
        const bool by_catalog = parity_ok && type && catalog.contains(*type);

        bool agree = true;
        if (by_value != by_catalog) {
            agree = false;
            result.violations.push_back(violation("catalog_disagreement", alpha, beta, q,
                                                  by_value ? "anticontinuant matches but type is not catalogued"
                                                           : "type is catalogued but anticontinuant differs"));
        }
        if (is_root != by_value) {
            agree = false;
            result.violations.push_back(violation(is_root ? "root_without_type" : "type_without_root", alpha, beta,
                                                  q,
                                                  is_root ? "beta is a root but the expansion does not match"
                                                          : "the expansion matches but beta is not a root"));
        }
        if (agree) ++result.matches;

        if (coarse_list) {
            const CoarseType ct = type ? coarse(*type) : CoarseType{0, {}};
            const bool listed = parity_ok && type &&
                                std::binary_search(coarse_list->begin(), coarse_list->end(), ct);
            if (listed != is_root) result.coarse.push_back({alpha, beta, q, ct, is_root});
        }
    }
    return result;
}

}  // namespace

std::string_view to_string(Mode m) { return m == Mode::refined ? "refined" : "coarse"; }

void VerificationReport::merge(VerificationReport&& later) {
    alpha_max = std::max(alpha_max, later.alpha_max);
    alpha_min = std::min(alpha_min, later.alpha_min);
    checked += later.checked;
    matches += later.matches;
    std::move(later.excluded.begin(), later.excluded.end(), std::back_inserter(excluded));
    std::move(later.violations.begin(), later.violations.end(), std::back_inserter(violations));
    std::move(later.coarse_counterexamples.begin(), later.coarse_counterexamples.end(),
              std::back_inserter(coarse_counterexamples));
}

VerificationReport verify_identities(const Integer& max_alpha, std::uint64_t trials, std::uint64_t seed,
                                     SweepOptions options) {
    if (max_alpha < 2) throw DomainError("max_alpha must be >= 2, got " + max_alpha.str());
    VerificationReport report = sweep(Integer(2), max_alpha, options, [](const Integer& lo, const Integer& hi) {
        VerificationReport part;
        part.alpha_min = lo;
        part.alpha_max = hi;
        for (Integer alpha = lo; alpha <= hi; ++alpha)
            for (Integer beta = 1; beta < alpha; ++beta) {
                if (gcd(alpha, beta) != 1) continue;
                ++part.checked;
                if (check_pair(alpha, beta, part.violations) == 0) ++part.matches;
            }
        return part;
    });
    report.kind = "identities";
    report.alpha_min = 2;
    report.alpha_max = max_alpha;

    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++report.checked;
        if (check_random_sequence(rng, report.violations) == 0) ++report.matches;
    }
    return report;
}

VerificationReport verify_main_theorem(const CongruenceSpec& spec, const Integer& alpha_max, Mode mode,
                                       SweepOptions options) {
    if (spec.is_folded_case())
        throw DomainError("s = 0 with n = +-2 is the folded case; the theorem does not apply");
    if (spec.n == 0) throw DomainError("n = 0 (symmetric expansions) has no finite type catalog");
    if (alpha_max < 1) throw DomainError("alpha_max must be >= 1");

    const TypeCatalog catalog =
        enumerate_types(spec.n, spec.s == Parity::even ? LambdaFilter::even : LambdaFilter::odd);
    // The classical list: (c ; x) as realised at even depth.
    const std::vector<CoarseType> coarse_list = catalog.coarse_projection(Parity::even);
    const std::vector<CoarseType>* coarse_ptr = mode == Mode::coarse ? &coarse_list : nullptr;

    std::vector<ExceptionalModulus> candidates;
    for (auto& e : exceptional_candidates(spec))
        if (e.modulus <= alpha_max) candidates.push_back(std::move(e));

    VerificationReport report =
        sweep(Integer(1), alpha_max, options, [&](const Integer& lo, const Integer& hi) {
            VerificationReport part;
            part.alpha_min = lo;
            part.alpha_max = hi;
            auto next = std::lower_bound(candidates.begin(), candidates.end(), lo,
                                         [](const ExceptionalModulus& e, const Integer& v) { return e.modulus < v; });
            for (Integer alpha = lo; alpha <= hi; ++alpha) {
                ModulusOutcome outcome = examine_modulus(spec, catalog, coarse_ptr, alpha);
                if (next != candidates.end() && next->modulus == alpha) {
                    part.excluded.push_back({alpha, next->certificates, outcome.matches != outcome.checked});
                    ++next;
                    continue;
                }
                part.checked += outcome.checked;
                part.matches += outcome.matches;
                std::move(outcome.violations.begin(), outcome.violations.end(), std::back_inserter(part.violations));
                std::move(outcome.coarse.begin(), outcome.coarse.end(),
                          std::back_inserter(part.coarse_counterexamples));
            }
            return part;
        });
    report.kind = "main_theorem";
    report.spec = spec;
    report.mode = mode;
    report.alpha_min = 1;
    report.alpha_max = alpha_max;
    return report;
}

TableDocument build_table(const Integer& n_max) {
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    TableDocument doc;
    for (Integer n = 1; n <= n_max; ++n)
        for (Parity parity : {Parity::even, Parity::odd}) {
            TableRow row;
            row.value = n;
            row.parity = parity;
            const auto catalog = enumerate_types(n, parity == Parity::even ? LambdaFilter::even : LambdaFilter::odd);
            row.types = catalog.coarse_projection(Parity::even);
            row.exceptions = true_exceptions(CongruenceSpec{n, parity}, true);
            doc.rows.push_back(std::move(row));
        }
    return doc;
}

}  // namespace endsym
