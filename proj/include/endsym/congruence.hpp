#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "endsym/cf_core.hpp"

namespace endsym {

/// x^2 + n x + (-1)^s = 0 (mod alpha), with s given by its parity.
struct CongruenceSpec {
    Integer n;
    Parity s = Parity::even;

    /// s must be 0 or 1.
    static CongruenceSpec make(Integer n, int s);

    int s_value() const { return s == Parity::even ? 0 : 1; }

    /// s = 0 with n = +-2: the perfect-square case x^2 +- 2x + 1 = (x +- 1)^2.
    bool is_folded_case() const;

    CongruenceSpec negated() const { return {-n, s}; }

    friend bool operator==(const CongruenceSpec&, const CongruenceSpec&) = default;
};

/// Every beta in (0, alpha) solving the congruence, ascending.
std::vector<Integer> solve_quadratic(const CongruenceSpec& spec, const Integer& alpha);

enum class ExceptionCondition { small_alpha, gamma_condition, eta_condition };

std::string_view to_string(ExceptionCondition c);

struct ExceptionalCertificate {
    ExceptionCondition condition = ExceptionCondition::small_alpha;
    std::optional<Integer> witness;  // gamma or eta

    friend bool operator==(const ExceptionalCertificate&, const ExceptionalCertificate&) = default;
};

struct ExceptionalModulus {
    Integer modulus;
    std::vector<ExceptionalCertificate> certificates;  // never empty
};

/// Moduli for which length parity may disagree with s:
///   alpha <= 2|n|;
///   alpha | gamma(gamma - |n|) + (-1)^s          for some 1 <= gamma <= |n| - 1;
///   alpha | eta(eta - 2|n|) + 4 (-1)^s           for some 1 <= eta <= 2|n| - 1.
/// Ascending by modulus. Throws DomainError in the folded case, where the
/// condition values vanish.
std::vector<ExceptionalModulus> exceptional_candidates(const CongruenceSpec& spec);

/// True iff the certificate's condition holds for `modulus` under `spec`.
bool certificate_holds(const CongruenceSpec& spec, const Integer& modulus, const ExceptionalCertificate& cert);

/// Candidate pairs (alpha, beta) where beta solves the congruence (or, with
/// include_negated, the one with -n) but no expansion of alpha/beta has
/// anticontinuant equal to the n it solves for. Sorted by (alpha, beta).
///
/// In the folded case there is no finite candidate set; alpha is scanned over
/// [1, folded_scan_limit] instead.
std::vector<std::pair<Integer, Integer>> true_exceptions(const CongruenceSpec& spec, bool include_negated,
                                                         const Integer& folded_scan_limit = 64);

/// alpha = b n^2, beta = b a n - epsilon; beta + epsilon = b a n, so (beta + epsilon)^2 = 0 (mod alpha).
struct FoldedParams {
    Integer b;
    Integer n;
    Integer a;
    int epsilon = 1;

    Integer alpha() const { return b * n * n; }
    Integer beta() const { return b * a * n - epsilon; }

    friend bool operator==(const FoldedParams&, const FoldedParams&) = default;
};

/// Shape of the asymmetric middle of an even-length expansion with anticontinuant +-2:
///   form 1: pivot +- 2, pivot
///   form 2: pivot + 1, x, 1, pivot
///   form 3: pivot - 1, 1, x, pivot
/// surrounded by symmetric outer entries.
struct FoldedForm {
    int form = 1;
    std::optional<Integer> x;
    Integer pivot;

    friend bool operator==(const FoldedForm&, const FoldedForm&) = default;
};

/// Thrown when an expansion matches none of the three folded forms.
class ClassificationError : public DomainError {
public:
    ClassificationError(const std::string& what, QuotientSequence sequence)
        : DomainError(what), sequence_(std::move(sequence)) {}
    const QuotientSequence& sequence() const { return sequence_; }

private:
    QuotientSequence sequence_;
};

/// Moves d^2, d = gcd(a, n), from n^2 and a n into b. Keeps alpha and beta.
FoldedParams folded_normalize(const FoldedParams& p);

/// Classifies a quotient sequence against the three folded forms; nullopt if none fits.
std::optional<FoldedForm> classify_folded(const QuotientSequence& q);

/// Even-length expansion of alpha/beta and its folded form.
std::pair<QuotientSequence, FoldedForm> folded_expand_classify(const FoldedParams& p);

}  // namespace endsym
