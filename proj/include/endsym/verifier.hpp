#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endsym/asymmetry.hpp"
#include "endsym/congruence.hpp"

namespace endsym {

enum class Mode { refined, coarse };

std::string_view to_string(Mode m);

/// A decision point where a checked property failed.
struct Violation {
    std::string check;
    Integer alpha;
    Integer beta;
    QuotientSequence expansion;
    std::string detail;
};

/// A pair on which membership by coarse (c ; x) disagrees with being a root.
struct CoarseCounterexample {
    Integer alpha;
    Integer beta;
    QuotientSequence expansion;
    CoarseType type;
    bool is_root = false;
};

struct ExcludedModulus {
    Integer modulus;
    std::vector<ExceptionalCertificate> certificates;
    /// The roots and the type-matching pairs actually differ at this modulus.
    bool necessary = false;
};

struct VerificationReport {
    std::string kind;
    std::optional<CongruenceSpec> spec;
    std::optional<Mode> mode;
    Integer alpha_min = 1;
    Integer alpha_max = 1;
    std::vector<ExcludedModulus> excluded;
    std::uint64_t checked = 0;
    std::uint64_t matches = 0;
    std::vector<Violation> violations;
    std::vector<CoarseCounterexample> coarse_counterexamples;

    bool ok() const { return violations.empty(); }

    /// Appends the results of a later, disjoint block of moduli.
    void merge(VerificationReport&& later);
};

struct SweepOptions {
    /// Worker threads for the per-modulus sweep; 0 picks the hardware concurrency.
    unsigned threads = 1;
};

/// Exhaustive checks over every coprime 0 < beta < alpha <= max_alpha:
///   - evaluate(expand) round trip and the end-coefficient convention;
///   - beta^2 + [q]* beta + (-1)^len(q) = 0 (mod alpha) for both expansions q;
///   - |[q]*| < K(q)/2 for the convention expansion;
///   - parity_by_inverse agrees with the expansion length.
/// Then `trials` random sequences (seeded) for Euler's identity, reversal
/// antisymmetry, continuant symmetry and the two anticontinuant routes.
VerificationReport verify_identities(const Integer& max_alpha, std::uint64_t trials, std::uint64_t seed,
                                     SweepOptions options = {});

/// Compares, for each alpha <= alpha_max outside the exceptional candidates, the roots
/// of x^2 + n x + (-1)^s with the betas whose convention expansion has length parity s
/// and anticontinuant n (cross-checked against the type catalog). Coarse mode also
/// records pairs where membership by the classical (c ; x) list disagrees.
VerificationReport verify_main_theorem(const CongruenceSpec& spec, const Integer& alpha_max, Mode mode,
                                       SweepOptions options = {});

struct TableRow {
    Integer value;
    Parity parity = Parity::even;
    std::vector<CoarseType> types;
    std::vector<std::pair<Integer, Integer>> exceptions;
};

struct TableDocument {
    std::vector<TableRow> rows;  // by (value, parity)
};

/// For 1 <= n <= n_max and both parities: the even-depth coarse types with value n and
/// core length of that parity, and the true exceptions of x^2 +- n x + (-1)^s.
TableDocument build_table(const Integer& n_max);

}  // namespace endsym
