#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "endsym/cf_core.hpp"

namespace endsym {

/// A sequence written as
///
///     outer, pivot + (-1)^depth c, core, pivot, reverse(outer)
///
/// with `outer` the longest symmetric prefix/suffix pair. Symmetric sequences have
/// c = 0, no pivot, and a core that is empty (even length) or the middle entry.
struct AsymmetryDecomposition {
    QuotientSequence outer;
    Integer c;
    QuotientSequence core;
    std::optional<Integer> pivot;

    std::size_t depth() const { return outer.size(); }
    bool symmetric() const { return c == 0; }

    friend bool operator==(const AsymmetryDecomposition&, const AsymmetryDecomposition&) = default;
};

/// Marginal asymmetry c, core x and the parity of the stripped depth. Together they
/// fix the anticontinuant of every sequence of this type.
struct ExtendedAsymmetryType {
    Integer c;
    QuotientSequence core;
    Parity sigma = Parity::even;

    std::size_t lambda() const { return core.size(); }

    friend bool operator==(const ExtendedAsymmetryType&, const ExtendedAsymmetryType&) = default;
};

/// Canonical order: core length, then c, then core, then sigma.
std::strong_ordering operator<=>(const ExtendedAsymmetryType& a, const ExtendedAsymmetryType& b);

/// One entry of a core pattern: a fixed value or the free parameter p.
using PatternEntry = std::optional<Integer>;

/// A one-parameter family of extended types (c ; pattern) at depth parity sigma,
/// where every free slot takes the same positive value p.
struct TypeFamily {
    Integer c;
    std::vector<PatternEntry> pattern;
    Parity sigma = Parity::even;

    bool matches(const ExtendedAsymmetryType& t) const;
    ExtendedAsymmetryType instance(const Integer& p) const;

    friend bool operator==(const TypeFamily&, const TypeFamily&) = default;
};

/// The classical pair (c ; x) without the depth parity. Free slots render as "p".
struct CoarseType {
    Integer c;
    std::vector<PatternEntry> core;

    friend bool operator==(const CoarseType&, const CoarseType&) = default;
};

std::strong_ordering operator<=>(const CoarseType& a, const CoarseType& b);

std::string to_string(const CoarseType& t);
std::string to_string(const ExtendedAsymmetryType& t);
std::string to_string(const TypeFamily& f);
std::string pattern_to_string(const std::vector<PatternEntry>& pattern, char separator = ',');

enum class LambdaFilter { even, odd, both };

/// Every extended type whose value equals `target`, plus the one-parameter
/// families that exist only for |target| = 2.
struct TypeCatalog {
    Integer target;
    std::vector<ExtendedAsymmetryType> finite_types;  // canonical order
    std::vector<TypeFamily> parametric_families;

    bool contains(const ExtendedAsymmetryType& t) const;

    /// Coarse pairs of all members, optionally restricted to one depth parity,
    /// deduplicated and ordered by core length, c, core.
    std::vector<CoarseType> coarse_projection(std::optional<Parity> sigma = std::nullopt) const;
};

AsymmetryDecomposition decompose(const QuotientSequence& q);

/// Inverse of decompose. Throws DomainError when an entry would drop below 1 or the
/// pieces do not form a valid decomposition.
QuotientSequence compose(const AsymmetryDecomposition& d);

/// The extended type of an asymmetric sequence; nullopt for symmetric ones.
std::optional<ExtendedAsymmetryType> extended_type(const QuotientSequence& q);

CoarseType coarse(const ExtendedAsymmetryType& t);

/// c K(x) - (-1)^sigma A(x), the anticontinuant of any sequence of type t.
/// Throws DomainError for c = 0.
Integer type_value(const ExtendedAsymmetryType& t);

/// Throws DomainError for n = 0 (value zero means symmetric, an unbounded class).
TypeCatalog enumerate_types(const Integer& n, LambdaFilter filter = LambdaFilter::both);

}  // namespace endsym
