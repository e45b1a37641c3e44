#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace endsym {

/// Arbitrary-precision signed integer used for every quantity in the library.
using Integer = boost::multiprecision::cpp_int;

/// Raised when an operation's precondition on its arguments does not hold.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class Parity { even, odd };

inline Parity parity_of(std::size_t n) { return (n % 2 == 0) ? Parity::even : Parity::odd; }

inline Parity parity_of(const Integer& n) {
    return boost::multiprecision::bit_test(boost::multiprecision::abs(n), 0) ? Parity::odd : Parity::even;
}

inline Parity flip(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

inline std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

/// (-1)^p as an Integer.
inline Integer sign_power(Parity p) { return p == Parity::even ? Integer(1) : Integer(-1); }

inline std::string to_string(const Integer& v) { return v.str(); }

/// Least nonnegative residue of `v` modulo `m` (m >= 1).
inline Integer mod_floor(const Integer& v, const Integer& m) {
    Integer r = v % m;
    if (r < 0) r += m;
    return r;
}

/// Parses an optionally signed decimal literal. Throws DomainError on anything else.
Integer parse_integer(std::string_view text);

/// Returns true and stores the value when `v` fits in a signed 64-bit integer.
inline bool fits_int64(const Integer& v, std::int64_t& out) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        return false;
    out = v.convert_to<std::int64_t>();
    return true;
}

}  // namespace endsym
