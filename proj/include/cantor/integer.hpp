#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace cantor {

/// Arbitrary-precision signed integer used for polynomial coefficients and
/// frequencies.
using Integer = boost::multiprecision::cpp_int;

inline bool fits_int64(const Integer& k) {
  return k >= std::numeric_limits<std::int64_t>::min() &&
         k <= std::numeric_limits<std::int64_t>::max();
}

/// Exponent of the largest power of p dividing k. k must be nonzero.
int valuation(std::int64_t k, std::int64_t p);
int valuation(const Integer& k, std::int64_t p);

/// Floor-style residue in [0, n).
inline std::int64_t floor_mod(std::int64_t k, std::int64_t n) {
  std::int64_t r = k % n;
  return r < 0 ? r + n : r;
}

bool is_prime(std::int64_t n);

/// b^e, throwing DomainError if the result exceeds `cap`.
std::int64_t checked_pow(std::int64_t b, int e, std::int64_t cap);

Integer parse_integer(const std::string& text);

inline std::string to_string(const Integer& k) { return k.str(); }

}  // namespace cantor
