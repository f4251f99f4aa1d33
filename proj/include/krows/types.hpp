#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace krows {

/// Counts can exceed any fixed-width integer (2^n grows fast), so all
/// cardinality arithmetic is done on arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, kept in lowest terms by the underlying type.
using Rational = boost::multiprecision::cpp_rational;

/// A total assignment: one 0/1 value per variable, index 0 = x_1.
using Bitstring = std::vector<uint8_t>;

/// Exact binomial coefficient C(n, k); 0 when k is out of range.
inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

/// 2^e as a BigInt.
inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

inline unsigned weight_of(const Bitstring& u) {
  unsigned w = 0;
  for (uint8_t b : u) w += b;
  return w;
}

} // namespace krows
