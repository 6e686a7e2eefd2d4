#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace concord {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor of the square root of a non-negative integer.
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  const Int r = isqrt(n);
  return r * r == n;
}

inline bool is_even(const Int& n) { return n % 2 == 0; }

}  // namespace concord
