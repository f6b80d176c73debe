#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "andre/errors.hpp"

namespace andre {

// Exact arbitrary-precision integer used for every orbit-counting
// accumulator.  Counts grow like binomial(q-1, i) and (n+1)^(q-1), so
// fixed-width arithmetic is not an option anywhere on those paths.
using Big = boost::multiprecision::cpp_int;

// C(n, k), exact.  Multiplicative form; every intermediate division is exact.
inline Big binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Big r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Big pow_big(std::uint64_t base, std::uint64_t exp) {
  Big r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

// num / den, throwing if the division leaves a remainder.  Burnside totals
// must divide evenly; a remainder means the group or the fixed-point math
// is wrong, and silently truncating would hide that.
inline Big exact_div(const Big& num, const Big& den, const char* what) {
  if (den == 0 || num % den != 0)
    throw NonIntegerBurnside(std::string(what) + ": sum not divisible by group order");
  return num / den;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace andre
