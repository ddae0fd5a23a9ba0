#pragma once

#include <cstdint>

namespace kedp {

using Cost = std::int64_t;

// All inequality checks of the form  x <= sqrt(f) * y  are evaluated as
// x^2 <= f * y^2 in 128-bit integers, so no square root is ever taken.
// Inputs are non-negative. When f * y^2 would not even fit 128 bits it
// already exceeds any possible x^2, so the answer is true.
inline bool squared_leq(Cost lhs, long long factor, Cost rhs) {
  __int128 l = static_cast<__int128>(lhs) * lhs;
  __int128 r2 = static_cast<__int128>(rhs) * rhs;
  constexpr __int128 max128 =
      static_cast<__int128>((~static_cast<unsigned __int128>(0)) >> 1);
  if (factor > 0 && r2 > max128 / factor) return true;
  return l <= factor * r2;
}

// a/b > c/d for non-negative rationals with positive denominators.
inline bool fraction_gt(long long a, long long b, long long c, long long d) {
  return static_cast<__int128>(a) * d > static_cast<__int128>(c) * b;
}

// a/b compared to c/d: negative, zero or positive.
inline int fraction_cmp(long long a, long long b, long long c, long long d) {
  __int128 l = static_cast<__int128>(a) * d;
  __int128 r = static_cast<__int128>(c) * b;
  if (l < r) return -1;
  if (l > r) return 1;
  return 0;
}

}  // namespace kedp
