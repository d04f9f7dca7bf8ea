#pragma once

#include <cstdint>
#include <string>

#include "captain/errors.hpp"

#ifndef __SIZEOF_INT128__
#error "captain requires a compiler with 128-bit unsigned integer support"
#endif

namespace captain {

// All subsequence counts and budgets are carried in 128-bit unsigned
// arithmetic. Overflow is a hard error, never silent wraparound.
using uint128 = unsigned __int128;

inline uint128 checked_add(uint128 a, uint128 b) {
  uint128 out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ArithmeticOverflow("128-bit addition overflow");
  }
  return out;
}

inline uint128 checked_sub(uint128 a, uint128 b) {
  if (b > a) throw ArithmeticOverflow("128-bit subtraction underflow");
  return a - b;
}

inline uint128 checked_mul(uint128 a, uint128 b) {
  uint128 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ArithmeticOverflow("128-bit multiplication overflow");
  }
  return out;
}

// 2^e with overflow checking.
inline uint128 checked_pow2(unsigned e) {
  if (e >= 128) throw ArithmeticOverflow("2^e does not fit in 128 bits");
  return uint128(1) << e;
}

double to_double(uint128 v);
std::string to_string(uint128 v);

}  // namespace captain
