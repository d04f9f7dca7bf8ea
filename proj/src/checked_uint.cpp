#include "captain/checked_uint.hpp"

#include <algorithm>

namespace captain {

double to_double(uint128 v) {
  // Split into two 64-bit halves; each converts exactly, the sum rounds once.
  const double hi = static_cast<double>(static_cast<std::uint64_t>(v >> 64));
  const double lo = static_cast<double>(static_cast<std::uint64_t>(v));
  return hi * 18446744073709551616.0 + lo;
}

std::string to_string(uint128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace captain
