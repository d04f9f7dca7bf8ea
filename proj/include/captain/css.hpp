#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "captain/checked_uint.hpp"
#include "captain/sequence.hpp"

namespace captain {

// Common-subsequence profile of a sequence pair: lambda lists the lengths
// for which at least one common subsequence exists (strictly increasing),
// mu[i] counts the DISTINCT common subsequence strings of length lambda[i].
// Lengths with a zero count are omitted, so all entries are >= 1.
struct SubsequenceProfile {
  std::vector<std::uint32_t> lambda;
  std::vector<uint128> mu;

  std::size_t k() const { return lambda.size(); }
  bool empty() const { return lambda.empty(); }

  // <mu, lambda> = sum of lambda[i] * mu[i], exact.
  uint128 weighted_total() const;

  bool operator==(const SubsequenceProfile& other) const = default;
};

// Counts the distinct common subsequences of `a` and `b` stratified by
// length, by dynamic programming over (prefix of a, prefix of b, length).
// Each distinct string is counted once, at the pair of positions where its
// greedy leftmost embeddings in a and b end; windows delimited by the
// previous occurrence of the matched symbol keep duplicates from being
// counted twice. O(m * n * min(m, n)) time.
//
// Throws LengthCap when either sequence exceeds `max_length`,
// ArithmeticOverflow if any count leaves 128 bits.
SubsequenceProfile common_subsequence_profile(
    const TtpSequence& a, const TtpSequence& b,
    std::size_t max_length = kMaxSequenceLength);

inline constexpr std::size_t kBruteForceLengthCap = 16;

// Test oracle with the same contract: enumerates every subsequence of both
// sides as a distinct string, intersects the sets, tallies by length.
// Only valid for lengths <= 16.
SubsequenceProfile brute_force_profile(const TtpSequence& a,
                                       const TtpSequence& b);

// n * 2^(n-1): the weighted count of all subsequences of an n-length
// sequence with distinct elements, i.e. sum over i of i * C(n, i).
uint128 subsequence_budget(std::size_t n,
                           std::size_t max_length = kMaxSequenceLength);

}  // namespace captain
