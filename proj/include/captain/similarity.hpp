#pragma once

#include <cstddef>
#include <string_view>

#include "captain/checked_uint.hpp"
#include "captain/css.hpp"
#include "captain/sequence.hpp"

namespace captain {

enum class Measure {
  kCaptain,
  kCosine,
  kEuclidean,
  kLcs,
};

std::string_view to_string(Measure measure);
Measure parse_measure(std::string_view name);

// Subsequence-profile similarity: 2 * <mu, lambda> / (m 2^(m-1) + n 2^(n-1)).
// Numerator and denominator are formed exactly in 128-bit integers; the one
// floating-point operation is the final division. Always in [0, 1].
double captain_similarity(const TtpSequence& a, const TtpSequence& b,
                          std::size_t max_length = kMaxSequenceLength);

// The similarity denominator in its unsimplified form,
// sum over i of i*C(m,i) plus sum over i of i*C(n,i), by direct summation
// with exact binomials. Equals subsequence_budget(m) + subsequence_budget(n);
// kept as an independent route for cross-checking the closed form.
uint128 denominator_unsimplified(std::size_t m, std::size_t n);

// Cosine of the binary presence vectors: |A & B| / sqrt(|A| * |B|).
// Order and multiplicity are ignored.
double cosine_similarity(const TtpSequence& a, const TtpSequence& b,
                         std::size_t max_length = kMaxSequenceLength);

// 1 / (1 + d) where d is the Euclidean distance between the binary
// presence vectors. In (0, 1].
double euclidean_similarity(const TtpSequence& a, const TtpSequence& b,
                            std::size_t max_length = kMaxSequenceLength);

// |LCS(a, b)| / max(m, n).
double lcs_similarity(const TtpSequence& a, const TtpSequence& b,
                      std::size_t max_length = kMaxSequenceLength);

double similarity(Measure measure, const TtpSequence& a, const TtpSequence& b,
                  std::size_t max_length = kMaxSequenceLength);

}  // namespace captain
