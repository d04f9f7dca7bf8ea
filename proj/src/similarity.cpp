#include "captain/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "captain/errors.hpp"

namespace captain {

namespace {

constexpr std::string_view kMeasureNames[] = {"captain", "cosine", "euclidean",
                                              "lcs"};

void check_caps(const TtpSequence& a, const TtpSequence& b, std::size_t cap) {
  if (a.size() > cap || b.size() > cap) {
    throw LengthCap("sequence exceeds the length cap of " +
                    std::to_string(cap));
  }
}

std::set<std::string> presence_set(const TtpSequence& s) {
  std::set<std::string> out;
  for (const auto& id : s) out.insert(id.str());
  return out;
}

std::size_t intersection_size(const std::set<std::string>& x,
                              const std::set<std::string>& y) {
  std::size_t count = 0;
  for (const auto& v : x) count += y.count(v);
  return count;
}

// C(n, i) for one row of Pascal's triangle, exact.
std::vector<uint128> binomial_row(std::size_t n) {
  std::vector<uint128> row(n + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j > 0; --j) {
      row[j] = checked_add(row[j], row[j - 1]);
    }
  }
  return row;
}

uint128 weighted_subsequence_sum(std::size_t n) {
  const auto row = binomial_row(n);
  uint128 total = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    total = checked_add(total, checked_mul(uint128(i), row[i]));
  }
  return total;
}

}  // namespace

std::string_view to_string(Measure measure) {
  return kMeasureNames[static_cast<int>(measure)];
}

Measure parse_measure(std::string_view name) {
  for (int i = 0; i < 4; ++i) {
    if (kMeasureNames[i] == name) return static_cast<Measure>(i);
  }
  throw ConfigError("unknown measure: '" + std::string(name) +
                    "' (expected captain, cosine, euclidean or lcs)");
}

double captain_similarity(const TtpSequence& a, const TtpSequence& b,
                          std::size_t max_length) {
  const auto profile = common_subsequence_profile(a, b, max_length);
  const uint128 numerator = checked_mul(uint128(2), profile.weighted_total());
  const uint128 denominator =
      checked_add(subsequence_budget(a.size(), max_length),
                  subsequence_budget(b.size(), max_length));
  return to_double(numerator) / to_double(denominator);
}

uint128 denominator_unsimplified(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw EmptyInput("sequence lengths must be >= 1");
  return checked_add(weighted_subsequence_sum(m), weighted_subsequence_sum(n));
}

double cosine_similarity(const TtpSequence& a, const TtpSequence& b,
                         std::size_t max_length) {
  check_caps(a, b, max_length);
  const auto sa = presence_set(a);
  const auto sb = presence_set(b);
  const auto shared = intersection_size(sa, sb);
  return static_cast<double>(shared) /
         std::sqrt(static_cast<double>(sa.size()) *
                   static_cast<double>(sb.size()));
}

double euclidean_similarity(const TtpSequence& a, const TtpSequence& b,
                            std::size_t max_length) {
  check_caps(a, b, max_length);
  const auto sa = presence_set(a);
  const auto sb = presence_set(b);
  const auto shared = intersection_size(sa, sb);
  const auto differing = (sa.size() - shared) + (sb.size() - shared);
  return 1.0 / (1.0 + std::sqrt(static_cast<double>(differing)));
}

double lcs_similarity(const TtpSequence& a, const TtpSequence& b,
                      std::size_t max_length) {
  check_caps(a, b, max_length);
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  // Two-row LCS length table.
  std::vector<std::size_t> prev(n + 1, 0), cur(n + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      cur[j] = (a[i - 1] == b[j - 1]) ? prev[j - 1] + 1
                                      : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return static_cast<double>(prev[n]) / static_cast<double>(std::max(m, n));
}

double similarity(Measure measure, const TtpSequence& a, const TtpSequence& b,
                  std::size_t max_length) {
  switch (measure) {
    case Measure::kCaptain:
      return captain_similarity(a, b, max_length);
    case Measure::kCosine:
      return cosine_similarity(a, b, max_length);
    case Measure::kEuclidean:
      return euclidean_similarity(a, b, max_length);
    case Measure::kLcs:
      return lcs_similarity(a, b, max_length);
  }
  throw Error("unreachable measure");
}

}  // namespace captain
