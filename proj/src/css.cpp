#include "captain/css.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace captain {

namespace {

void check_cap(const TtpSequence& s, std::size_t cap, const char* which) {
  if (s.size() > cap) {
    throw LengthCap(std::string(which) + " sequence length " +
                    std::to_string(s.size()) + " exceeds the cap of " +
                    std::to_string(cap));
  }
}

// Maps both sequences onto a shared dense symbol alphabet.
std::pair<std::vector<int>, std::vector<int>> encode_pair(
    const TtpSequence& a, const TtpSequence& b) {
  std::unordered_map<std::string, int> table;
  auto encode = [&table](const TtpSequence& s) {
    std::vector<int> out;
    out.reserve(s.size());
    for (const auto& id : s) {
      auto [it, _] = table.emplace(id.str(), static_cast<int>(table.size()));
      out.push_back(it->second);
    }
    return out;
  };
  auto ea = encode(a);
  auto eb = encode(b);
  return {std::move(ea), std::move(eb)};
}

// prev[i] (1-based) = largest p < i with s[p-1] == s[i-1], or 0 if none.
std::vector<std::size_t> previous_occurrence(const std::vector<int>& s) {
  std::vector<std::size_t> prev(s.size() + 1, 0);
  std::unordered_map<int, std::size_t> last;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    auto it = last.find(s[i - 1]);
    prev[i] = (it == last.end()) ? 0 : it->second;
    last[s[i - 1]] = i;
  }
  return prev;
}

}  // namespace

uint128 SubsequenceProfile::weighted_total() const {
  uint128 total = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    total = checked_add(total, checked_mul(mu[i], lambda[i]));
  }
  return total;
}

SubsequenceProfile common_subsequence_profile(const TtpSequence& a,
                                              const TtpSequence& b,
                                              std::size_t max_length) {
  check_cap(a, max_length, "first");
  check_cap(b, max_length, "second");

  const auto [sa, sb] = encode_pair(a, b);
  const std::size_t m = sa.size();
  const std::size_t n = sb.size();
  const auto prev_a = previous_occurrence(sa);
  const auto prev_b = previous_occurrence(sb);

  // count[x][y] on layer l-1 holds the number of distinct common
  // subsequences of length l-1 whose greedy embeddings end at exactly
  // (x, y); (0, 0) is the virtual start holding the empty string.
  // prefix[x+1][y+1] accumulates count over all ends <= (x, y).
  const std::size_t rows = m + 1;
  const std::size_t cols = n + 1;
  std::vector<uint128> count(rows * cols, 0);
  std::vector<uint128> prefix((rows + 1) * (cols + 1), 0);
  auto cnt = [&count, cols](std::size_t x, std::size_t y) -> uint128& {
    return count[x * cols + y];
  };
  auto pre = [&prefix, cols](std::size_t x, std::size_t y) -> uint128& {
    return prefix[x * (cols + 1) + y];
  };

  cnt(0, 0) = 1;  // layer 0: the empty subsequence

  SubsequenceProfile profile;
  const std::size_t max_k = std::min(m, n);
  for (std::size_t l = 1; l <= max_k; ++l) {
    // Prefix sums of the previous layer. pre(x, y) = sum over ends
    // (i, j) with i < x, j < y.
    for (std::size_t x = 0; x < rows; ++x) {
      for (std::size_t y = 0; y < cols; ++y) {
        pre(x + 1, y + 1) =
            checked_sub(checked_add(checked_add(pre(x, y + 1), pre(x + 1, y)),
                                    cnt(x, y)),
                        pre(x, y));
      }
    }

    uint128 layer_total = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        uint128 c = 0;
        if (sa[i - 1] == sb[j - 1]) {
          // Extending any shorter string whose ends lie in the window
          // [prev_a(i), i) x [prev_b(j), j) lands its greedy embedding
          // exactly at (i, j); ends before the window would have matched
          // this symbol at an earlier occurrence.
          const std::size_t ai = prev_a[i];
          const std::size_t bj = prev_b[j];
          c = checked_sub(checked_add(pre(i, j), pre(ai, bj)),
                          checked_add(pre(ai, j), pre(i, bj)));
        }
        cnt(i, j) = c;
        layer_total = checked_add(layer_total, c);
      }
    }
    cnt(0, 0) = 0;

    // A length-(l+1) common subsequence needs a length-l prefix, so the
    // first empty layer ends the profile.
    if (layer_total == 0) break;
    profile.lambda.push_back(static_cast<std::uint32_t>(l));
    profile.mu.push_back(layer_total);
  }
  return profile;
}

SubsequenceProfile brute_force_profile(const TtpSequence& a,
                                       const TtpSequence& b) {
  check_cap(a, kBruteForceLengthCap, "first");
  check_cap(b, kBruteForceLengthCap, "second");

  const auto [sa, sb] = encode_pair(a, b);
  // Every nonempty subsequence as a separator-joined key, so [1,12] and
  // [11,2] cannot collide.
  auto enumerate = [](const std::vector<int>& s) {
    std::unordered_set<std::string> subs;
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::string key;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
          key += std::to_string(s[i]);
          key += ',';
        }
      }
      subs.insert(std::move(key));
    }
    return subs;
  };

  const auto subs_a = enumerate(sa);
  const auto subs_b = enumerate(sb);

  std::vector<uint128> by_length(std::min(sa.size(), sb.size()) + 1, 0);
  for (const auto& key : subs_a) {
    if (!subs_b.count(key)) continue;
    const auto len = static_cast<std::size_t>(
        std::count(key.begin(), key.end(), ','));
    by_length[len] += 1;
  }

  SubsequenceProfile profile;
  for (std::size_t l = 1; l < by_length.size(); ++l) {
    if (by_length[l] == 0) continue;
    profile.lambda.push_back(static_cast<std::uint32_t>(l));
    profile.mu.push_back(by_length[l]);
  }
  return profile;
}

uint128 subsequence_budget(std::size_t n, std::size_t max_length) {
  if (n < 1 || n > max_length) {
    throw LengthCap("subsequence budget is defined for 1 <= n <= " +
                    std::to_string(max_length) + ", got " + std::to_string(n));
  }
  return checked_mul(uint128(n), checked_pow2(static_cast<unsigned>(n - 1)));
}

}  // namespace captain
