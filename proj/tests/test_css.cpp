#include <random>
#include <set>
#include <vector>

#include "captain/css.hpp"
#include "doctest.h"
#include "test_util.hpp"

using captain::ArithmeticOverflow;
using captain::LengthCap;
using captain::SubsequenceProfile;
using captain::TtpSequence;
using captain::uint128;
using captain::testutil::random_letters;
using captain::testutil::seq;

namespace {

SubsequenceProfile profile_of(std::vector<std::uint32_t> lambda,
                              std::vector<std::uint64_t> mu) {
  SubsequenceProfile p;
  p.lambda = std::move(lambda);
  for (auto m : mu) p.mu.push_back(m);
  return p;
}

void check_invariants(const SubsequenceProfile& p) {
  REQUIRE(p.lambda.size() == p.mu.size());
  for (std::size_t i = 0; i < p.k(); ++i) {
    CHECK(p.lambda[i] >= 1);
    CHECK(p.mu[i] >= 1);
    if (i > 0) CHECK(p.lambda[i] > p.lambda[i - 1]);
  }
}

}  // namespace

TEST_CASE("brute force profile on fixed pairs") {
  // Common subsequences of AB/AB are A, B, AB.
  CHECK(brute_force_profile(seq("AB"), seq("AB")) ==
        profile_of({1, 2}, {2, 1}));
  // Disjoint alphabets share nothing.
  CHECK(brute_force_profile(seq("AB"), seq("CD")).empty());
  // ABC vs AC: common set is {A, C, AC}.
  CHECK(brute_force_profile(seq("ABC"), seq("AC")) ==
        profile_of({1, 2}, {2, 1}));
  // All 7 subsequences of a 3-set are common with itself.
  CHECK(brute_force_profile(seq("ABC"), seq("ABC")) ==
        profile_of({1, 2, 3}, {3, 3, 1}));
  CHECK(brute_force_profile(seq("A"), seq("A")) == profile_of({1}, {1}));
  // Duplicates count as distinct strings, not embeddings.
  CHECK(brute_force_profile(seq("AA"), seq("AA")) ==
        profile_of({1, 2}, {1, 1}));
  CHECK(brute_force_profile(seq("ABA"), seq("AA")) ==
        profile_of({1, 2}, {1, 1}));
}

TEST_CASE("brute force enforces its enumeration bound") {
  const auto long17 = seq("ABCDEFGHIJKLMNOPQ");
  CHECK_THROWS_AS(brute_force_profile(long17, seq("A")), LengthCap);
}

TEST_CASE("dp profile matches the frozen examples") {
  CHECK(common_subsequence_profile(seq("AB"), seq("AB")) ==
        profile_of({1, 2}, {2, 1}));
  CHECK(common_subsequence_profile(seq("AB"), seq("CD")).empty());
  CHECK(common_subsequence_profile(seq("ABC"), seq("AC")) ==
        profile_of({1, 2}, {2, 1}));
  CHECK(common_subsequence_profile(seq("ABC"), seq("ABC")) ==
        profile_of({1, 2, 3}, {3, 3, 1}));
  CHECK(common_subsequence_profile(seq("ABA"), seq("AA")) ==
        profile_of({1, 2}, {1, 1}));
  CHECK(common_subsequence_profile(seq("AA"), seq("A")) ==
        profile_of({1}, {1}));
}

TEST_CASE("dp profile enforces the length cap") {
  std::vector<captain::TechniqueId> items(65, captain::testutil::sym('A'));
  CHECK_THROWS_AS((TtpSequence{items}), LengthCap);
  std::vector<captain::TechniqueId> ok(64, captain::testutil::sym('A'));
  const TtpSequence s64{ok};
  CHECK_THROWS_AS(common_subsequence_profile(s64, s64, 63), LengthCap);
  CHECK_NOTHROW(common_subsequence_profile(s64, s64, 64));
}

TEST_CASE("oracle equivalence on random pairs") {
  std::mt19937 rng(20240811);
  for (int round = 0; round < 1200; ++round) {
    const auto a = seq(random_letters(rng, 1, 10, 8));
    const auto b = seq(random_letters(rng, 1, 10, 8));
    const auto dp = common_subsequence_profile(a, b);
    const auto bf = brute_force_profile(a, b);
    REQUIRE(dp == bf);
    check_invariants(dp);
  }
}

TEST_CASE("profile symmetry") {
  std::mt19937 rng(99);
  for (int round = 0; round < 300; ++round) {
    const auto a = seq(random_letters(rng, 1, 12, 6));
    const auto b = seq(random_letters(rng, 1, 12, 6));
    CHECK(common_subsequence_profile(a, b) ==
          common_subsequence_profile(b, a));
  }
}

TEST_CASE("self profile is bounded by the budget, equal iff distinct") {
  std::mt19937 rng(1234);
  for (int round = 0; round < 300; ++round) {
    const auto letters = random_letters(rng, 1, 12, 8);
    const auto a = seq(letters);
    const auto total =
        common_subsequence_profile(a, a).weighted_total();
    const auto budget = captain::subsequence_budget(a.size());
    CHECK(total <= budget);
    std::set<char> distinct(letters.begin(), letters.end());
    if (distinct.size() == letters.size()) {
      CHECK(total == budget);
    } else {
      CHECK(total < budget);
    }
  }
}

TEST_CASE("subsequence containment is monotone in the weighted total") {
  std::mt19937 rng(4321);
  for (int round = 0; round < 300; ++round) {
    const auto b_letters = random_letters(rng, 2, 10, 6);
    std::string a_letters;
    for (char c : b_letters) {
      if (rng() % 2 == 0) a_letters.push_back(c);
    }
    if (a_letters.empty()) a_letters.push_back(b_letters[0]);
    const auto c = seq(random_letters(rng, 1, 10, 6));
    const auto smaller =
        common_subsequence_profile(seq(a_letters), c).weighted_total();
    const auto larger =
        common_subsequence_profile(seq(b_letters), c).weighted_total();
    CHECK(smaller <= larger);
  }
}

TEST_CASE("subsequence budget values") {
  CHECK(captain::subsequence_budget(1) == uint128(1));
  CHECK(captain::subsequence_budget(3) == uint128(12));
  CHECK(captain::subsequence_budget(34) == uint128(292057776128ull));
  CHECK(captain::subsequence_budget(64) == (uint128(64) << 63));
  CHECK_THROWS_AS(captain::subsequence_budget(0), LengthCap);
  CHECK_THROWS_AS(captain::subsequence_budget(65), LengthCap);
}

TEST_CASE("budget equals the direct weighted sum for n up to 30") {
  for (std::size_t n = 1; n <= 30; ++n) {
    // Independent route: Pascal's triangle and a direct summation.
    std::vector<uint128> row(n + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j > 0; --j) row[j] += row[j - 1];
    }
    uint128 sum = 0;
    for (std::size_t i = 0; i <= n; ++i) sum += uint128(i) * row[i];
    CHECK(sum == captain::subsequence_budget(n));
  }
}

TEST_CASE("budget overflows loudly far beyond the default cap") {
  CHECK_THROWS_AS(captain::subsequence_budget(130, 256), ArithmeticOverflow);
  CHECK(captain::subsequence_budget(100, 256) ==
        (uint128(100) << 99));
}
