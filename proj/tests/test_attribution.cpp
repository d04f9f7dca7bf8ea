#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "captain/attribution.hpp"
#include "doctest.h"
#include "test_util.hpp"

using captain::AttributionResult;
using captain::BaselineDatabase;
using captain::Measure;
using captain::TtpSequence;
using captain::testutil::oracle_ranking;
using captain::testutil::oracle_similarity;
using captain::testutil::seq;

namespace {

BaselineDatabase toy_baseline() {
  BaselineDatabase::GroupMap groups;
  groups["alpha"] = {seq("ABCDE"), seq("ABDE"), seq("ACD")};
  groups["bravo"] = {seq("ABF"), seq("BFE"), seq("FAB"), seq("FB")};
  groups["charlie"] = {seq("GHIJ"), seq("GIJ")};
  return BaselineDatabase(groups);
}

}  // namespace

TEST_CASE("attribution score basics") {
  const auto query = seq("ABC");
  CHECK(captain::attribution_score(query, {seq("ABC")}, Measure::kCaptain) ==
        1.0);
  CHECK(captain::attribution_score(query, {seq("ABC"), seq("DEF")},
                                   Measure::kCaptain) == 0.5);
  CHECK_THROWS_AS(captain::attribution_score(query, {}, Measure::kCaptain),
                  captain::EmptyGroup);
}

TEST_CASE("attribution score equals the mean of oracle pair scores") {
  const auto query = seq("ABC");
  const std::vector<TtpSequence> group = {seq("AC"), seq("AB")};
  const double expected =
      (oracle_similarity(query, group[0]) +
       oracle_similarity(query, group[1])) / 2.0;
  CHECK(captain::attribution_score(query, group, Measure::kCaptain) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(captain::attribution_score(query, group, Measure::kCaptain) == 0.5);
}

TEST_CASE("baseline construction errors") {
  CHECK_THROWS_AS((BaselineDatabase{BaselineDatabase::GroupMap{}}),
                  captain::EmptyBaseline);
  BaselineDatabase::GroupMap with_empty;
  with_empty["ok"] = {seq("AB")};
  with_empty["hollow"] = {};
  CHECK_THROWS_AS((BaselineDatabase{with_empty}), captain::EmptyGroup);
}

TEST_CASE("attribute on a single-group baseline") {
  BaselineDatabase::GroupMap groups;
  groups["only"] = {seq("AB")};
  const auto result =
      captain::attribute(seq("ZY"), BaselineDatabase(groups),
                         Measure::kCaptain);
  CHECK(result.ranking.size() == 1);
  CHECK(result.attributed == "only");
  CHECK_FALSE(result.tie);
}

TEST_CASE("attribute separates a perfectly matching group") {
  BaselineDatabase::GroupMap groups;
  groups["match"] = {seq("ABCD"), seq("ABCD")};
  groups["noise1"] = {seq("EFG")};
  groups["noise2"] = {seq("HIJ"), seq("HJK")};
  const auto result = captain::attribute(seq("ABCD"),
                                         BaselineDatabase(groups),
                                         Measure::kCaptain);
  CHECK(result.attributed == "match");
  CHECK(result.ranking[0].score == 1.0);
  CHECK(result.ranking[1].score == 0.0);
  CHECK(result.ranking[2].score == 0.0);
  CHECK_FALSE(result.tie);
}

TEST_CASE("toy baseline ranking equals the oracle ranking") {
  const auto baseline = toy_baseline();
  for (const auto& query : {seq("ABDE"), seq("FABE"), seq("GIJ"),
                            seq("ABGF")}) {
    const auto result =
        captain::attribute(query, baseline, Measure::kCaptain);
    const auto expected = oracle_ranking(query, baseline.groups());
    REQUIRE(result.ranking.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(result.ranking[i].group == expected[i].first);
      CHECK(result.ranking[i].score ==
            doctest::Approx(expected[i].second).epsilon(1e-12));
    }
  }
}

TEST_CASE("scores stay in range for every measure") {
  const auto baseline = toy_baseline();
  for (auto measure : {Measure::kCaptain, Measure::kCosine,
                       Measure::kEuclidean, Measure::kLcs}) {
    const auto result = captain::attribute(seq("ABF"), baseline, measure);
    for (const auto& entry : result.ranking) {
      CHECK(entry.score >= 0.0);
      CHECK(entry.score <= 1.0);
      if (measure == Measure::kEuclidean) CHECK(entry.score > 0.0);
    }
  }
}

TEST_CASE("ranking is non-increasing and contains each group once") {
  const auto baseline = toy_baseline();
  const auto result = captain::attribute(seq("ABDE"), baseline,
                                         Measure::kCaptain);
  std::map<std::string, int> seen;
  for (std::size_t i = 0; i < result.ranking.size(); ++i) {
    ++seen[result.ranking[i].group];
    if (i > 0) CHECK(result.ranking[i].score <= result.ranking[i - 1].score);
  }
  CHECK(seen.size() == baseline.group_count());
}

TEST_CASE("ties break by ascending group name and are flagged") {
  BaselineDatabase::GroupMap groups;
  groups["zulu"] = {seq("AB")};
  groups["alpha"] = {seq("AB")};
  const auto result = captain::attribute(seq("AB"),
                                         BaselineDatabase(groups),
                                         Measure::kCaptain);
  CHECK(result.tie);
  CHECK(result.attributed == "alpha");
  CHECK(result.ranking[0].group == "alpha");
  CHECK(result.ranking[1].group == "zulu");
}

TEST_CASE("attribute is deterministic") {
  const auto baseline = toy_baseline();
  const auto first = captain::attribute(seq("ABF"), baseline,
                                        Measure::kCaptain);
  for (int i = 0; i < 5; ++i) {
    const auto again = captain::attribute(seq("ABF"), baseline,
                                          Measure::kCaptain);
    REQUIRE(again.ranking.size() == first.ranking.size());
    for (std::size_t j = 0; j < first.ranking.size(); ++j) {
      CHECK(again.ranking[j].group == first.ranking[j].group);
      CHECK(again.ranking[j].score == first.ranking[j].score);
    }
  }
}

TEST_CASE("top_n windows") {
  const auto baseline = toy_baseline();
  const auto result = captain::attribute(seq("ABDE"), baseline,
                                         Measure::kCaptain);
  CHECK(captain::top_n(result, 1) ==
        std::vector<std::string>{result.attributed});
  CHECK(captain::top_n(result, 3).size() == 3);
  // Prefix consistency.
  const auto two = captain::top_n(result, 2);
  const auto three = captain::top_n(result, 3);
  CHECK(std::equal(two.begin(), two.end(), three.begin()));
  CHECK_THROWS_AS(captain::top_n(result, 0), captain::BadWindow);
  CHECK_THROWS_AS(captain::top_n(result, 4), captain::BadWindow);
  // Oracle agreement for the top-2 window.
  const auto expected = oracle_ranking(seq("ABDE"), baseline.groups());
  CHECK(two == std::vector<std::string>{expected[0].first,
                                        expected[1].first});
}
