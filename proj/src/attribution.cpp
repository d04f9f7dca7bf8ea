#include "captain/attribution.hpp"

#include <algorithm>

namespace captain {

double attribution_score(const TtpSequence& query,
                         const std::vector<TtpSequence>& group_sequences,
                         Measure measure) {
  if (group_sequences.empty()) {
    throw EmptyGroup("cannot score against an empty group");
  }
  double sum = 0.0;
  for (const auto& sequence : group_sequences) {
    sum += similarity(measure, query, sequence);
  }
  return sum / static_cast<double>(group_sequences.size());
}

AttributionResult attribute(const TtpSequence& query,
                            const BaselineDatabase& baseline,
                            Measure measure) {
  AttributionResult result;
  result.ranking.reserve(baseline.group_count());
  for (const auto& [group, sequences] : baseline.groups()) {
    result.ranking.push_back({group, attribution_score(query, sequences,
                                                       measure)});
  }
  // Groups come out of the map name-sorted; stable sort by descending score
  // keeps name order within equal scores.
  std::stable_sort(result.ranking.begin(), result.ranking.end(),
                   [](const AttributionResult::Entry& lhs,
                      const AttributionResult::Entry& rhs) {
                     return lhs.score > rhs.score;
                   });
  result.attributed = result.ranking.front().group;
  result.tie = result.ranking.size() > 1 &&
               result.ranking[1].score == result.ranking[0].score;
  return result;
}

std::vector<std::string> top_n(const AttributionResult& result,
                               std::size_t n) {
  if (n < 1 || n > result.ranking.size()) {
    throw BadWindow("top-n window must be in [1, " +
                    std::to_string(result.ranking.size()) + "], got " +
                    std::to_string(n));
  }
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(result.ranking[i].group);
  return out;
}

}  // namespace captain
