#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "captain/baseline.hpp"
#include "captain/sequence.hpp"
#include "captain/similarity.hpp"

namespace captain {

// Mean similarity of `query` against every sequence of one group, summed in
// the group's storage order so results are bit-reproducible.
double attribution_score(const TtpSequence& query,
                         const std::vector<TtpSequence>& group_sequences,
                         Measure measure);

// Scores the query against every baseline group and ranks descending;
// equal scores are ordered by ascending group name and flag the result.
AttributionResult attribute(const TtpSequence& query,
                            const BaselineDatabase& baseline, Measure measure);

// First n groups of the ranking; n must be in [1, G].
std::vector<std::string> top_n(const AttributionResult& result, std::size_t n);

}  // namespace captain
