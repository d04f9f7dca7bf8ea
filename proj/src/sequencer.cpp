#include "captain/sequencer.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <tuple>

#include "captain/errors.hpp"

namespace captain {

namespace {

// Sort index for observations the catalog cannot place: after every phase.
constexpr int kUnmappedOrderIndex = kKillChainPhaseCount + 1;

KillChainPhase earliest_phase(const std::vector<Tactic>& tactics,
                              const PhaseMap& map) {
  const KillChainPhase* best = nullptr;
  for (Tactic tactic : tactics) {
    const auto& phase = map.phase_for_tactic(tactic);
    if (best == nullptr || phase.order_index < best->order_index) {
      best = &phase;
    }
  }
  return *best;
}

struct Placed {
  int order_index;
  const TtpObservation* obs;
};

TtpSequence sequence_impl(const std::vector<TtpObservation>& observations,
                          const PhaseMap& map, SequencingNotes* notes) {
  if (observations.empty()) {
    throw EmptyInput("cannot sequence an empty observation list");
  }

  std::vector<Placed> placed;
  placed.reserve(observations.size());
  for (const auto& obs : observations) {
    if (notes != nullptr && !obs.tactic_hint &&
        !map.allowed_tactics(obs.technique)) {
      notes->unknown_techniques.push_back(obs.technique);
      placed.push_back({kUnmappedOrderIndex, &obs});
      continue;
    }
    placed.push_back({resolve_phase(obs, map).order_index, &obs});
  }

  std::sort(placed.begin(), placed.end(),
            [](const Placed& lhs, const Placed& rhs) {
              return std::tie(lhs.order_index, lhs.obs->source_order,
                              lhs.obs->technique) <
                     std::tie(rhs.order_index, rhs.obs->source_order,
                              rhs.obs->technique);
            });

  std::vector<TechniqueId> items;
  std::set<std::pair<int, TechniqueId>> seen;
  for (const auto& entry : placed) {
    if (!seen.emplace(entry.order_index, entry.obs->technique).second) {
      if (notes != nullptr) ++notes->collapsed_duplicates;
      continue;
    }
    items.push_back(entry.obs->technique);
  }
  return TtpSequence(std::move(items));
}

}  // namespace

KillChainPhase resolve_phase(const TtpObservation& obs, const PhaseMap& map) {
  const auto allowed = map.allowed_tactics(obs.technique);

  if (obs.tactic_hint) {
    // For catalogued techniques the hint must be plausible; for unknown
    // ones it is the only information available.
    if (!allowed || std::find(allowed->begin(), allowed->end(),
                              *obs.tactic_hint) != allowed->end()) {
      return map.phase_for_tactic(*obs.tactic_hint);
    }
  }
  if (!allowed) throw UnknownTechnique(obs.technique.str());

  if (const auto override_tactic = map.override_for(obs.technique)) {
    return map.phase_for_tactic(*override_tactic);
  }
  if (map.is_multi_tactic(obs.technique)) {
    return earliest_phase(*allowed, map);
  }
  return map.phase_for_tactic(allowed->front());
}

TtpSequence sequence_ttps(const std::vector<TtpObservation>& observations,
                          const PhaseMap& map) {
  return sequence_impl(observations, map, nullptr);
}

TtpSequence sequence_ttps(const std::vector<TtpObservation>& observations,
                          const PhaseMap& map, SequencingNotes& notes) {
  return sequence_impl(observations, map, &notes);
}

}  // namespace captain
