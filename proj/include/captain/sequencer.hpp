#pragma once

#include <cstddef>
#include <vector>

#include "captain/phase_map.hpp"
#include "captain/sequence.hpp"

namespace captain {

// Phase resolution precedence: usable tactic hint, then override, then the
// earliest allowed phase for multi-tactic techniques, then the catalog
// tactic. Throws UnknownTechnique when the technique is absent from the
// catalog and no hint was given.
KillChainPhase resolve_phase(const TtpObservation& obs, const PhaseMap& map);

// Orders observations by (phase, source_order, technique id) and collapses
// repeated (technique, phase) pairs to their first occurrence. Strict:
// any unresolvable technique raises UnknownTechnique.
TtpSequence sequence_ttps(const std::vector<TtpObservation>& observations,
                          const PhaseMap& map);

// Warnings gathered by the lenient variant below.
struct SequencingNotes {
  std::vector<TechniqueId> unknown_techniques;
  std::size_t collapsed_duplicates = 0;
};

// Ingestion variant: observations whose technique cannot be placed are kept
// and sorted after all 18 phases (stable in source order) instead of
// failing; `notes` records them and the number of collapsed duplicates.
TtpSequence sequence_ttps(const std::vector<TtpObservation>& observations,
                          const PhaseMap& map, SequencingNotes& notes);

}  // namespace captain
