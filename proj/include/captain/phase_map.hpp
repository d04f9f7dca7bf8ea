#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "captain/kill_chain.hpp"
#include "captain/tactic.hpp"
#include "captain/technique.hpp"

namespace captain {

// The merged kill-chain model: 18 ordered phases, the tactic->phase table,
// a technique->tactic catalog snapshot, the multi-tactic technique table,
// and per-deployment overrides. Immutable once loaded.
class PhaseMap {
 public:
  const KillChainPhase& phase_for_tactic(Tactic tactic) const {
    return tactic_to_phase_[static_cast<int>(tactic)];
  }

  // All phases in kill-chain order.
  const std::vector<KillChainPhase>& phases() const { return phases_; }

  // Tactics a technique may legitimately carry, or nullopt when the
  // technique is absent from the bundled catalog.
  std::optional<std::vector<Tactic>> allowed_tactics(
      const TechniqueId& technique) const;

  bool is_multi_tactic(const TechniqueId& technique) const {
    return multi_tactic_.count(technique) != 0;
  }
  std::size_t multi_tactic_count() const { return multi_tactic_.size(); }
  std::size_t catalog_size() const { return catalog_.size(); }

  // Every catalogued technique (single- and multi-tactic), id-sorted.
  std::vector<TechniqueId> catalog_ids() const;

  std::optional<Tactic> override_for(const TechniqueId& technique) const;

  // Stable hash of the source document; persisted into baseline files so a
  // drifting map is detectable.
  const std::string& fingerprint() const { return fingerprint_; }

 private:
  friend PhaseMap parse_phase_map(const std::string& json_text);

  std::vector<KillChainPhase> phases_;
  std::array<KillChainPhase, kTacticCount> tactic_to_phase_;
  std::map<TechniqueId, std::vector<Tactic>> catalog_;
  std::set<TechniqueId> multi_tactic_;
  std::map<TechniqueId, Tactic> overrides_;
  std::string fingerprint_;
};

// Parses and validates a phase map document. Throws ConfigError naming the
// missing tactic, malformed phase table or invalid override.
PhaseMap parse_phase_map(const std::string& json_text);

// Reads the document from disk first; ParseError if unreadable.
PhaseMap load_phase_map(const std::string& path);

// The map compiled into the library (data/phase_map.json).
const PhaseMap& default_phase_map();

}  // namespace captain
