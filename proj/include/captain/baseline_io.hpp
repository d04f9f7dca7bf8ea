#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "captain/baseline.hpp"
#include "captain/sequence.hpp"

namespace captain {

// On-disk baseline: the group database plus the provenance needed to
// reproduce it (split seed, phase map fingerprint).
struct BaselineFile {
  BaselineDatabase db;
  std::optional<std::uint64_t> seed;
  std::string phase_map_fingerprint;
};

void save_baseline(const BaselineFile& file, const std::string& path);

// Throws CorruptFile on unreadable/invalid content, VersionMismatch on a
// foreign format tag or version.
BaselineFile load_baseline(const std::string& path);

// Labeled evaluation campaigns, stored already sequenced so evaluation
// never re-runs phase resolution.
struct EvalSetFile {
  std::vector<Campaign> campaigns;
  std::string phase_map_fingerprint;
};

void save_eval_set(const EvalSetFile& file, const std::string& path);
EvalSetFile load_eval_set(const std::string& path);

}  // namespace captain
