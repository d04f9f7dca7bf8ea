#pragma once

#include <cstdint>
#include <vector>

#include "captain/phase_map.hpp"
#include "captain/sequence.hpp"

namespace captain {

// Knobs for the deterministic synthetic benchmark. Each group owns a few
// "playbooks" (preferred technique subsets, its TTP preference weights);
// campaigns mix playbook picks with uniform noise at preference_strength.
// All playbooks come from one shared pool of playbook_pool_size techniques,
// so groups overlap the way real tradecraft does. Ordering is habitual per
// group: every group ranks techniques by kill-chain phase, but with its own
// within-phase ordering and, at stage_jitter probability per technique, a
// small habitual shift of the phase itself (the same technique placed at a
// different stage by different actors). Strength 0 makes groups
// indistinguishable, 1 makes them pure playbook replays.
struct SynthSpec {
  std::size_t group_count = 11;
  std::size_t campaigns_per_group = 50;
  double preference_strength = 0.9;
  std::size_t playbooks_per_group = 2;
  std::size_t playbook_size = 16;
  std::size_t playbook_pool_size = 28;
  // Fraction of each playbook reserved for techniques exclusive to the
  // group (custom tooling); the rest comes from the shared pool.
  double signature_share = 0.1;
  double stage_jitter = 1.0;
  double length_mean = 12.22;
  double length_std = 6.33;
  // Share of the length variance carried by per-group operational
  // footprints (groups run characteristically short or long operations);
  // the remainder is within-group. Total mean/std stay as configured.
  double length_group_share = 0.7;
  std::size_t length_min = 4;
  std::size_t length_max = 34;
  std::uint64_t seed = 0;
};

// Labeled campaigns (groups "GROUP-01"...), reproducible for a fixed spec.
// Throws BadSpec on out-of-range parameters.
std::vector<Campaign> synth_campaigns(const SynthSpec& spec,
                                      const PhaseMap& map);

std::vector<Campaign> synth_campaigns(const SynthSpec& spec);

}  // namespace captain
