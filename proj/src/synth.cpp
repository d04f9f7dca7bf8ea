#include "captain/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>
#include <set>

#include "captain/checked_uint.hpp"
#include "captain/errors.hpp"
#include "captain/sequencer.hpp"

namespace captain {

namespace {

double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

// Box-Muller; avoids the standard library's unspecified normal algorithm so
// a seed means the same campaigns everywhere.
double normal(std::mt19937_64& rng, double mean, double std_dev) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return mean +
         std_dev * std::sqrt(-2.0 * std::log(u1)) *
             std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
}

std::size_t uniform_below(std::mt19937_64& rng, std::size_t bound) {
  const uint128 full = uint128(1) << 64;
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(full - full % bound);
  while (true) {
    const std::uint64_t x = rng();
    if (threshold == 0 || x < threshold) return x % bound;
  }
}

std::string group_name(std::size_t index) {
  const auto number = std::to_string(index + 1);
  const std::size_t pad = number.size() < 2 ? 2 - number.size() : 0;
  return "GROUP-" + std::string(pad, '0') + number;
}

}  // namespace

std::vector<Campaign> synth_campaigns(const SynthSpec& spec,
                                      const PhaseMap& map) {
  if (spec.group_count < 1) throw BadSpec("group_count must be >= 1");
  if (spec.campaigns_per_group < 1) {
    throw BadSpec("campaigns_per_group must be >= 1");
  }
  if (!(spec.preference_strength >= 0.0 && spec.preference_strength <= 1.0)) {
    throw BadSpec("preference_strength must be in [0, 1]");
  }
  if (!(spec.stage_jitter >= 0.0 && spec.stage_jitter <= 1.0)) {
    throw BadSpec("stage_jitter must be in [0, 1]");
  }
  if (spec.playbooks_per_group < 1 || spec.playbook_size < 1) {
    throw BadSpec("playbook settings must be >= 1");
  }
  if (spec.length_min < 1 || spec.length_min > spec.length_max) {
    throw BadSpec("length bounds must satisfy 1 <= min <= max");
  }
  if (spec.length_max > kMaxSequenceLength) {
    throw BadSpec("length_max exceeds the sequence length cap");
  }
  if (!(spec.length_std >= 0.0) || !std::isfinite(spec.length_mean)) {
    throw BadSpec("length distribution parameters must be finite");
  }
  if (!(spec.length_group_share >= 0.0 && spec.length_group_share < 1.0)) {
    throw BadSpec("length_group_share must be in [0, 1)");
  }

  // Universe: every catalogued technique, ranked by its default kill-chain
  // placement so generated sequences look like sequencer output.
  struct Ranked {
    TechniqueId id;
    int order_index;
  };
  std::vector<Ranked> universe;
  for (const auto& id : map.catalog_ids()) {
    const TtpObservation obs{id, std::nullopt, 0};
    universe.push_back({id, resolve_phase(obs, map).order_index});
  }
  std::stable_sort(universe.begin(), universe.end(),
                   [](const Ranked& lhs, const Ranked& rhs) {
                     if (lhs.order_index != rhs.order_index) {
                       return lhs.order_index < rhs.order_index;
                     }
                     return lhs.id < rhs.id;
                   });
  if (universe.size() < spec.length_max) {
    throw BadSpec("phase map catalog is smaller than length_max");
  }
  if (spec.playbook_size > spec.playbook_pool_size ||
      spec.playbook_pool_size > universe.size()) {
    throw BadSpec(
        "need playbook_size <= playbook_pool_size <= technique universe");
  }

  if (!(spec.signature_share >= 0.0 && spec.signature_share <= 1.0)) {
    throw BadSpec("signature_share must be in [0, 1]");
  }
  const auto signature_per_playbook = static_cast<std::size_t>(
      std::llround(spec.signature_share *
                   static_cast<double>(spec.playbook_size)));

  std::mt19937_64 rng(spec.seed);

  // Shared pool the playbooks draw from; smaller pools mean more
  // cross-group overlap and a harder benchmark.
  std::vector<std::size_t> pool;
  {
    std::set<std::size_t> picked;
    while (picked.size() < spec.playbook_pool_size) {
      picked.insert(uniform_below(rng, universe.size()));
    }
    pool.assign(picked.begin(), picked.end());
  }

  // Techniques outside the pool are carved into per-group signature blocks
  // (exclusive tooling nobody else uses).
  std::vector<std::size_t> reserve;
  {
    std::set<std::size_t> pooled(pool.begin(), pool.end());
    for (std::size_t u = 0; u < universe.size(); ++u) {
      if (!pooled.count(u)) reserve.push_back(u);
    }
    for (std::size_t i = reserve.size(); i > 1; --i) {
      std::swap(reserve[i - 1], reserve[uniform_below(rng, i)]);
    }
  }
  const std::size_t signature_block = reserve.size() / spec.group_count;
  if (signature_per_playbook > signature_block) {
    throw BadSpec(
        "signature_share needs more exclusive techniques per group than "
        "the catalog leaves outside the shared pool");
  }

  std::vector<Campaign> campaigns;
  campaigns.reserve(spec.group_count * spec.campaigns_per_group);

  const double group_length_std =
      spec.length_std * std::sqrt(spec.length_group_share);
  const double within_length_std =
      spec.length_std * std::sqrt(1.0 - spec.length_group_share);

  // Footprint means sit on a centered symmetric grid (shuffled across
  // groups): the configured spread without drifting the overall mean.
  std::vector<double> footprint(spec.group_count);
  for (std::size_t g = 0; g < spec.group_count; ++g) {
    const double unit = 2.0 * (static_cast<double>(g) + 0.5) /
                            static_cast<double>(spec.group_count) - 1.0;
    footprint[g] = spec.length_mean +
                   group_length_std * std::sqrt(3.0) * unit;
  }
  for (std::size_t i = footprint.size(); i > 1; --i) {
    std::swap(footprint[i - 1], footprint[uniform_below(rng, i)]);
  }

  for (std::size_t g = 0; g < spec.group_count; ++g) {
    const std::string label = group_name(g);
    const double group_length_mean = footprint[g];

    // Habitual ordering: phase rank with occasional per-group stage shifts
    // plus a group-specific within-phase order. Campaigns of one group
    // sequence shared techniques identically; other groups interleave them
    // differently.
    std::vector<std::uint64_t> priority(universe.size());
    for (std::size_t u = 0; u < universe.size(); ++u) {
      long long stage = universe[u].order_index;
      if (uniform01(rng) < spec.stage_jitter) {
        stage += static_cast<long long>(uniform_below(rng, 7)) - 3;
        stage = std::clamp(stage, 1ll,
                           static_cast<long long>(kKillChainPhaseCount));
      }
      priority[u] = static_cast<std::uint64_t>(stage) << 32 |
                    (rng() & 0xffffffffu);
    }

    // Playbooks: exclusive signature picks plus shared-pool tradecraft.
    const auto* signature_begin = reserve.data() + g * signature_block;
    std::vector<std::vector<std::size_t>> playbooks(spec.playbooks_per_group);
    for (auto& playbook : playbooks) {
      std::set<std::size_t> picked;
      while (picked.size() < signature_per_playbook) {
        picked.insert(signature_begin[uniform_below(rng, signature_block)]);
      }
      while (picked.size() < spec.playbook_size) {
        picked.insert(pool[uniform_below(rng, pool.size())]);
      }
      playbook.assign(picked.begin(), picked.end());
    }

    for (std::size_t c = 0; c < spec.campaigns_per_group; ++c) {
      const double raw = normal(rng, group_length_mean, within_length_std);
      const auto length = static_cast<std::size_t>(std::clamp(
          std::llround(raw), static_cast<long long>(spec.length_min),
          static_cast<long long>(spec.length_max)));

      auto remaining = playbooks[uniform_below(rng, playbooks.size())];
      std::set<std::size_t> chosen;
      auto drop_remaining = [&remaining](std::size_t index) {
        auto it = std::find(remaining.begin(), remaining.end(), index);
        if (it != remaining.end()) {
          *it = remaining.back();
          remaining.pop_back();
        }
      };
      while (chosen.size() < length) {
        if (!remaining.empty() && uniform01(rng) < spec.preference_strength) {
          const auto at = uniform_below(rng, remaining.size());
          const auto index = remaining[at];
          remaining[at] = remaining.back();
          remaining.pop_back();
          chosen.insert(index);
        } else {
          const auto index = uniform_below(rng, universe.size());
          if (chosen.insert(index).second) drop_remaining(index);
        }
      }

      std::vector<std::size_t> ordered(chosen.begin(), chosen.end());
      std::sort(ordered.begin(), ordered.end(),
                [&priority](std::size_t lhs, std::size_t rhs) {
                  return std::tie(priority[lhs], lhs) <
                         std::tie(priority[rhs], rhs);
                });
      std::vector<TechniqueId> items;
      items.reserve(ordered.size());
      for (std::size_t index : ordered) items.push_back(universe[index].id);
      campaigns.push_back(Campaign{
          label + "/c" + std::to_string(c + 1),
          label,
          TtpSequence(std::move(items)),
          std::nullopt,
          std::nullopt,
          std::nullopt,
      });
    }
  }
  return campaigns;
}

std::vector<Campaign> synth_campaigns(const SynthSpec& spec) {
  return synth_campaigns(spec, default_phase_map());
}

}  // namespace captain
