#include "captain/phase_map.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "captain/errors.hpp"
#include "default_phase_map.hpp"
#include "json.hpp"

namespace captain {

namespace {

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

}  // namespace

std::optional<std::vector<Tactic>> PhaseMap::allowed_tactics(
    const TechniqueId& technique) const {
  auto it = catalog_.find(technique);
  if (it == catalog_.end()) return std::nullopt;
  return it->second;
}

std::optional<Tactic> PhaseMap::override_for(
    const TechniqueId& technique) const {
  auto it = overrides_.find(technique);
  if (it == overrides_.end()) return std::nullopt;
  return it->second;
}

std::vector<TechniqueId> PhaseMap::catalog_ids() const {
  std::vector<TechniqueId> ids;
  ids.reserve(catalog_.size());
  for (const auto& [id, _] : catalog_) ids.push_back(id);
  return ids;
}

PhaseMap parse_phase_map(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("phase map is not valid JSON: ") + e.what());
  }

  PhaseMap map;
  // nlohmann::json orders object keys, so dump() is canonical for the
  // fingerprint regardless of formatting in the source file.
  map.fingerprint_ = hex64(fnv1a64(doc.dump()));

  if (!doc.is_object()) throw ConfigError("phase map root must be an object");

  // Phases: exactly 18, orders a permutation of 1..18.
  if (!doc.contains("phases") || !doc["phases"].is_array()) {
    throw ConfigError("phase map needs a 'phases' array");
  }
  std::map<std::string, KillChainPhase> phase_by_name;
  std::set<int> orders;
  for (const auto& entry : doc["phases"]) {
    if (!entry.contains("name") || !entry.contains("order")) {
      throw ConfigError("each phase needs 'name' and 'order'");
    }
    KillChainPhase phase{entry["name"].get<std::string>(),
                         entry["order"].get<int>()};
    if (phase.order_index < 1 || phase.order_index > kKillChainPhaseCount) {
      throw ConfigError("phase '" + phase.name + "' has order " +
                        std::to_string(phase.order_index) +
                        " outside 1..18");
    }
    if (!orders.insert(phase.order_index).second) {
      throw ConfigError("duplicate phase order " +
                        std::to_string(phase.order_index));
    }
    if (!phase_by_name.emplace(phase.name, phase).second) {
      throw ConfigError("duplicate phase name '" + phase.name + "'");
    }
    map.phases_.push_back(phase);
  }
  if (map.phases_.size() != kKillChainPhaseCount) {
    throw ConfigError("phase map must define exactly 18 phases, got " +
                      std::to_string(map.phases_.size()));
  }
  std::sort(map.phases_.begin(), map.phases_.end());

  // Tactic table: all 14 tactics, each to a known phase.
  if (!doc.contains("tactics") || !doc["tactics"].is_object()) {
    throw ConfigError("phase map needs a 'tactics' object");
  }
  for (Tactic tactic : all_tactics()) {
    const std::string name{to_string(tactic)};
    if (!doc["tactics"].contains(name)) {
      throw ConfigError("phase map is missing tactic '" + name + "'");
    }
    const auto phase_name = doc["tactics"][name].get<std::string>();
    auto it = phase_by_name.find(phase_name);
    if (it == phase_by_name.end()) {
      throw ConfigError("tactic '" + name + "' maps to unknown phase '" +
                        phase_name + "'");
    }
    map.tactic_to_phase_[static_cast<int>(tactic)] = it->second;
  }
  for (const auto& [key, _] : doc["tactics"].items()) {
    parse_tactic(key);  // rejects entries that are not tactics at all
  }

  // Multi-tactic technique table.
  if (doc.contains("multi_tactic")) {
    for (const auto& entry : doc["multi_tactic"]) {
      const auto id = TechniqueId::parse(entry.at("id").get<std::string>());
      std::vector<Tactic> tactics;
      for (const auto& t : entry.at("tactics")) {
        tactics.push_back(parse_tactic(t.get<std::string>()));
      }
      if (tactics.size() < 2) {
        throw ConfigError("multi-tactic entry " + id.str() +
                          " lists fewer than two tactics");
      }
      if (!map.catalog_.emplace(id, std::move(tactics)).second) {
        throw ConfigError("technique " + id.str() +
                          " appears twice in the multi-tactic table");
      }
      map.multi_tactic_.insert(id);
    }
  }

  // Single-tactic catalog snapshot.
  if (doc.contains("techniques")) {
    for (const auto& [key, value] : doc["techniques"].items()) {
      const auto id = TechniqueId::parse(key);
      const auto tactic = parse_tactic(value.get<std::string>());
      if (!map.catalog_.emplace(id, std::vector<Tactic>{tactic}).second) {
        throw ConfigError("technique " + id.str() +
                          " is listed both as single- and multi-tactic");
      }
    }
  }

  // Overrides must name a catalogued technique and one of its tactics.
  if (doc.contains("overrides")) {
    for (const auto& [key, value] : doc["overrides"].items()) {
      const auto id = TechniqueId::parse(key);
      const auto tactic = parse_tactic(value.get<std::string>());
      const auto allowed = map.allowed_tactics(id);
      if (!allowed) {
        throw ConfigError("override for " + id.str() +
                          " names a technique absent from the catalog");
      }
      if (std::find(allowed->begin(), allowed->end(), tactic) ==
          allowed->end()) {
        throw ConfigError("override " + id.str() + " -> '" +
                          std::string(to_string(tactic)) +
                          "' is not an allowed tactic for that technique");
      }
      map.overrides_.emplace(id, tactic);
    }
  }

  return map;
}

PhaseMap load_phase_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read phase map file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_phase_map(buffer.str());
}

const PhaseMap& default_phase_map() {
  static const PhaseMap map = parse_phase_map(generated::kDefaultPhaseMapJson);
  return map;
}

}  // namespace captain
