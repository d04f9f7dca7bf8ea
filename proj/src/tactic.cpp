#include "captain/tactic.hpp"

namespace captain {

namespace {

constexpr std::array<std::string_view, kTacticCount> kNames = {
    "Reconnaissance",   "Resource Development", "Initial Access",
    "Execution",        "Persistence",          "Privilege Escalation",
    "Defense Evasion",  "Credential Access",    "Discovery",
    "Lateral Movement", "Collection",           "Command and Control",
    "Exfiltration",     "Impact",
};

}  // namespace

std::string_view to_string(Tactic tactic) {
  return kNames[static_cast<int>(tactic)];
}

Tactic parse_tactic(std::string_view name) {
  for (int i = 0; i < kTacticCount; ++i) {
    if (kNames[i] == name) return static_cast<Tactic>(i);
  }
  throw ConfigError("unknown tactic name: '" + std::string(name) + "'");
}

}  // namespace captain
