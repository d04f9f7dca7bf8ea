#pragma once

#include <array>
#include <string>
#include <string_view>

#include "captain/errors.hpp"

namespace captain {

// The 14 ATT&CK enterprise tactics. Closed enumeration; parsing an unknown
// name is a ConfigError.
enum class Tactic {
  kReconnaissance,
  kResourceDevelopment,
  kInitialAccess,
  kExecution,
  kPersistence,
  kPrivilegeEscalation,
  kDefenseEvasion,
  kCredentialAccess,
  kDiscovery,
  kLateralMovement,
  kCollection,
  kCommandAndControl,
  kExfiltration,
  kImpact,
};

inline constexpr int kTacticCount = 14;

constexpr std::array<Tactic, kTacticCount> all_tactics() {
  return {
      Tactic::kReconnaissance,   Tactic::kResourceDevelopment,
      Tactic::kInitialAccess,    Tactic::kExecution,
      Tactic::kPersistence,      Tactic::kPrivilegeEscalation,
      Tactic::kDefenseEvasion,   Tactic::kCredentialAccess,
      Tactic::kDiscovery,        Tactic::kLateralMovement,
      Tactic::kCollection,       Tactic::kCommandAndControl,
      Tactic::kExfiltration,     Tactic::kImpact,
  };
}

std::string_view to_string(Tactic tactic);

// Exact, case-sensitive match against the canonical ATT&CK names.
Tactic parse_tactic(std::string_view name);

}  // namespace captain
