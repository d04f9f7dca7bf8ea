#pragma once

#include <compare>
#include <string>

namespace captain {

inline constexpr int kKillChainPhaseCount = 18;

// One phase of the 18-stage unified kill chain. A phase map holds exactly 18
// of these with order_index forming a permutation of 1..18; the total order
// on phases is the order of order_index.
struct KillChainPhase {
  std::string name;
  int order_index = 0;  // 1..18

  auto operator<=>(const KillChainPhase& other) const {
    return order_index <=> other.order_index;
  }
  bool operator==(const KillChainPhase& other) const = default;
};

}  // namespace captain
