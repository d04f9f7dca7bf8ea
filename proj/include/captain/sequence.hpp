#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "captain/errors.hpp"
#include "captain/tactic.hpp"
#include "captain/technique.hpp"

namespace captain {

// Hard cap on sequence length. Every count produced under this cap fits a
// 128-bit unsigned integer with headroom (64 * 2^63 = 2^69).
inline constexpr std::size_t kMaxSequenceLength = 64;

// One observed technique before kill-chain ordering. source_order is the
// position in the original listing and must be unique within one campaign.
struct TtpObservation {
  TechniqueId technique;
  std::optional<Tactic> tactic_hint;
  std::size_t source_order = 0;
};

// A kill-chain-ordered list of technique IDs; the unit of comparison.
class TtpSequence {
 public:
  // Throws EmptyInput on an empty list, LengthCap above `max_length`.
  explicit TtpSequence(std::vector<TechniqueId> items,
                       std::size_t max_length = kMaxSequenceLength);

  const std::vector<TechniqueId>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  const TechniqueId& operator[](std::size_t i) const { return items_[i]; }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool operator==(const TtpSequence& other) const = default;

 private:
  std::vector<TechniqueId> items_;
};

// Convenience for tests and tooling: parses each token as a TechniqueId.
TtpSequence make_sequence(const std::vector<std::string>& ids);

// One attack campaign: an ordered TTP sequence plus report metadata.
struct Campaign {
  std::string id;
  std::optional<std::string> group_label;
  TtpSequence sequence;
  std::optional<int> year;
  std::optional<std::string> report_name;
  std::optional<std::string> report_link;
};

}  // namespace captain
