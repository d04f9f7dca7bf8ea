#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "captain/errors.hpp"
#include "captain/sequence.hpp"

namespace captain {

// Per-group reference collection of kill-chain-ordered TTP sequences.
// Counts are always derived from the contents, never stored.
class BaselineDatabase {
 public:
  using GroupMap = std::map<std::string, std::vector<TtpSequence>>;

  // Throws EmptyBaseline when `groups` is empty, EmptyGroup when any group
  // list is empty.
  explicit BaselineDatabase(GroupMap groups);

  const GroupMap& groups() const { return groups_; }
  std::size_t group_count() const { return groups_.size(); }

  std::size_t sequence_count(const std::string& group) const;
  std::size_t total_sequence_count() const;
  bool has_group(const std::string& group) const {
    return groups_.count(group) != 0;
  }

 private:
  GroupMap groups_;
};

// Ranked attribution outcome: every baseline group exactly once, scores
// non-increasing, ties broken by ascending group name and flagged.
struct AttributionResult {
  struct Entry {
    std::string group;
    double score = 0.0;
  };

  std::vector<Entry> ranking;
  std::string attributed;  // ranking front
  bool tie = false;        // top score shared by more than one group
};

}  // namespace captain
