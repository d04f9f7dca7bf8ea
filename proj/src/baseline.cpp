#include "captain/baseline.hpp"

namespace captain {

BaselineDatabase::BaselineDatabase(GroupMap groups)
    : groups_(std::move(groups)) {
  if (groups_.empty()) {
    throw EmptyBaseline("a baseline database needs at least one group");
  }
  for (const auto& [name, sequences] : groups_) {
    if (name.empty()) {
      throw EmptyGroup("group names must not be empty");
    }
    if (sequences.empty()) {
      throw EmptyGroup("group '" + name + "' has no sequences");
    }
  }
}

std::size_t BaselineDatabase::sequence_count(const std::string& group) const {
  auto it = groups_.find(group);
  return it == groups_.end() ? 0 : it->second.size();
}

std::size_t BaselineDatabase::total_sequence_count() const {
  std::size_t total = 0;
  for (const auto& [_, sequences] : groups_) total += sequences.size();
  return total;
}

}  // namespace captain
