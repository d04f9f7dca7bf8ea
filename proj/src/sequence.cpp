#include "captain/sequence.hpp"

#include <string>

namespace captain {

TtpSequence::TtpSequence(std::vector<TechniqueId> items, std::size_t max_length)
    : items_(std::move(items)) {
  if (items_.empty()) throw EmptyInput("a TTP sequence must not be empty");
  if (items_.size() > max_length) {
    throw LengthCap("sequence length " + std::to_string(items_.size()) +
                    " exceeds the cap of " + std::to_string(max_length));
  }
}

TtpSequence make_sequence(const std::vector<std::string>& ids) {
  std::vector<TechniqueId> items;
  items.reserve(ids.size());
  for (const auto& id : ids) items.push_back(TechniqueId::parse(id));
  return TtpSequence(std::move(items));
}

}  // namespace captain
