#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "captain/errors.hpp"

namespace captain {

// MITRE ATT&CK technique identifier: "T" + 4 digits, with an optional
// ".xxx" sub-technique suffix. Ordering is lexicographic on the canonical
// string, which the format makes consistent with numeric order.
class TechniqueId {
 public:
  TechniqueId() = default;

  // Parses and canonicalizes; throws MalformedId on anything else.
  static TechniqueId parse(std::string_view text);

  // True iff `text` matches ^T[0-9]{4}(\.[0-9]{3})?$
  static bool is_valid(std::string_view text);

  const std::string& str() const { return value_; }

  auto operator<=>(const TechniqueId&) const = default;

 private:
  explicit TechniqueId(std::string value) : value_(std::move(value)) {}
  std::string value_;
};

}  // namespace captain
