#include "captain/technique.hpp"

#include <cctype>

namespace captain {

bool TechniqueId::is_valid(std::string_view text) {
  auto digits = [](std::string_view s) {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  if (text.size() == 5) {
    return text[0] == 'T' && digits(text.substr(1));
  }
  if (text.size() == 9) {
    return text[0] == 'T' && text[5] == '.' && digits(text.substr(1, 4)) &&
           digits(text.substr(6));
  }
  return false;
}

TechniqueId TechniqueId::parse(std::string_view text) {
  if (!is_valid(text)) throw MalformedId(std::string(text));
  return TechniqueId(std::string(text));
}

}  // namespace captain
