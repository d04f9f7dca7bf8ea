#pragma once

#include <stdexcept>
#include <string>

namespace captain {

// Base class for every domain error raised by the library. The CLI maps
// these to exit code 1; anything else escaping main is a bug.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class MalformedId : public Error {
 public:
  explicit MalformedId(const std::string& text)
      : Error("malformed technique id: '" + text + "'") {}
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class UnknownTechnique : public Error {
 public:
  explicit UnknownTechnique(const std::string& id)
      : Error("technique " + id +
              " is not in the bundled phase map and no tactic hint was given"),
        technique_(id) {}
  const std::string& technique() const { return technique_; }

 private:
  std::string technique_;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class LengthCap : public Error {
 public:
  using Error::Error;
};

class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

class EmptyGroup : public Error {
 public:
  using Error::Error;
};

class EmptyBaseline : public Error {
 public:
  using Error::Error;
};

class BadWindow : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class EmptyDataset : public Error {
 public:
  using Error::Error;
};

class GroupTooSmall : public Error {
 public:
  using Error::Error;
};

class VersionMismatch : public Error {
 public:
  using Error::Error;
};

class CorruptFile : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  using Error::Error;
};

class BadSpec : public Error {
 public:
  using Error::Error;
};

}  // namespace captain
