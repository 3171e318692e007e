#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pjohnson {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input from the caller: malformed text, violated preconditions,
// mismatched contexts. The CLI maps these to exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : UsageError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class PreconditionError : public UsageError {
 public:
  using UsageError::UsageError;
};

// A configured size guard tripped (word length, exponent magnitude).
// The CLI maps these to exit status 3.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace pjohnson
