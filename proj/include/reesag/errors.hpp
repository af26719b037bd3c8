#pragma once

#include <stdexcept>
#include <string>

namespace reesag {

// Malformed user input: bad expressions, bad schema, bad flags.  CLI exit 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failure carrying a byte offset into the offending expression.
class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : InputError(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A mathematical precondition fails on otherwise well-formed data.  CLI exit 3.
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace reesag
