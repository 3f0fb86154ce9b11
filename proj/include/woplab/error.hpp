#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace woplab {

/// Malformed text input. `position()` is the 0-based offset of the offending
/// character in the input.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string &message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A requested size exceeds the configured enumeration bound.
class ResourceLimitError : public std::length_error {
public:
  using std::length_error::length_error;
};

} // namespace woplab
