#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace factorlab {

/// Malformed textual input. `offset` is the byte position of the first bad byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// The instance is larger than an exact (exponential) routine accepts.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A guarantee that should hold mathematically did not. Seeing this means
/// either a bug or a counterexample to a published result.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace factorlab
