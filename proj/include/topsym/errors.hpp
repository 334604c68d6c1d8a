#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topsym {

/// Malformed or contract-violating input supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a complex fails the pseudomanifold test required by an operation.
class NotPseudomanifoldError : public InputError {
 public:
  using InputError::InputError;
};

/// JSON that could not be parsed; carries the byte offset reported by the parser.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : InputError(what), byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// A discrete gradient that turned out to contain a closed V-path.
class InvalidMatchingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace topsym
