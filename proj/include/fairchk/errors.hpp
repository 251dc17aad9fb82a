#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fairchk {

// Misuse of the library interface: foreign handles, violated preconditions.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed model or pairs text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed text describing an invalid model (sink vertex, bad range, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the debug invariant checks.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fairchk
