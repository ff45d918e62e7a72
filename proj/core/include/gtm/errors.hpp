#pragma once

#include <stdexcept>
#include <string>

namespace gtm {

// Input text could not be parsed. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

// An argument violates a documented precondition: unknown vertex, ground
// element outside the ground set, malformed token, and the like.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An exhaustive sweep would exceed the configured enumeration limit.
class LimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace gtm
