#pragma once

#include <stdexcept>
#include <string>

namespace crossdrop {

/// Base class of every error raised for bad input or a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold for its input.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (edges, crossings, subsets) would be exceeded.
class CapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed graph or polynomial text. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An identity that must hold by construction failed. Indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace crossdrop
