#pragma once

#include <stdexcept>
#include <string>

namespace mrange {

/// Root of the library's exception hierarchy. Each subclass maps onto one
/// CLI exit code (see cli.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input. Carries the byte offset of the
/// offending token when one is known.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  explicit ParseError(const std::string& message) : Error(message) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_ = 0;
};

/// A mathematical precondition does not hold: division by zero, a constant
/// function where a non-constant one is required, a spectrum outside Q(i).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
};

/// The verdict is sound but no witness matrix with entries in Q(i) can be
/// produced by the exact construction.
class WitnessUnavailable : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A self-check failed. Always indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mrange
