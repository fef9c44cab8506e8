#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different polynomial rings or coefficient domains.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial text. position() is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A Groebner computation or search exceeded its step budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The requested operation is not supported for this input (e.g. an
/// infinite-dimensional quotient where a finite one is required).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// A constructed certificate failed its own re-check. Always a bug.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hilb
