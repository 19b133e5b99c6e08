#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cykit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (Stirling index out of range, division by a zero polynomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold for the input (non-MUM operator,
/// wrong order, C-Y condition violated, mixed truncation orders, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Rational function with a pole of order >= 2 where only simple poles are
/// supported.
class UnsupportedSingularity : public Error {
 public:
  using Error::Error;
};

/// A construction that should always succeed for valid input found no
/// solution (for example no order-5 relation in the exterior square).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Recurrence hit a zero leading coefficient.
class EnumerationError : public Error {
 public:
  EnumerationError(const std::string& what, long step) : Error(what), step_(step) {}
  long step() const noexcept { return step_; }

 private:
  long step_;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Operator-text syntax error; `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cykit
