#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leibniz {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Operand shapes (vector lengths, ambient dimensions) disagree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exhaustive enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The requested mode cannot run on this input (e.g. exhaustive search over Q).
class UnsupportedMode : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold: the table is not Leibniz, a subspace is
/// not an ideal, a datum or triple violates its axioms, a witness is rejected.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// A mathematically guaranteed statement failed on concrete data. This can only mean a
/// bug in the implementation; the CLI maps it to exit code 1.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace leibniz
