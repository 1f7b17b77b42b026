#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfrac {

// Base of every error raised by the library. Precondition violations on
// arguments (non-prime modulus, bad family parameters) use std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial or equation text. position is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Errors that come from the mathematics rather than from the input text.
class MathError : public Error {
 public:
  using Error::Error;
};

#define CFRAC_MATH_ERROR(Name)          \
  class Name : public MathError {       \
   public:                              \
    using MathError::MathError;         \
  }

CFRAC_MATH_ERROR(DivisionByZero);
CFRAC_MATH_ERROR(FieldMismatch);
CFRAC_MATH_ERROR(BothZero);
CFRAC_MATH_ERROR(ZeroScalar);
CFRAC_MATH_ERROR(PrecisionExhausted);
CFRAC_MATH_ERROR(InsufficientPrecision);
CFRAC_MATH_ERROR(NotAFrobeniusPower);
CFRAC_MATH_ERROR(DominantRootViolation);
CFRAC_MATH_ERROR(SingularRoot);
CFRAC_MATH_ERROR(NoConvergence);
CFRAC_MATH_ERROR(PrecisionBudgetExceeded);
CFRAC_MATH_ERROR(DegenerateTransformation);
CFRAC_MATH_ERROR(NonDivisible);
CFRAC_MATH_ERROR(UnsupportedFamily);
CFRAC_MATH_ERROR(NoClosedForm);
CFRAC_MATH_ERROR(TransportStarved);

#undef CFRAC_MATH_ERROR

}  // namespace cfrac
