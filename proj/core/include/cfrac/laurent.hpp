#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cfrac/polynomial.hpp"

namespace cfrac {

// Truncated Laurent series in 1/T:  sum_{k < precision} digit[k] T^(top - k)  + O(T^(top - precision)).
// A nonzero series has digit[0] != 0. The zero-at-precision value records only
// the lowest exponent down to which it is known to vanish; reading its top
// raises PrecisionExhausted instead of guessing.
class LaurentSeries {
 public:
  LaurentSeries(PrimeField f, std::int64_t top, std::vector<Coeff> digits);
  // Zero for every exponent >= low.
  static LaurentSeries zero(PrimeField f, std::int64_t low);
  static LaurentSeries from_polynomial(const Polynomial& a, std::size_t precision);

  const PrimeField& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return digits_.empty(); }
  std::int64_t top() const;
  // Lowest exponent whose coefficient is known.
  std::int64_t low() const noexcept { return low_; }
  std::size_t precision() const noexcept { return digits_.size(); }
  std::span<const Coeff> digits() const noexcept { return digits_; }
  // Coefficient of T^e; InsufficientPrecision below low().
  Coeff coeff(std::int64_t e) const;
  LaurentSeries truncated(std::size_t precision) const;
  // Same known digits on the common range (and same top).
  bool agrees_with(const LaurentSeries& o) const;

  LaurentSeries operator-() const;
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) noexcept {
    return a.field_ == b.field_ && a.low_ == b.low_ && a.digits_ == b.digits_;
  }

 private:
  LaurentSeries(PrimeField f, std::int64_t low) : field_(f), low_(low) {}

  PrimeField field_;
  std::int64_t low_;
  std::vector<Coeff> digits_;
};

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
// Multiplication by an exact polynomial keeps the precision.
LaurentSeries operator*(const LaurentSeries& a, const Polynomial& b);
LaurentSeries operator+(const LaurentSeries& a, const Polynomial& b);
LaurentSeries inverse(const LaurentSeries& a);
LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);

// P/Q expanded to `precision` digits.
LaurentSeries from_rational(const Polynomial& p, const Polynomial& q, std::size_t precision);
// Terms of non-negative degree; InsufficientPrecision if T^0 is unknown.
Polynomial poly_part(const LaurentSeries& a);
// a^r for r a power of p: digits spread out, precision multiplied by r.
LaurentSeries pow_frobenius(const LaurentSeries& a, std::uint64_t r);
LaurentSeries derivative(const LaurentSeries& a);

struct Period {
  std::size_t preperiod;
  std::size_t period;
  friend bool operator==(const Period&, const Period&) = default;
};
// Smallest period, then smallest preperiod, such that the known digits repeat
// with at least three full periods after the preperiod. Digit 0 is the top.
std::optional<Period> detect_period(const LaurentSeries& a);

// "c*t^e + ... + O(t^j)"
std::string to_string(const LaurentSeries& a);
// {"top": .., "precision": .., "coeffs": [..]}; zero: {"zero": true, "low": ..}
std::string to_json(const LaurentSeries& a);

}  // namespace cfrac
