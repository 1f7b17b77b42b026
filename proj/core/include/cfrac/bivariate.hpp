#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfrac/polynomial.hpp"

namespace cfrac {

// Polynomial in x with coefficients in F_p[T], ascending powers of x.
// Trailing zero coefficients are stripped; the zero element is empty.
class XPolynomial {
 public:
  explicit XPolynomial(PrimeField f) : field_(f) {}
  XPolynomial(PrimeField f, std::vector<Polynomial> ascending);
  static XPolynomial from_t(const Polynomial& c);
  static XPolynomial x(PrimeField f);

  const PrimeField& field() const noexcept { return field_; }
  // -1 for zero.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  // True when free of both x and T.
  bool is_scalar() const noexcept { return c_.empty() || (c_.size() == 1 && c_[0].is_constant()); }
  Coeff scalar_value() const noexcept { return c_.empty() ? 0 : c_[0].coeff(0); }
  const Polynomial& coeff(std::size_t i) const;
  const std::vector<Polynomial>& coeffs() const noexcept { return c_; }
  // max over i of deg_T of the x^i coefficient; kZeroDegree for zero.
  std::int64_t t_degree() const noexcept;

  XPolynomial operator-() const;
  friend XPolynomial operator+(const XPolynomial& a, const XPolynomial& b);
  friend XPolynomial operator-(const XPolynomial& a, const XPolynomial& b);
  friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b);
  friend bool operator==(const XPolynomial& a, const XPolynomial& b) noexcept {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  XPolynomial scaled(Coeff c) const;
  XPolynomial derivative_x() const;
  // Substitute x = value exactly.
  Polynomial evaluate(const Polynomial& value) const;

 private:
  void normalize();

  PrimeField field_;
  std::vector<Polynomial> c_;
  Polynomial zero_{field_};
};

XPolynomial pow(const XPolynomial& a, std::uint64_t e);

// Descending powers of x; composite coefficients are parenthesised.
std::string to_string(const XPolynomial& a);

}  // namespace cfrac
