#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "cfrac/prime_field.hpp"

namespace cfrac {

// Dense univariate polynomial over F_p, coefficients in ascending powers of T.
// The stored vector never ends in a zero; the zero polynomial is empty.
class Polynomial {
 public:
  static constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

  explicit Polynomial(PrimeField f) : field_(f) {}
  Polynomial(PrimeField f, std::vector<Coeff> ascending);
  Polynomial(PrimeField f, std::initializer_list<std::int64_t> ascending);

  static Polynomial constant(PrimeField f, std::int64_t c);
  static Polynomial monomial(PrimeField f, std::int64_t c, std::size_t k);
  static Polynomial variable(PrimeField f) { return monomial(f, 1, 1); }

  const PrimeField& field() const noexcept { return field_; }
  // kZeroDegree for the zero polynomial.
  std::int64_t degree() const noexcept {
    return c_.empty() ? kZeroDegree : static_cast<std::int64_t>(c_.size()) - 1;
  }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  std::size_t size() const noexcept { return c_.size(); }
  Coeff coeff(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : 0; }
  Coeff leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  std::span<const Coeff> coeffs() const noexcept { return c_; }
  // Number of trailing zero coefficients (T-adic valuation); size() for zero.
  std::size_t valuation() const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  Polynomial scaled(Coeff c) const;
  Polynomial scaled(const FieldElement& c) const;
  // P * T^k
  Polynomial shifted(std::size_t k) const;
  // P(T^k)
  Polynomial inflated(std::uint64_t k) const;
  // P mod T^n
  Polynomial truncated(std::size_t n) const;
  Polynomial monic() const;
  Polynomial derivative() const;
  Coeff evaluate(Coeff x) const noexcept;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void normalize();

  PrimeField field_;
  std::vector<Coeff> c_;
};

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

// Euclidean division, deg(remainder) < deg(v). Throws DivisionByZero if v = 0.
DivRem divrem(const Polynomial& u, const Polynomial& v);
// Throws NonDivisible unless v divides u.
Polynomial divide_exact(const Polynomial& u, const Polynomial& v);
// Monic gcd; throws BothZero when both inputs vanish.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& a, std::uint64_t e);
// The g with g^r = a, r a power of p. Throws NotAFrobeniusPower.
Polynomial frobenius_root(const Polynomial& a, std::uint64_t r);

// Canonical text: descending powers, "c*t^k", unit coefficients elided.
std::string to_string(const Polynomial& a, char var = 't');
std::ostream& operator<<(std::ostream& os, const Polynomial& a);

// Coefficient-vector kernels shared by the series code.
namespace kernel {

// Full product of two coefficient vectors.
std::vector<Coeff> multiply(std::span<const Coeff> a, std::span<const Coeff> b, const PrimeField& f);
// Product truncated to its first n coefficients.
std::vector<Coeff> multiply_low(std::span<const Coeff> a, std::span<const Coeff> b, std::size_t n,
                                const PrimeField& f);
// g with f*g = 1 mod x^n; requires f[0] != 0.
std::vector<Coeff> series_inverse(std::span<const Coeff> f, std::size_t n, const PrimeField& f_p);

}  // namespace kernel

}  // namespace cfrac
