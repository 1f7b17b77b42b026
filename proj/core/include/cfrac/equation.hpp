#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "cfrac/bivariate.hpp"
#include "cfrac/parse.hpp"
#include "cfrac/word.hpp"

namespace cfrac {

// P(x) = sum_i c_i(T) x^i with n = deg_x P >= 1.
class AlgebraicEquation {
 public:
  explicit AlgebraicEquation(XPolynomial poly);
  static AlgebraicEquation parse(std::string_view text, const PrimeField& f, const Bindings& b = {});

  const PrimeField& field() const noexcept { return poly_.field(); }
  const XPolynomial& poly() const noexcept { return poly_; }
  std::size_t degree() const noexcept { return static_cast<std::size_t>(poly_.degree()); }
  const Polynomial& coeff(std::size_t i) const { return poly_.coeff(i); }

  // P(x + q).
  AlgebraicEquation taylor_shift(const Polynomial& q) const;
  // x^n P(1/x). Requires c_0 != 0.
  AlgebraicEquation reversed() const;
  Polynomial evaluate(const Polynomial& x) const { return poly_.evaluate(x); }
  bool proportional_to(const AlgebraicEquation& o) const;

  friend bool operator==(const AlgebraicEquation& a, const AlgebraicEquation& b) noexcept {
    return a.poly_ == b.poly_;
  }

 private:
  XPolynomial poly_;
};

std::string to_string(const AlgebraicEquation& e);

// A x^(r+1) + B x^r + C x + D = 0, r a power of p.
struct HyperquadraticEquation {
  Polynomial a, b, c, d;
  std::uint64_t r;

  AlgebraicEquation to_equation() const;
  // Recognises the shape; nullopt when some other power of x occurs.
  static std::optional<HyperquadraticEquation> from_equation(const AlgebraicEquation& e);
};

// Coefficients of alpha = (U alpha^r + V) / (W alpha^r + Z) for alpha = [prefix, alpha_{l+1}]
// and alpha^r = P alpha_{l+1} + Q.
struct Mobius {
  Polynomial u, v, w, z;
};
Mobius mobius_from_prefix(const Word& prefix, const Polynomial& p, const Polynomial& q);

// Equation of alpha = [prefix, alpha_{l+1}] with alpha^r = P alpha_{l+1} + Q.
AlgebraicEquation hyperquadratic_from_prefix(const Word& prefix, const Polynomial& p, const Polynomial& q,
                                             std::uint64_t r);
// Equation of [prefix, period, period, ...], divided by its content.
AlgebraicEquation quadratic_from_periodic(const Word& prefix, const Word& period);
// r > 1 + deg(UZ - VW); DegenerateTransformation when UZ = VW.
bool unbounded_predicate(const Polynomial& u, const Polynomial& v, const Polynomial& w, const Polynomial& z,
                         std::uint64_t r);

// True when r is p^t for some t >= 0.
bool is_power_of(std::uint64_t r, std::uint64_t p);

}  // namespace cfrac
