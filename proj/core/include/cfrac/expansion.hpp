#pragma once

#include <cstddef>
#include <optional>

#include "cfrac/bivariate.hpp"
#include "cfrac/equation.hpp"
#include "cfrac/laurent.hpp"
#include "cfrac/word.hpp"

namespace cfrac {

// Partial quotients by repeated substitution x -> x + q, x -> 1/x, with
// q the polynomial part of -c_{n-1}/c_n. A first quotient of degree <= 0
// becomes the head. From the second step on the equation must have exactly
// one root of absolute value > 1 and all others of absolute value < 1
// (read off the Newton polygon); otherwise DominantRootViolation. Stops early
// when the shifted equation has the quotient itself as a root.
Word expand_root_direct(const AlgebraicEquation& eq, std::size_t count);

// Newton iteration with precision doubling from `seed`, returning `precision`
// digits of the root the seed approximates. Requires v(P(seed)) > 2 v(P'(seed))
// in 1/T, else SingularRoot. Equations in x^p alone are solved for x^p first
// and the root recovered by a Frobenius root of the series.
LaurentSeries hensel_root(const AlgebraicEquation& eq, const LaurentSeries& seed, std::size_t precision);

struct CertifiedOptions {
  // Seed for hensel_root; by default taken from a few letters of the direct engine.
  std::optional<LaurentSeries> seed;
  // Largest number of root digits tried before PrecisionBudgetExceeded.
  std::size_t max_precision = std::size_t{1} << 26;
};

// Root digits at doubling precision until `count` letters are certified by cf_of_series.
Word expand_root_certified(const AlgebraicEquation& eq, std::size_t count, const CertifiedOptions& opts = {});

// Seed series built from the first letters of the direct engine, long enough
// for the Newton condition.
LaurentSeries direct_seed(const AlgebraicEquation& eq);

// sum_i c_i(T) s^i on series.
LaurentSeries evaluate(const XPolynomial& p, const LaurentSeries& s);

// alpha' = num(alpha) / den(alpha) on the common known digits of both sides.
struct RationalRelation {
  XPolynomial num;
  XPolynomial den;
};
bool verify_derivative_relation(const AlgebraicEquation& eq, const RationalRelation& relation,
                                std::size_t precision, const std::optional<LaurentSeries>& seed = std::nullopt);

}  // namespace cfrac
