#include "cfrac/equation.hpp"

#include <map>
#include <stdexcept>

#include "cfrac/errors.hpp"

namespace cfrac {

namespace {

// C(a, b) mod p by Lucas' theorem.
Coeff binomial_mod(std::uint64_t a, std::uint64_t b, const PrimeField& f) {
  const std::uint64_t p = f.modulus();
  Coeff r = 1;
  while (a || b) {
    std::uint64_t ad = a % p, bd = b % p;
    if (bd > ad) return 0;
    Coeff num = 1, den = 1;
    for (std::uint64_t j = 0; j < bd; ++j) {
      num = f.mul(num, static_cast<Coeff>(ad - j));
      den = f.mul(den, static_cast<Coeff>(j + 1));
    }
    r = f.mul(r, f.div(num, den));
    a /= p;
    b /= p;
  }
  return r;
}

// 2x2 matrix product of [[a_i, 1], [1, 0]] over the letters: [[x_l, x_{l-1}], [y_l, y_{l-1}]].
struct Matrix {
  Polynomial x, x_prev, y, y_prev;
};

Matrix prefix_matrix(const PrimeField& f, const Word& w) {
  Matrix m{Polynomial::constant(f, 1), Polynomial(f), Polynomial(f), Polynomial::constant(f, 1)};
  auto absorb = [&m](const Polynomial& a) {
    Polynomial x = a * m.x + m.x_prev;
    Polynomial y = a * m.y + m.y_prev;
    m.x_prev = std::move(m.x);
    m.y_prev = std::move(m.y);
    m.x = std::move(x);
    m.y = std::move(y);
  };
  if (w.head()) absorb(*w.head());
  for (const auto& a : w.letters()) absorb(a);
  return m;
}

XPolynomial linear(const Polynomial& c1, const Polynomial& c0) {
  return XPolynomial(c0.field(), {c0, c1});
}

}  // namespace

bool is_power_of(std::uint64_t r, std::uint64_t p) {
  if (r == 0 || p < 2) return false;
  while (r % p == 0) r /= p;
  return r == 1;
}

AlgebraicEquation::AlgebraicEquation(XPolynomial poly) : poly_(std::move(poly)) {
  if (poly_.degree() < 1) throw std::invalid_argument("equation must have degree >= 1 in x");
}

AlgebraicEquation AlgebraicEquation::parse(std::string_view text, const PrimeField& f, const Bindings& b) {
  XPolynomial p = parse_bivariate(text, f, b);
  if (p.degree() < 1) throw SyntaxError("equation does not involve x", 0);
  return AlgebraicEquation(std::move(p));
}

AlgebraicEquation AlgebraicEquation::taylor_shift(const Polynomial& q) const {
  const PrimeField& f = field();
  const std::size_t n = degree();
  std::map<std::uint64_t, Polynomial> powers;
  // q^d with q^(p m) = q^m (T^p) reused.
  auto power = [&](auto&& self, std::uint64_t d) -> const Polynomial& {
    auto it = powers.find(d);
    if (it != powers.end()) return it->second;
    Polynomial v(f);
    if (d == 0) {
      v = Polynomial::constant(f, 1);
    } else if (d % f.modulus() == 0) {
      v = self(self, d / f.modulus()).inflated(f.modulus());
    } else {
      v = self(self, d - 1) * q;
    }
    return powers.emplace(d, std::move(v)).first->second;
  };
  std::vector<Polynomial> out(n + 1, Polynomial(f));
  for (std::size_t i = 0; i <= n; ++i) {
    const Polynomial& c = coeff(i);
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k <= i; ++k) {
      Coeff b = binomial_mod(i, k, f);
      if (b == 0) continue;
      if (k == i) {
        out[k] += c;
      } else if (!q.is_zero()) {
        out[k] += (c * power(power, i - k)).scaled(b);
      }
    }
  }
  return AlgebraicEquation(XPolynomial(f, std::move(out)));
}

AlgebraicEquation AlgebraicEquation::reversed() const {
  if (coeff(0).is_zero()) throw std::invalid_argument("reversal of an equation with root 0");
  std::vector<Polynomial> c(poly_.coeffs().rbegin(), poly_.coeffs().rend());
  return AlgebraicEquation(XPolynomial(field(), std::move(c)));
}

bool AlgebraicEquation::proportional_to(const AlgebraicEquation& o) const {
  if (!(field() == o.field()) || degree() != o.degree()) return false;
  const PrimeField& f = field();
  const Coeff lambda = f.div(o.coeff(degree()).leading(), coeff(degree()).leading());
  for (std::size_t i = 0; i <= degree(); ++i) {
    if (!(coeff(i).scaled(lambda) == o.coeff(i))) return false;
  }
  return true;
}

std::string to_string(const AlgebraicEquation& e) { return to_string(e.poly()); }

AlgebraicEquation HyperquadraticEquation::to_equation() const {
  const PrimeField& f = a.field();
  if (!is_power_of(r, f.modulus())) throw std::invalid_argument("r must be a power of p");
  if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero()) {
    throw std::invalid_argument("all hyperquadratic coefficients vanish");
  }
  std::vector<Polynomial> v(r + 2, Polynomial(f));
  v[r + 1] += a;
  v[r] += b;
  v[1] += c;
  v[0] += d;
  return AlgebraicEquation(XPolynomial(f, std::move(v)));
}

std::optional<HyperquadraticEquation> HyperquadraticEquation::from_equation(const AlgebraicEquation& e) {
  const PrimeField& f = e.field();
  const std::size_t n = e.degree();
  if (n < 2 || !is_power_of(n - 1, f.modulus())) return std::nullopt;
  const std::uint64_t r = n - 1;
  for (std::size_t i = 2; i < r; ++i) {
    if (!e.coeff(i).is_zero()) return std::nullopt;
  }
  if (r == 1) return HyperquadraticEquation{e.coeff(2), e.coeff(1), Polynomial(f), e.coeff(0), 1};
  return HyperquadraticEquation{e.coeff(r + 1), e.coeff(r), e.coeff(1), e.coeff(0), r};
}

Mobius mobius_from_prefix(const Word& prefix, const Polynomial& p, const Polynomial& q) {
  if (prefix.empty() || prefix.head()) throw std::invalid_argument("prefix must be a nonempty word without head");
  Matrix m = prefix_matrix(prefix.field(), prefix);
  return {m.x, m.x_prev * p - m.x * q, m.y, m.y_prev * p - m.y * q};
}

AlgebraicEquation hyperquadratic_from_prefix(const Word& prefix, const Polynomial& p, const Polynomial& q,
                                             std::uint64_t r) {
  const PrimeField& f = prefix.field();
  if (!is_power_of(r, f.modulus())) throw std::invalid_argument("r must be a power of p");
  if (p.is_zero()) throw std::invalid_argument("P must be nonzero");
  Mobius m = mobius_from_prefix(prefix, p, q);
  // alpha (W alpha^r + Z) = U alpha^r + V
  return HyperquadraticEquation{m.w, -m.u, m.z, -m.v, r}.to_equation();
}

AlgebraicEquation quadratic_from_periodic(const Word& prefix, const Word& period) {
  const PrimeField& f = prefix.field();
  if (period.empty()) throw std::invalid_argument("empty period");
  if (period.head()) throw std::invalid_argument("period must not have a head");
  Matrix per = prefix_matrix(f, period);
  Matrix pre = prefix_matrix(f, prefix);
  // beta = (x' - y' alpha) / (y alpha - x) where alpha = (x beta + x') / (y beta + y').
  XPolynomial num = linear(-pre.y_prev, pre.x_prev);
  XPolynomial den = linear(pre.y, -pre.x);
  XPolynomial eq = XPolynomial::from_t(per.y) * num * num +
                   XPolynomial::from_t(per.y_prev - per.x) * num * den -
                   XPolynomial::from_t(per.x_prev) * den * den;
  Polynomial content(f);
  for (const auto& c : eq.coeffs()) {
    if (!c.is_zero()) content = content.is_zero() ? c.monic() : gcd(content, c);
  }
  std::vector<Polynomial> reduced;
  for (const auto& c : eq.coeffs()) reduced.push_back(c.is_zero() ? c : divide_exact(c, content));
  return AlgebraicEquation(XPolynomial(f, std::move(reduced)));
}

bool unbounded_predicate(const Polynomial& u, const Polynomial& v, const Polynomial& w, const Polynomial& z,
                         std::uint64_t r) {
  Polynomial det = u * z - v * w;
  if (det.is_zero()) throw DegenerateTransformation("UZ - VW vanishes");
  return r > 1 + static_cast<std::uint64_t>(det.degree());
}

}  // namespace cfrac
