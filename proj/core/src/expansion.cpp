#include "cfrac/expansion.hpp"

#include <algorithm>
#include <map>

#include "cfrac/errors.hpp"

namespace cfrac {

namespace {

// Exactly one root of absolute value > 1, every other root of absolute value < 1.
// On the Newton polygon of (i, deg c_i) this means deg c_{n-1} > deg c_n and
// deg c_i < deg c_{n-1} for every other nonzero c_i.
bool has_dominant_root(const AlgebraicEquation& e) {
  const std::size_t n = e.degree();
  const Polynomial& top = e.coeff(n - 1);
  if (top.is_zero() || top.degree() <= e.coeff(n).degree()) return false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Polynomial& c = e.coeff(i);
    if (!c.is_zero() && c.degree() >= top.degree()) return false;
  }
  return true;
}

std::size_t valuation(const std::vector<Coeff>& v, std::size_t limit) {
  std::size_t k = 0;
  while (k < std::min(v.size(), limit) && v[k] == 0) ++k;
  return k < std::min(v.size(), limit) ? k : limit;
}

// The equation rewritten for y = T^-e x as a polynomial in y over F_p[[u]], u = 1/T.
class NewtonSystem {
 public:
  NewtonSystem(const AlgebraicEquation& eq, std::int64_t e) : f_(eq.field()) {
    const std::size_t n = eq.degree();
    std::int64_t k = std::numeric_limits<std::int64_t>::min();
    for (std::size_t i = 0; i <= n; ++i) {
      const Polynomial& c = eq.coeff(i);
      if (!c.is_zero()) k = std::max(k, e * static_cast<std::int64_t>(i) + c.degree());
    }
    for (std::size_t i = 0; i <= n; ++i) {
      const Polynomial& c = eq.coeff(i);
      if (c.is_zero()) continue;
      auto shift = static_cast<std::size_t>(k - e * static_cast<std::int64_t>(i) - c.degree());
      std::vector<Coeff> v(shift, 0);
      auto cc = c.coeffs();
      v.insert(v.end(), cc.rbegin(), cc.rend());
      terms_.push_back({i, std::move(v)});
    }
  }

  // Q(y) and Q'(y) modulo u^len.
  void evaluate(const std::vector<Coeff>& y, std::size_t len, std::vector<Coeff>& q, std::vector<Coeff>& dq) {
    const std::uint64_t p = f_.modulus();
    std::map<std::uint64_t, std::vector<Coeff>> pw;
    std::vector<Coeff> yl(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(std::min(y.size(), len)));
    auto power = [&](auto&& self, std::uint64_t d) -> const std::vector<Coeff>& {
      auto it = pw.find(d);
      if (it != pw.end()) return it->second;
      std::vector<Coeff> v;
      if (d == 0) {
        v = {1};
      } else if (d == 1) {
        v = yl;
      } else if (d % p == 0) {
        const auto& b = self(self, d / p);
        v.assign(std::min(len, (b.size() - 1) * p + 1), 0);
        for (std::size_t k = 0; k * p < v.size() && k < b.size(); ++k) v[k * p] = b[k];
      } else {
        v = kernel::multiply_low(self(self, d - 1), yl, len, f_);
      }
      return pw.emplace(d, std::move(v)).first->second;
    };
    q.assign(len, 0);
    dq.assign(len, 0);
    auto accumulate = [&](std::vector<Coeff>& out, const std::vector<Coeff>& c, const std::vector<Coeff>& y_pow,
                          Coeff scale) {
      auto prod = kernel::multiply_low(c, y_pow, len, f_);
      for (std::size_t k = 0; k < prod.size(); ++k) out[k] = f_.add(out[k], f_.mul(prod[k], scale));
    };
    for (const auto& [i, c] : terms_) {
      if (c.size() >= len && std::all_of(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(len),
                                         [](Coeff v) { return v == 0; })) {
        continue;
      }
      accumulate(q, c, power(power, i), 1);
      Coeff di = f_.reduce(static_cast<std::int64_t>(i % p));
      if (i >= 1 && di != 0) accumulate(dq, c, power(power, i - 1), di);
    }
  }

 private:
  struct Term {
    std::size_t power;
    std::vector<Coeff> coeffs;  // in u
  };
  PrimeField f_;
  std::vector<Term> terms_;
};

AlgebraicEquation deflate(const AlgebraicEquation& eq) {
  const std::uint64_t p = eq.field().modulus();
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i <= eq.degree(); i += p) c.push_back(eq.coeff(i));
  return AlgebraicEquation(XPolynomial(eq.field(), std::move(c)));
}

LaurentSeries series_frobenius_root(const LaurentSeries& g, std::uint64_t p) {
  const std::int64_t t = g.top();
  if (t % static_cast<std::int64_t>(p) != 0) throw NotAFrobeniusPower("leading exponent not divisible by p");
  auto d = g.digits();
  std::vector<Coeff> out((d.size() - 1) / p + 1);
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k % p == 0) {
      out[k / p] = d[k];
    } else if (d[k] != 0) {
      throw NotAFrobeniusPower("series has a nonzero digit at an exponent not divisible by p");
    }
  }
  return LaurentSeries(g.field(), t / static_cast<std::int64_t>(p), std::move(out));
}

// The direct engine on A x^(r+1) + B x^r + C x + D, a shape kept by x -> x + q and x -> 1/x.
Word expand_hyperquadratic_direct(HyperquadraticEquation h, std::size_t count) {
  const PrimeField& f = h.a.field();
  std::optional<Polynomial> head;
  std::vector<Polynomial> letters;
  auto deg = [](const Polynomial& c) { return c.degree(); };
  for (std::size_t step = 0; letters.size() < count; ++step) {
    if (step > 0) {
      const bool dominant = !h.b.is_zero() && deg(h.b) > deg(h.a) && deg(h.c) < deg(h.b) && deg(h.d) < deg(h.b);
      if (!dominant) throw DominantRootViolation("no unique dominant root at step " + std::to_string(step + 1));
    }
    Polynomial q = divrem(-h.b, h.a).quotient;
    if (step == 0 && q.degree() < 1) {
      head = q;
    } else if (q.degree() < 1) {
      throw DominantRootViolation("partial quotient of degree < 1 at step " + std::to_string(step + 1));
    } else {
      letters.push_back(q);
    }
    // (x + q)^(r+1) = (x^r + q^r)(x + q)
    const Polynomial qr = q.inflated(h.r);
    Polynomial b = h.a * q + h.b;
    Polynomial c = h.a * qr + h.c;
    Polynomial d = b * qr + h.c * q + h.d;
    if (d.is_zero()) break;
    h = HyperquadraticEquation{std::move(d), std::move(c), std::move(b), std::move(h.a), h.r};
  }
  return Word(f, std::move(letters), std::move(head));
}

}  // namespace

Word expand_root_direct(const AlgebraicEquation& eq, std::size_t count) {
  const PrimeField& f = eq.field();
  if (count == 0) return Word(f);
  if (auto h = HyperquadraticEquation::from_equation(eq); h && h->r > 1 && !h->a.is_zero()) {
    return expand_hyperquadratic_direct(std::move(*h), count);
  }
  std::optional<Polynomial> head;
  std::vector<Polynomial> letters;
  AlgebraicEquation cur = eq;
  for (std::size_t step = 0; letters.size() < count; ++step) {
    const std::size_t n = cur.degree();
    if (step > 0 && !has_dominant_root(cur)) {
      throw DominantRootViolation("no unique dominant root at step " + std::to_string(step + 1));
    }
    Polynomial q = divrem(-cur.coeff(n - 1), cur.coeff(n)).quotient;
    if (step == 0 && q.degree() < 1) {
      head = q;
    } else if (q.degree() < 1) {
      throw DominantRootViolation("partial quotient of degree < 1 at step " + std::to_string(step + 1));
    } else {
      letters.push_back(q);
    }
    AlgebraicEquation shifted = cur.taylor_shift(q);
    if (shifted.coeff(0).is_zero()) break;  // q is itself the complete quotient
    cur = shifted.reversed();
  }
  return Word(f, std::move(letters), std::move(head));
}

LaurentSeries hensel_root(const AlgebraicEquation& eq, const LaurentSeries& seed, std::size_t precision) {
  const PrimeField& f = eq.field();
  require_same_field(f, seed.field(), "hensel_root");
  if (precision == 0) throw std::invalid_argument("hensel_root: precision must be positive");
  const std::int64_t e = seed.top();
  if (eq.poly().derivative_x().is_zero()) {
    const std::uint64_t p = f.modulus();
    LaurentSeries g = hensel_root(deflate(eq), pow_frobenius(seed, p), precision * p);
    return series_frobenius_root(g, p).truncated(precision);
  }
  NewtonSystem sys(eq, e);
  std::vector<Coeff> y(seed.digits().begin(), seed.digits().end());
  std::vector<Coeff> q, dq;

  std::size_t len = 2 * y.size() + 16;
  sys.evaluate(y, len, q, dq);
  const std::size_t d = valuation(dq, len);
  if (d == len) throw SingularRoot("derivative vanishes at the seed to " + std::to_string(len) + " digits");
  const std::size_t v0 = valuation(q, len);
  if (v0 <= 2 * d) {
    throw SingularRoot("Newton condition fails at the seed: v(P) = " + std::to_string(v0) +
                       ", v(P') = " + std::to_string(d) + "; a longer seed is needed");
  }
  std::size_t acc = v0 - d;
  for (int iter = 0; acc < precision; ++iter) {
    if (iter > 200) throw NoConvergence("Newton iteration did not reach the requested precision");
    const std::size_t next = std::min(2 * acc - d, precision);
    len = next + d;
    if (y.size() > len) y.resize(len);
    sys.evaluate(y, len, q, dq);
    if (valuation(q, len) < acc + d || valuation(dq, len) != d) {
      throw NoConvergence("residual check failed during Newton iteration");
    }
    std::vector<Coeff> num(q.begin() + static_cast<std::ptrdiff_t>(d), q.end());
    std::vector<Coeff> den(dq.begin() + static_cast<std::ptrdiff_t>(d), dq.end());
    auto delta = kernel::multiply_low(num, kernel::series_inverse(den, next, f), next, f);
    y.resize(next, 0);
    for (std::size_t k = 0; k < delta.size(); ++k) y[k] = f.sub(y[k], delta[k]);
    acc = next;
  }
  y.resize(precision, 0);
  sys.evaluate(y, precision + d, q, dq);
  if (valuation(q, precision + d) < precision + d) {
    throw NoConvergence("root residual does not meet the requested precision");
  }
  return LaurentSeries(f, e, std::move(y));
}

LaurentSeries direct_seed(const AlgebraicEquation& eq) {
  for (std::size_t k = 2; k <= 256; k *= 2) {
    Word w = expand_root_direct(eq, k);
    auto [num, den] = cf_eval(w);
    const std::int64_t top = num.degree() - den.degree();
    const std::int64_t digits = top + 2 * den.degree() + 1;
    if (digits <= 0) continue;
    LaurentSeries seed = from_rational(num, den, static_cast<std::size_t>(digits));
    if (w.size() < k) return from_rational(num, den, static_cast<std::size_t>(digits) + 64);
    try {
      hensel_root(eq, seed, static_cast<std::size_t>(digits));
      return seed;
    } catch (const SingularRoot&) {
    }
  }
  throw SingularRoot("no seed from the direct engine satisfies the Newton condition");
}

Word expand_root_certified(const AlgebraicEquation& eq, std::size_t count, const CertifiedOptions& opts) {
  const PrimeField& f = eq.field();
  if (count == 0) return Word(f);
  LaurentSeries seed = opts.seed ? *opts.seed : direct_seed(eq);
  std::size_t n = std::min(std::max(seed.precision(), 4 * count + 16), opts.max_precision);
  while (true) {
    LaurentSeries root = hensel_root(eq, seed, n);
    SeriesExpansion x = cf_of_series(root);
    if (x.certified >= count) return x.word.prefix(count);
    if (n >= opts.max_precision) {
      throw PrecisionBudgetExceeded("only " + std::to_string(x.certified) + " of " + std::to_string(count) +
                                    " letters certified with " + std::to_string(n) + " digits");
    }
    seed = std::move(root);
    n = std::min(2 * n, opts.max_precision);
  }
}

LaurentSeries evaluate(const XPolynomial& p, const LaurentSeries& s) {
  const PrimeField& f = p.field();
  if (p.is_zero()) return LaurentSeries::zero(f, s.low());
  const auto& c = p.coeffs();
  if (c.size() == 1) {
    if (c[0].is_zero()) return LaurentSeries::zero(f, s.low());
    // Exact constant, given to the same depth as s.
    return LaurentSeries::from_polynomial(c[0], static_cast<std::size_t>(std::max<std::int64_t>(c[0].degree() - s.low() + 1, 1)));
  }
  LaurentSeries r = s * c.back() + c[c.size() - 2];
  for (std::size_t i = c.size() - 2; i-- > 0;) r = r * s + c[i];
  return r;
}

bool verify_derivative_relation(const AlgebraicEquation& eq, const RationalRelation& relation,
                                std::size_t precision, const std::optional<LaurentSeries>& seed) {
  LaurentSeries a = hensel_root(eq, seed ? *seed : direct_seed(eq), precision);
  LaurentSeries lhs = derivative(a);
  LaurentSeries rhs = evaluate(relation.num, a) / evaluate(relation.den, a);
  return lhs.agrees_with(rhs);
}

}  // namespace cfrac
