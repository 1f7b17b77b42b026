#include "cfrac/families.hpp"

#include <array>
#include <stdexcept>

#include "cfrac/errors.hpp"
#include "cfrac/expansion.hpp"

namespace cfrac {

namespace {

constexpr std::array<std::pair<std::string_view, FamilyName>, 15> kNames{{
    {"phi", FamilyName::phi},
    {"fibonacci_poly", FamilyName::fibonacci_poly},
    {"fibonacci", FamilyName::fibonacci_poly},
    {"mahler", FamilyName::mahler},
    {"mahler_dual", FamilyName::mahler_dual},
    {"schmidt", FamilyName::schmidt},
    {"robbins3_word", FamilyName::robbins3_word},
    {"robbins3", FamilyName::robbins3_word},
    {"example2_support", FamilyName::example2_support},
    {"example2", FamilyName::example2_support},
    {"theta", FamilyName::theta},
    {"modified_robbins", FamilyName::modified_robbins},
    {"gamma", FamilyName::gamma},
    {"annex4", FamilyName::annex4},
    {"robbins", FamilyName::robbins},
}};

std::uint32_t smallest_prime_factor(std::uint64_t r) {
  for (std::uint64_t d = 2; d * d <= r; ++d) {
    if (r % d == 0) return static_cast<std::uint32_t>(d);
  }
  return static_cast<std::uint32_t>(r);
}

Polynomial poly(const PrimeField& f, std::initializer_list<std::int64_t> c) { return Polynomial(f, c); }

// x^4 + x^2 - T x + c
AlgebraicEquation quartic(const PrimeField& f, const FieldElement& c) {
  return AlgebraicEquation(XPolynomial(f, {Polynomial::constant(f, c.value()), poly(f, {0, -1}),
                                           Polynomial::constant(f, 1), Polynomial(f), Polynomial::constant(f, 1)}));
}

HyperquadraticData example2_data() {
  PrimeField f(13);
  std::vector<Polynomial> prefix;
  for (std::int64_t c : {1, 12, 7, 11, 8, 5}) prefix.push_back(Polynomial::monomial(f, c, 1));
  return {Word(f, std::move(prefix)), pow(poly(f, {8, 0, 1}), 4), poly(f, {0, 7, 0, 9, 0, 1, 0, 8}), 13};
}

HyperquadraticData annex4_data() {
  PrimeField f(5);
  Polynomial t = Polynomial::variable(f);
  return {Word(f, {t, t, t}), pow(poly(f, {-1, 0, 1}), 2), poly(f, {0, 1, 0, 3}), 5};
}

HyperquadraticData theta_data(const FieldElement& a, const FieldElement& b) {
  const PrimeField& f = a.field();
  Polynomial t = Polynomial::variable(f);
  return {Word(f, {t.scaled(a), t.scaled(b)}), poly(f, {-1, 0, 1}), t.scaled(a + b.inverse()), f.modulus()};
}

}  // namespace

FamilyName family_from_string(std::string_view name) {
  for (const auto& [s, v] : kNames) {
    if (s == name) return v;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string to_string(FamilyName name) {
  for (const auto& [s, v] : kNames) {
    if (v == name) return std::string(s);
  }
  return "?";
}

std::uint32_t FamilySpec::prime() const {
  switch (name) {
    case FamilyName::robbins3_word:
      return 3;
    case FamilyName::example2_support:
      return 13;
    case FamilyName::annex4:
      return 5;
    default:
      break;
  }
  if (p != 0) return p;
  if (base) return base->field().modulus();
  if (r > 1) return smallest_prime_factor(r);
  throw std::invalid_argument(to_string(name) + " needs a prime p");
}

FamilySpec FamilySpec::resolved() const {
  FamilySpec s = *this;
  auto need_p = [&] {
    if (s.p == 0 && s.r != 0) s.p = smallest_prime_factor(s.r);
    if (s.p == 0) throw std::invalid_argument(to_string(name) + " needs a prime p");
    if (!is_prime(s.p)) throw std::invalid_argument("p = " + std::to_string(s.p) + " is not prime");
  };
  auto fixed_p = [&](std::uint32_t p) {
    if (s.p != 0 && s.p != p) throw std::invalid_argument(to_string(name) + " is defined over F_" + std::to_string(p));
    s.p = p;
  };
  auto need_r = [&](bool allow_one) {
    if (s.r == 0) s.r = s.p;
    if (!is_power_of(s.r, s.p) || (!allow_one && s.r == 1)) {
      throw std::invalid_argument("r = " + std::to_string(s.r) + " must be a positive power of p = " +
                                  std::to_string(s.p));
    }
  };
  switch (name) {
    case FamilyName::phi:
    case FamilyName::fibonacci_poly:
    case FamilyName::robbins:
      need_p();
      break;
    case FamilyName::mahler:
    case FamilyName::mahler_dual:
      need_p();
      need_r(false);
      break;
    case FamilyName::schmidt:
      if (!s.base || s.base->empty() || s.base->head()) throw std::invalid_argument("schmidt needs a base word");
      if (s.p == 0) s.p = s.base->field().modulus();
      if (s.p != s.base->field().modulus()) throw std::invalid_argument("base word is over another field");
      need_r(false);
      break;
    case FamilyName::robbins3_word:
      fixed_p(3);
      break;
    case FamilyName::example2_support:
      fixed_p(13);
      break;
    case FamilyName::annex4:
      fixed_p(5);
      break;
    case FamilyName::theta: {
      need_p();
      if (s.p < 3) throw std::invalid_argument("theta needs an odd prime p");
      if (!s.a || !s.b) throw std::invalid_argument("theta needs a and b");
      PrimeField f(s.p);
      if (f.reduce(*s.a) == 0 || f.reduce(*s.b) == 0) throw std::invalid_argument("theta needs a, b != 0");
      break;
    }
    case FamilyName::modified_robbins:
      need_p();
      if (s.p <= 3) throw std::invalid_argument("modified_robbins needs p > 3 (12 must be invertible)");
      break;
    case FamilyName::gamma:
      if (s.r == 0) throw std::invalid_argument("gamma needs r");
      need_p();
      need_r(false);
      if (s.r % 2 == 0) throw std::invalid_argument("gamma needs odd r");
      break;
  }
  return s;
}

Polynomial fibonacci_poly(std::size_t n, const PrimeField& f) {
  Polynomial prev = Polynomial::constant(f, 1), cur = Polynomial::variable(f);
  if (n == 0) return prev;
  for (std::size_t k = 1; k < n; ++k) {
    Polynomial next = cur.shifted(1) + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Word schmidt_word(const Word& base, std::uint64_t r, std::size_t letters) {
  if (base.empty() || base.head()) throw std::invalid_argument("schmidt_word needs a nonempty base without head");
  std::vector<Polynomial> out;
  std::vector<Polynomial> block = base.letters();
  while (out.size() < letters) {
    for (const auto& a : block) {
      if (out.size() == letters) break;
      out.push_back(a);
    }
    for (auto& a : block) a = a.inflated(r);
  }
  return Word(base.field(), std::move(out));
}

Word robbins3_word(std::size_t letters) {
  PrimeField f(3);
  const Polynomial two_t = Polynomial::monomial(f, 2, 1);
  std::vector<Polynomial> older, old{Polynomial::variable(f)};
  while (old.size() < letters) {
    std::vector<Polynomial> next = old;
    next.push_back(two_t);
    for (const auto& a : older) next.push_back(a.inflated(3));
    next.push_back(two_t);
    next.insert(next.end(), old.begin(), old.end());
    older = std::move(old);
    old = std::move(next);
  }
  old.resize(std::min(old.size(), letters), Polynomial(f));
  return Word(f, std::move(old));
}

std::uint64_t v9(std::uint64_t m) {
  std::uint64_t e = 0;
  while (m != 0 && m % 9 == 0) {
    m /= 9;
    ++e;
  }
  return e;
}

Example2Support example2_support(std::size_t k_max, std::size_t n_max) {
  PrimeField f(13);
  const Polynomial den = pow(poly(f, {8, 0, 1}), 4);
  Example2Support s;
  s.a.push_back(Polynomial::variable(f));
  while (s.a.size() <= k_max) s.a.push_back(divrem(s.a.back().inflated(13), den).quotient);
  for (std::uint64_t n = 1; n <= n_max; ++n) s.i.push_back(v9(4 * n - 1));
  return s;
}

std::pair<std::uint64_t, std::uint64_t> theta_block(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("theta letters are numbered from 1");
  std::uint64_t m = 1;
  while ((m + 1) * m + 1 <= n) ++m;
  return {m, n - (m * m - m)};
}

std::uint64_t theta_j(std::uint64_t n) {
  auto [m, i] = theta_block(n);
  return i <= m ? m - i : i - m - 1;
}

FieldElement theta_lambda(const FieldElement& a, const FieldElement& b, std::uint64_t n) {
  auto [m, i] = theta_block(n);
  if (i == 1) return a;
  const FieldElement bi = i % 2 == 0 ? b : b.inverse();
  return i <= m ? -bi : bi;
}

std::vector<Polynomial> theta_b(const PrimeField& f, std::size_t j_max) {
  const std::uint64_t p = f.modulus();
  const Polynomial t2m1 = poly(f, {-1, 0, 1});
  std::vector<Polynomial> b{Polynomial::variable(f)};
  if (j_max >= 1) {
    DivRem d = divrem(Polynomial::monomial(f, 1, static_cast<std::int64_t>(p)) - Polynomial::variable(f), t2m1);
    if (!d.remainder.is_zero()) throw NonDivisible("T^p - T is not divisible by T^2 - 1");
    b.push_back(std::move(d.quotient));
  }
  for (std::size_t n = 2; n <= j_max; ++n) {
    Polynomial up = b.back().inflated(p);
    if (n % 2 == 0) {
      b.push_back(up * t2m1);
    } else {
      DivRem d = divrem(up, t2m1);
      if (!d.remainder.is_zero()) throw NonDivisible("B_" + std::to_string(n) + " is not a polynomial");
      b.push_back(std::move(d.quotient));
    }
  }
  return b;
}

Word theta_word(const FieldElement& a, const FieldElement& b, std::size_t letters) {
  const PrimeField& f = a.field();
  require_same_field(f, b.field(), "theta_word");
  if (f.modulus() < 3) throw std::invalid_argument("theta_word needs an odd prime");
  if (a.value() == 0 || b.value() == 0) throw std::invalid_argument("theta_word needs a, b != 0");
  std::uint64_t j_max = 0;
  for (std::uint64_t n = 1; n <= letters; ++n) j_max = std::max(j_max, theta_j(n));
  std::vector<Polynomial> bs = letters ? theta_b(f, j_max) : std::vector<Polynomial>{};
  std::vector<Polynomial> out;
  out.reserve(letters);
  for (std::uint64_t n = 1; n <= letters; ++n) out.push_back(bs[theta_j(n)].scaled(theta_lambda(a, b, n)));
  return Word(f, std::move(out));
}

LaurentSeries mahler_series(const PrimeField& f, std::uint64_t r, std::size_t precision) {
  if (r < 2) throw std::invalid_argument("mahler_series needs r >= 2");
  std::vector<Coeff> d(precision, 0);
  // T^{-r^k} sits at digit r^k - 1 below the top T^{-1}.
  for (std::uint64_t e = 1; e - 1 < precision; e *= r) {
    d[e - 1] = 1;
    if (e > precision / r + 1) break;
  }
  return LaurentSeries(f, -1, std::move(d));
}

Word family_word(const FamilySpec& spec, std::size_t letters) {
  FamilySpec s = spec.resolved();
  PrimeField f(s.p);
  switch (s.name) {
    case FamilyName::phi:
      return Word(f, std::vector<Polynomial>(letters, Polynomial::variable(f)));
    case FamilyName::mahler_dual:
      return schmidt_word(Word(f, {Polynomial::variable(f)}), s.r, letters);
    case FamilyName::schmidt:
      return schmidt_word(*s.base, s.r, letters);
    case FamilyName::robbins3_word:
      return robbins3_word(letters);
    case FamilyName::theta:
      return theta_word(FieldElement(f, *s.a), FieldElement(f, *s.b), letters);
    default:
      throw UnsupportedFamily(to_string(s.name) + " has no closed-form word");
  }
}

std::vector<std::int64_t> family_degrees(const FamilySpec& spec, std::size_t letters) {
  FamilySpec s = spec.resolved();
  auto mul_add = [](std::int64_t x, std::int64_t m, std::int64_t c) {
    std::int64_t y;
    if (__builtin_mul_overflow(x, m, &y) || __builtin_add_overflow(y, c, &y)) {
      throw std::overflow_error("letter degree leaves 64-bit range");
    }
    return y;
  };
  const auto p = static_cast<std::int64_t>(s.p);
  std::vector<std::int64_t> out;
  out.reserve(letters);
  switch (s.name) {
    case FamilyName::theta: {
      std::vector<std::int64_t> b{1};
      for (std::uint64_t n = 1; n <= letters; ++n) {
        const std::uint64_t j = theta_j(n);
        while (b.size() <= j) b.push_back(mul_add(b.back(), p, b.size() % 2 ? -2 : 2));
        out.push_back(b[j]);
      }
      return out;
    }
    case FamilyName::example2_support: {
      std::vector<std::int64_t> a{1};
      for (std::uint64_t n = 1; n <= letters; ++n) {
        const std::uint64_t i = v9(4 * n - 1);
        while (a.size() <= i) a.push_back(mul_add(a.back(), 13, -8));
        out.push_back(a[i]);
      }
      return out;
    }
    case FamilyName::mahler_dual:
    case FamilyName::schmidt: {
      std::vector<std::int64_t> base{1};
      if (s.name == FamilyName::schmidt) base = s.base->degrees();
      const auto r = static_cast<std::int64_t>(s.r);
      for (std::size_t n = 0; n < letters; ++n) {
        out.push_back(n < base.size() ? base[n] : mul_add(out[n - base.size()], r, 0));
      }
      return out;
    }
    default:
      break;
  }
  try {
    return family_word(s, letters).degrees();
  } catch (const UnsupportedFamily&) {
    return expand_root_direct(family_equation(s), letters).degrees();
  }
}

AlgebraicEquation family_equation(const FamilySpec& spec) {
  FamilySpec s = spec.resolved();
  PrimeField f(s.p);
  const Polynomial one = Polynomial::constant(f, 1), t = Polynomial::variable(f);
  auto sparse = [&](std::size_t deg, std::initializer_list<std::pair<std::size_t, Polynomial>> terms) {
    std::vector<Polynomial> c(deg + 1, Polynomial(f));
    for (const auto& [i, v] : terms) c[i] += v;
    return AlgebraicEquation(XPolynomial(f, std::move(c)));
  };
  switch (s.name) {
    case FamilyName::phi:
      return sparse(2, {{2, one}, {1, -t}, {0, -one}});
    case FamilyName::mahler:
      // alpha = 1/T + alpha^r
      return sparse(s.r, {{s.r, t}, {1, -t}, {0, one}});
    case FamilyName::mahler_dual:
      // alpha = T + 1/alpha^r
      return sparse(s.r + 1, {{s.r + 1, one}, {s.r, -t}, {0, -one}});
    case FamilyName::schmidt:
      return hyperquadratic_from_prefix(*s.base, one, Polynomial(f), s.r);
    case FamilyName::robbins3_word:
    case FamilyName::example2_support:
    case FamilyName::robbins:
      return quartic(f, FieldElement(f, 1));
    case FamilyName::modified_robbins:
      return quartic(f, -FieldElement(f, 12).inverse());
    case FamilyName::theta: {
      const FieldElement a(f, *s.a), b(f, *s.b);
      const Polynomial mid = -(Polynomial::monomial(f, (a * b).value(), 2) + one);
      const Polynomial c0 =
          Polynomial::monomial(f, (a * a * b).value(), 3) + t.scaled(a + a + b.inverse());
      return sparse(f.modulus() + 1, {{f.modulus() + 1, t.scaled(b)}, {f.modulus(), mid}, {1, mid}, {0, c0}});
    }
    case FamilyName::gamma: {
      XPolynomial g = XPolynomial(f, {-one, Polynomial(f), one});
      XPolynomial lhs = pow(g, (s.r + 1) / 2);
      std::vector<Polynomial> xr(s.r + 1, Polynomial(f));
      xr[s.r] = t;
      return AlgebraicEquation(lhs - XPolynomial(f, std::move(xr)));
    }
    case FamilyName::annex4:
      return annex4_data().equation();
    case FamilyName::fibonacci_poly:
      break;
  }
  throw UnsupportedFamily(to_string(s.name) + " has no defining equation");
}

std::optional<FamilyTransport> family_transport(const FamilySpec& spec) {
  FamilySpec s = spec.resolved();
  PrimeField f(s.p);
  const Polynomial one = Polynomial::constant(f, 1), t = Polynomial::variable(f);
  switch (s.name) {
    case FamilyName::phi:
      return FamilyTransport{{Word(f, {t}), one, Polynomial(f), 1}, std::nullopt};
    case FamilyName::mahler_dual:
      return FamilyTransport{{Word(f, {t}), one, Polynomial(f), s.r}, std::nullopt};
    case FamilyName::schmidt:
      return FamilyTransport{{*s.base, one, Polynomial(f), s.r}, std::nullopt};
    case FamilyName::theta:
      return FamilyTransport{theta_data(FieldElement(f, *s.a), FieldElement(f, *s.b)), std::nullopt};
    case FamilyName::annex4:
      return FamilyTransport{annex4_data(), std::nullopt};
    case FamilyName::example2_support:
      return FamilyTransport{example2_data(), Polynomial(f)};
    case FamilyName::robbins:
      if (s.p == 13) return FamilyTransport{example2_data(), Polynomial(f)};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace cfrac
