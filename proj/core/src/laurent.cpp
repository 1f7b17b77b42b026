#include "cfrac/laurent.hpp"

#include <algorithm>

#include "cfrac/errors.hpp"
#include "json.hpp"

namespace cfrac {

namespace {

constexpr std::int64_t kExactZeroLow = std::numeric_limits<std::int64_t>::min() / 4;

std::vector<Coeff> descending(const Polynomial& a) {
  auto c = a.coeffs();
  return std::vector<Coeff>(c.rbegin(), c.rend());
}

}  // namespace

LaurentSeries::LaurentSeries(PrimeField f, std::int64_t top, std::vector<Coeff> digits)
    : field_(f), low_(top - static_cast<std::int64_t>(digits.size()) + 1) {
  std::size_t lead = 0;
  while (lead < digits.size() && digits[lead] == 0) ++lead;
  if (lead == digits.size()) return;  // every known digit vanished
  for (auto& v : digits) {
    if (v >= f.modulus()) v %= f.modulus();
  }
  digits_.assign(digits.begin() + static_cast<std::ptrdiff_t>(lead), digits.end());
}

LaurentSeries LaurentSeries::zero(PrimeField f, std::int64_t low) { return LaurentSeries(f, low); }

LaurentSeries LaurentSeries::from_polynomial(const Polynomial& a, std::size_t precision) {
  if (a.is_zero()) return zero(a.field(), 1 - static_cast<std::int64_t>(precision));
  auto d = descending(a);
  d.resize(precision, 0);
  return LaurentSeries(a.field(), a.degree(), std::move(d));
}

std::int64_t LaurentSeries::top() const {
  if (is_zero()) {
    throw PrecisionExhausted("series is zero to precision T^" + std::to_string(low_) +
                             "; its leading term is unknown");
  }
  return low_ + static_cast<std::int64_t>(digits_.size()) - 1;
}

Coeff LaurentSeries::coeff(std::int64_t e) const {
  if (e < low_) {
    throw InsufficientPrecision("coefficient of T^" + std::to_string(e) + " unknown; known down to T^" +
                                std::to_string(low_));
  }
  if (is_zero()) return 0;
  std::int64_t t = top();
  if (e > t) return 0;
  return digits_[static_cast<std::size_t>(t - e)];
}

LaurentSeries LaurentSeries::truncated(std::size_t precision) const {
  if (is_zero() || precision >= digits_.size()) return *this;
  return LaurentSeries(field_, top(), std::vector<Coeff>(digits_.begin(), digits_.begin() + precision));
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
  if (!(field_ == o.field_)) return false;
  std::int64_t lo = std::max(low_, o.low_);
  std::int64_t hi = std::max(is_zero() ? lo : top(), o.is_zero() ? lo : o.top());
  for (std::int64_t e = hi; e >= lo; --e) {
    if (coeff(e) != o.coeff(e)) return false;
  }
  return true;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& v : r.digits_) v = field_.neg(v);
  return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const PrimeField& f = a.field();
  require_same_field(f, b.field(), "series add");
  std::int64_t lo = std::max(a.low(), b.low());
  if (a.is_zero() && b.is_zero()) return LaurentSeries::zero(f, lo);
  std::int64_t hi = std::max(a.is_zero() ? lo - 1 : a.top(), b.is_zero() ? lo - 1 : b.top());
  if (hi < lo) return LaurentSeries::zero(f, lo);
  std::vector<Coeff> d(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < d.size(); ++k) {
    std::int64_t e = hi - static_cast<std::int64_t>(k);
    d[k] = f.add(a.coeff(e), b.coeff(e));
  }
  LaurentSeries r(f, hi, std::move(d));
  return r.is_zero() ? LaurentSeries::zero(f, lo) : r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const PrimeField& f = a.field();
  require_same_field(f, b.field(), "series mul");
  if (a.is_zero() && b.is_zero()) return LaurentSeries::zero(f, a.low() + b.low() - 1);
  if (a.is_zero()) return LaurentSeries::zero(f, a.low() + b.top());
  if (b.is_zero()) return LaurentSeries::zero(f, b.low() + a.top());
  std::size_t n = std::min(a.precision(), b.precision());
  auto d = kernel::multiply_low(a.digits(), b.digits(), n, f);
  d.resize(n, 0);
  return LaurentSeries(f, a.top() + b.top(), std::move(d));
}

LaurentSeries operator*(const LaurentSeries& a, const Polynomial& b) {
  const PrimeField& f = a.field();
  require_same_field(f, b.field(), "series mul");
  if (b.is_zero()) return LaurentSeries::zero(f, kExactZeroLow);
  if (a.is_zero()) return LaurentSeries::zero(f, a.low() + b.degree());
  auto d = kernel::multiply_low(a.digits(), descending(b), a.precision(), f);
  d.resize(a.precision(), 0);
  return LaurentSeries(f, a.top() + b.degree(), std::move(d));
}

LaurentSeries operator+(const LaurentSeries& a, const Polynomial& b) {
  if (b.is_zero()) return a;
  std::size_t need = static_cast<std::size_t>(std::max<std::int64_t>(b.degree() - a.low() + 1, 1));
  return a + LaurentSeries::from_polynomial(b, need);
}

LaurentSeries inverse(const LaurentSeries& a) {
  if (a.is_zero()) {
    throw PrecisionExhausted("inverse of a series that is zero to precision T^" + std::to_string(a.low()));
  }
  return LaurentSeries(a.field(), -a.top(), kernel::series_inverse(a.digits(), a.precision(), a.field()));
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * inverse(b); }

LaurentSeries from_rational(const Polynomial& p, const Polynomial& q, std::size_t precision) {
  const PrimeField& f = p.field();
  require_same_field(f, q.field(), "from_rational");
  if (q.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (p.is_zero()) return LaurentSeries::zero(f, kExactZeroLow);
  auto inv = kernel::series_inverse(descending(q), precision, f);
  auto d = kernel::multiply_low(descending(p), inv, precision, f);
  d.resize(precision, 0);
  return LaurentSeries(f, p.degree() - q.degree(), std::move(d));
}

Polynomial poly_part(const LaurentSeries& a) {
  const PrimeField& f = a.field();
  if (a.low() > 0) {
    throw InsufficientPrecision("polynomial part needs T^0, known only down to T^" + std::to_string(a.low()));
  }
  if (a.is_zero() || a.top() < 0) return Polynomial(f);
  std::vector<Coeff> c(static_cast<std::size_t>(a.top()) + 1);
  for (std::size_t e = 0; e < c.size(); ++e) c[e] = a.coeff(static_cast<std::int64_t>(e));
  return Polynomial(f, std::move(c));
}

LaurentSeries pow_frobenius(const LaurentSeries& a, std::uint64_t r) {
  const std::uint64_t p = a.field().modulus();
  std::uint64_t t = r;
  while (t > 1 && t % p == 0) t /= p;
  if (r == 0 || t != 1) throw NotAFrobeniusPower("pow_frobenius: exponent is not a power of p");
  const auto ri = static_cast<std::int64_t>(r);
  if (a.is_zero()) return LaurentSeries::zero(a.field(), ri * (a.low() - 1) + 1);
  std::vector<Coeff> d(a.precision() * r, 0);
  for (std::size_t k = 0; k < a.precision(); ++k) d[k * r] = a.digits()[k];
  return LaurentSeries(a.field(), a.top() * ri, std::move(d));
}

LaurentSeries derivative(const LaurentSeries& a) {
  const PrimeField& f = a.field();
  if (a.is_zero()) return LaurentSeries::zero(f, a.low() - 1);
  std::vector<Coeff> d(a.precision());
  const std::int64_t t = a.top();
  for (std::size_t k = 0; k < d.size(); ++k) {
    d[k] = f.mul(a.digits()[k], f.reduce(t - static_cast<std::int64_t>(k)));
  }
  LaurentSeries r(f, t - 1, std::move(d));
  return r.is_zero() ? LaurentSeries::zero(f, a.low() - 1) : r;
}

std::optional<Period> detect_period(const LaurentSeries& a) {
  if (a.is_zero()) return Period{0, 1};
  auto d = a.digits();
  const std::size_t n = d.size();
  for (std::size_t per = 1; 3 * per <= n; ++per) {
    // Preperiod: one past the last index k with d[k] != d[k + per].
    std::size_t pre = 0;
    for (std::size_t k = n - per; k-- > 0;) {
      if (d[k] != d[k + per]) {
        pre = k + 1;
        break;
      }
    }
    if (n - pre >= 3 * per) return Period{pre, per};
  }
  return std::nullopt;
}

namespace {

std::string monomial_text(Coeff c, std::int64_t e) {
  if (e == 0) return std::to_string(c);
  std::string s = c == 1 ? "" : std::to_string(c) + "*";
  s += "t";
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string to_string(const LaurentSeries& a) {
  std::string s;
  if (!a.is_zero()) {
    std::int64_t t = a.top();
    for (std::size_t k = 0; k < a.precision(); ++k) {
      Coeff c = a.digits()[k];
      if (c == 0) continue;
      if (!s.empty()) s += " + ";
      s += monomial_text(c, t - static_cast<std::int64_t>(k));
    }
    s += " + ";
  }
  std::int64_t err = a.low() - 1;
  s += "O(t";
  if (err != 1) s += "^" + std::to_string(err);
  s += ")";
  return s;
}

std::string to_json(const LaurentSeries& a) {
  nlohmann::json j;
  if (a.is_zero()) {
    j["zero"] = true;
    j["low"] = a.low();
  } else {
    j["top"] = a.top();
    j["precision"] = a.precision();
    j["coeffs"] = std::vector<Coeff>(a.digits().begin(), a.digits().end());
  }
  return j.dump();
}

}  // namespace cfrac
