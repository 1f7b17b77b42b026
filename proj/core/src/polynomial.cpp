#include "cfrac/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "cfrac/errors.hpp"
#include "ntt.hpp"

namespace cfrac {

namespace kernel {

namespace {

constexpr std::size_t kSchoolbookLimit = 32;
constexpr std::size_t kNttLimit = 768;

void schoolbook(const Coeff* a, std::size_t na, const Coeff* b, std::size_t nb, Coeff* out,
                const PrimeField& f) {
  const std::uint64_t p = f.modulus();
  const std::size_t len = na + nb - 1;
  const std::size_t terms = std::min(na, nb);
  const unsigned __int128 worst = static_cast<unsigned __int128>(terms) * (p - 1) * (p - 1);
  if (worst <= ~std::uint64_t{0}) {
    std::vector<std::uint64_t> acc(len, 0);
    for (std::size_t i = 0; i < na; ++i) {
      const std::uint64_t ai = a[i];
      if (ai == 0) continue;
      std::uint64_t* row = acc.data() + i;
      for (std::size_t j = 0; j < nb; ++j) row[j] += ai * b[j];
    }
    for (std::size_t k = 0; k < len; ++k) out[k] = f.reduce_u64(acc[k]);
    return;
  }
  std::fill(out, out + len, 0);
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
}

// Balanced Karatsuba on two length-n operands; out has 2n-1 entries.
void karatsuba(const Coeff* a, const Coeff* b, std::size_t n, Coeff* out, const PrimeField& f) {
  if (n <= kSchoolbookLimit) {
    schoolbook(a, n, b, n, out, f);
    return;
  }
  const std::size_t m = n / 2, h = n - m;
  std::fill(out, out + 2 * n - 1, 0);
  std::vector<Coeff> z0(2 * m - 1), z2(2 * h - 1), z1(2 * h - 1);
  karatsuba(a, b, m, z0.data(), f);
  karatsuba(a + m, b + m, h, z2.data(), f);
  std::vector<Coeff> sa(a + m, a + n), sb(b + m, b + n);
  for (std::size_t i = 0; i < m; ++i) {
    sa[i] = f.add(sa[i], a[i]);
    sb[i] = f.add(sb[i], b[i]);
  }
  karatsuba(sa.data(), sb.data(), h, z1.data(), f);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = f.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = f.sub(z1[i], z2[i]);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * m + i] = f.add(out[2 * m + i], z2[i]);
  for (std::size_t i = 0; i < z1.size(); ++i) out[m + i] = f.add(out[m + i], z1[i]);
}

}  // namespace

std::vector<Coeff> multiply(std::span<const Coeff> a, std::span<const Coeff> b, const PrimeField& f) {
  if (a.empty() || b.empty()) return {};
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t na = a.size(), nb = b.size();
  std::vector<Coeff> out(na + nb - 1);
  if (nb <= kSchoolbookLimit) {
    schoolbook(a.data(), na, b.data(), nb, out.data(), f);
  } else if (nb < kNttLimit) {
    // Slice the longer operand into blocks of the shorter one's length.
    std::fill(out.begin(), out.end(), 0);
    std::vector<Coeff> block(nb), prod(2 * nb - 1);
    for (std::size_t s = 0; s < na; s += nb) {
      std::size_t len = std::min(nb, na - s);
      std::fill(block.begin(), block.end(), 0);
      std::copy(a.begin() + s, a.begin() + s + len, block.begin());
      karatsuba(block.data(), b.data(), nb, prod.data(), f);
      std::size_t used = std::min(prod.size(), out.size() - s);
      for (std::size_t i = 0; i < used; ++i) out[s + i] = f.add(out[s + i], prod[i]);
    }
  } else {
    detail::ntt_multiply(a, b, f.modulus(), out);
  }
  return out;
}

std::vector<Coeff> multiply_low(std::span<const Coeff> a, std::span<const Coeff> b, std::size_t n,
                                const PrimeField& f) {
  a = a.subspan(0, std::min(a.size(), n));
  b = b.subspan(0, std::min(b.size(), n));
  auto out = multiply(a, b, f);
  if (out.size() > n) out.resize(n);
  return out;
}

std::vector<Coeff> series_inverse(std::span<const Coeff> fs, std::size_t n, const PrimeField& f) {
  if (fs.empty() || fs[0] == 0) throw DivisionByZero("series inverse of a non-unit");
  std::vector<Coeff> g{f.inv(fs[0])};
  std::size_t k = 1;
  while (k < n) {
    std::size_t k2 = std::min(2 * k, n);
    auto e = multiply_low(fs, g, k2, f);
    e.resize(k2, 0);
    for (auto& v : e) v = f.neg(v);
    e[0] = f.add(e[0], 2 % f.modulus());
    g = multiply_low(g, e, k2, f);
    g.resize(k2, 0);
    k = k2;
  }
  g.resize(n, 0);
  return g;
}

}  // namespace kernel

Polynomial::Polynomial(PrimeField f, std::vector<Coeff> ascending) : field_(f), c_(std::move(ascending)) {
  for (auto& v : c_) {
    if (v >= f.modulus()) v %= f.modulus();
  }
  normalize();
}

Polynomial::Polynomial(PrimeField f, std::initializer_list<std::int64_t> ascending) : field_(f) {
  c_.reserve(ascending.size());
  for (auto v : ascending) c_.push_back(f.reduce(v));
  normalize();
}

Polynomial Polynomial::constant(PrimeField f, std::int64_t c) { return Polynomial(f, {c}); }

Polynomial Polynomial::monomial(PrimeField f, std::int64_t c, std::size_t k) {
  std::vector<Coeff> v(k + 1, 0);
  v[k] = f.reduce(c);
  return Polynomial(f, std::move(v));
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t Polynomial::valuation() const noexcept {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return k;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& v : r.c_) v = field_.neg(v);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_field(field_, o.field_, "add");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_field(field_, o.field_, "sub");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field_, b.field_, "mul");
  return Polynomial(a.field_, kernel::multiply(a.c_, b.c_, a.field_));
}

Polynomial Polynomial::scaled(Coeff c) const {
  if (c == 0) return Polynomial(field_);
  Polynomial r = *this;
  if (c != 1) {
    for (auto& v : r.c_) v = field_.mul(v, c);
  }
  return r;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  require_same_field(field_, c.field(), "scale");
  return scaled(c.value());
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Coeff> v(k + c_.size(), 0);
  std::copy(c_.begin(), c_.end(), v.begin() + k);
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::inflated(std::uint64_t k) const {
  if (k == 0) throw std::invalid_argument("inflation by 0");
  if (k == 1 || c_.size() <= 1) return *this;
  std::vector<Coeff> v((c_.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  Polynomial r(field_);
  r.c_ = std::move(v);
  return r;
}

Polynomial Polynomial::truncated(std::size_t n) const {
  if (n >= c_.size()) return *this;
  return Polynomial(field_, std::vector<Coeff>(c_.begin(), c_.begin() + n));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial(field_);
  std::vector<Coeff> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v[i - 1] = field_.mul(c_[i], field_.reduce(static_cast<std::int64_t>(i % field_.modulus())));
  }
  return Polynomial(field_, std::move(v));
}

Coeff Polynomial::evaluate(Coeff x) const noexcept {
  Coeff r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = field_.add(field_.mul(r, x), c_[i]);
  return r;
}

DivRem divrem(const Polynomial& u, const Polynomial& v) {
  const PrimeField& f = u.field();
  require_same_field(f, v.field(), "divrem");
  if (v.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (u.degree() < v.degree()) return {Polynomial(f), u};
  const std::size_t du = static_cast<std::size_t>(u.degree());
  const std::size_t dv = static_cast<std::size_t>(v.degree());
  const std::size_t dq = du - dv;
  auto uc = u.coeffs();
  auto vc = v.coeffs();
  if (dv <= 64 || dq <= 64) {
    std::vector<Coeff> r(uc.begin(), uc.end());
    std::vector<Coeff> q(dq + 1, 0);
    const Coeff inv_lc = f.inv(v.leading());
    for (std::size_t i = dq + 1; i-- > 0;) {
      Coeff c = r[i + dv];
      if (c == 0) continue;
      if (inv_lc != 1) c = f.mul(c, inv_lc);
      q[i] = c;
      Coeff* row = r.data() + i;
      for (std::size_t j = 0; j < dv; ++j) {
        if (vc[j]) row[j] = f.sub(row[j], f.mul(c, vc[j]));
      }
      r[i + dv] = 0;
    }
    r.resize(dv);
    return {Polynomial(f, std::move(q)), Polynomial(f, std::move(r))};
  }
  // Quotient via a reciprocal of the reversed divisor.
  std::vector<Coeff> rv(vc.rbegin(), vc.rend());
  auto inv = kernel::series_inverse(rv, dq + 1, f);
  std::vector<Coeff> ru(dq + 1);
  for (std::size_t k = 0; k <= dq; ++k) ru[k] = uc[du - k];
  auto qr = kernel::multiply_low(ru, inv, dq + 1, f);
  qr.resize(dq + 1, 0);
  std::reverse(qr.begin(), qr.end());
  Polynomial q(f, std::move(qr));
  auto qv = kernel::multiply_low(q.coeffs(), vc, dv, f);
  std::vector<Coeff> r(dv, 0);
  for (std::size_t k = 0; k < dv; ++k) r[k] = f.sub(uc[k], k < qv.size() ? qv[k] : 0);
  return {std::move(q), Polynomial(f, std::move(r))};
}

Polynomial divide_exact(const Polynomial& u, const Polynomial& v) {
  auto [q, r] = divrem(u, v);
  if (!r.is_zero()) throw NonDivisible("divisor " + to_string(v) + " does not divide");
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field(), b.field(), "gcd");
  if (a.is_zero() && b.is_zero()) throw BothZero("gcd of two zero polynomials");
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divrem(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

Polynomial binary_pow(Polynomial b, std::uint64_t e) {
  Polynomial r = Polynomial::constant(b.field(), 1);
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

}  // namespace

// Base-p digits of e: a^(p^i) is a(T^(p^i)) over F_p, so only digit powers multiply.
Polynomial pow(const Polynomial& a, std::uint64_t e) {
  const std::uint64_t p = a.field().modulus();
  Polynomial r = Polynomial::constant(a.field(), 1);
  Polynomial b = a;
  while (e) {
    std::uint64_t d = e % p;
    if (d) r *= binary_pow(b, d);
    e /= p;
    if (e) b = b.inflated(p);
  }
  return r;
}

Polynomial frobenius_root(const Polynomial& a, std::uint64_t r) {
  const std::uint64_t p = a.field().modulus();
  std::uint64_t t = r;
  while (t > 1 && t % p == 0) t /= p;
  if (r == 0 || t != 1) throw NotAFrobeniusPower("frobenius_root: exponent is not a power of p");
  auto c = a.coeffs();
  std::vector<Coeff> v(c.empty() ? 0 : (c.size() - 1) / r + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (i % r != 0) {
      throw NotAFrobeniusPower(to_string(a) + " is not an r-th power, r = " + std::to_string(r));
    }
    v[i / r] = c[i];
  }
  return Polynomial(a.field(), std::move(v));
}

std::string to_string(const Polynomial& a, char var) {
  if (a.is_zero()) return "0";
  std::string s;
  auto c = a.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!s.empty()) s += " + ";
    if (k == 0) {
      s += std::to_string(c[k]);
      continue;
    }
    if (c[k] != 1) {
      s += std::to_string(c[k]);
      s += '*';
    }
    s += var;
    if (k > 1) {
      s += '^';
      s += std::to_string(k);
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& a) { return os << to_string(a); }

}  // namespace cfrac
