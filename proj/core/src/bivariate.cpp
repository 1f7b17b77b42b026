#include "cfrac/bivariate.hpp"

#include <algorithm>

namespace cfrac {

XPolynomial::XPolynomial(PrimeField f, std::vector<Polynomial> ascending)
    : field_(f), c_(std::move(ascending)) {
  for (const auto& c : c_) require_same_field(f, c.field(), "XPolynomial");
  normalize();
}

XPolynomial XPolynomial::from_t(const Polynomial& c) { return XPolynomial(c.field(), {c}); }

XPolynomial XPolynomial::x(PrimeField f) {
  return XPolynomial(f, {Polynomial(f), Polynomial::constant(f, 1)});
}

void XPolynomial::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Polynomial& XPolynomial::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }

std::int64_t XPolynomial::t_degree() const noexcept {
  std::int64_t d = Polynomial::kZeroDegree;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

XPolynomial XPolynomial::operator-() const {
  XPolynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

XPolynomial operator+(const XPolynomial& a, const XPolynomial& b) {
  require_same_field(a.field_, b.field_, "add");
  std::vector<Polynomial> v(std::max(a.c_.size(), b.c_.size()), Polynomial(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return XPolynomial(a.field_, std::move(v));
}

XPolynomial operator-(const XPolynomial& a, const XPolynomial& b) { return a + (-b); }

XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
  require_same_field(a.field_, b.field_, "mul");
  if (a.is_zero() || b.is_zero()) return XPolynomial(a.field_);
  std::vector<Polynomial> v(a.c_.size() + b.c_.size() - 1, Polynomial(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (!b.c_[j].is_zero()) v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return XPolynomial(a.field_, std::move(v));
}

XPolynomial XPolynomial::scaled(Coeff c) const {
  std::vector<Polynomial> v;
  v.reserve(c_.size());
  for (const auto& p : c_) v.push_back(p.scaled(c));
  return XPolynomial(field_, std::move(v));
}

XPolynomial XPolynomial::derivative_x() const {
  std::vector<Polynomial> v;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v.push_back(c_[i].scaled(field_.reduce(static_cast<std::int64_t>(i % field_.modulus()))));
  }
  return XPolynomial(field_, std::move(v));
}

Polynomial XPolynomial::evaluate(const Polynomial& value) const {
  Polynomial r(field_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * value + c_[i];
  return r;
}

XPolynomial pow(const XPolynomial& a, std::uint64_t e) {
  XPolynomial r = XPolynomial::from_t(Polynomial::constant(a.field(), 1));
  XPolynomial b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::string to_string(const XPolynomial& a) {
  if (a.is_zero()) return "0";
  std::string s;
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += to_string(c[i]);
      continue;
    }
    std::string xs = i == 1 ? "x" : "x^" + std::to_string(i);
    std::size_t terms = 0;
    for (auto v : c[i].coeffs()) terms += v != 0;
    if (c[i].is_one()) {
      s += xs;
    } else if (terms == 1) {
      s += to_string(c[i]) + "*" + xs;
    } else {
      s += "(" + to_string(c[i]) + ")*" + xs;
    }
  }
  return s;
}

}  // namespace cfrac
