#pragma once

#include <cstdint>
#include <string>

namespace cfrac {

// Canonical representative in [0, p).
using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

// The prime field F_p, p < 2^31. A cheap value type: copies share nothing.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff reduce_u64(std::uint64_t v) const noexcept {
    auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * barrett_) >> 64);
    std::uint64_t r = v - q * p_;
    return static_cast<Coeff>(r >= p_ ? r - p_ : r);
  }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return reduce_u64(static_cast<std::uint64_t>(a) * b);
  }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  // Throws DivisionByZero on 0.
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  std::uint64_t barrett_;  // floor(2^64 / p)
};

// Throws FieldMismatch naming the operation.
void require_same_field(const PrimeField& a, const PrimeField& b, const char* op);

class FieldElement {
 public:
  FieldElement(PrimeField f, std::int64_t v) : field_(f), value_(f.reduce(v)) {}
  static FieldElement from_canonical(PrimeField f, Coeff c) { return FieldElement(f, static_cast<std::int64_t>(c)); }

  Coeff value() const noexcept { return value_; }
  const PrimeField& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const { return from_canonical(field_, field_.pow(value_, e)); }
  FieldElement operator-() const { return from_canonical(field_, field_.neg(value_)); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  std::string to_string() const { return std::to_string(value_); }

 private:
  PrimeField field_;
  Coeff value_;
};

}  // namespace cfrac
