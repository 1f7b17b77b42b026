#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cfrac/laurent.hpp"
#include "cfrac/polynomial.hpp"

namespace cfrac {

// Finite sequence of partial quotients (letters), each of degree >= 1, with
// an optional leading term of degree <= 0 for values of absolute value <= 1:
// [head; w_1, ..., w_n] = head + 1/[w_1, ..., w_n].
class Word {
 public:
  explicit Word(PrimeField f) : field_(f) {}
  // Throws std::invalid_argument if a letter has degree < 1 or the head degree > 0.
  Word(PrimeField f, std::vector<Polynomial> letters, std::optional<Polynomial> head = std::nullopt);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Polynomial>& letters() const noexcept { return letters_; }
  const std::optional<Polynomial>& head() const noexcept { return head_; }
  // 0-based.
  const Polynomial& operator[](std::size_t i) const { return letters_[i]; }

  Word prefix(std::size_t n) const;
  std::vector<std::int64_t> degrees() const;
  std::vector<Coeff> leading_coefficients() const;
  void push_back(Polynomial letter);

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.field_ == b.field_ && a.head_ == b.head_ && a.letters_ == b.letters_;
  }

 private:
  PrimeField field_;
  std::vector<Polynomial> letters_;
  std::optional<Polynomial> head_;
};

struct Fraction {
  Polynomial num;
  Polynomial den;
};

// Continuant <w_1, ..., w_n> of a letter sequence; <> = 1.
Polynomial continuant(const PrimeField& f, std::span<const Polynomial> w);
Polynomial continuant(const Word& w);
// Same value through the left recursion <W> = w_1 <W'> + <W'''>, used as a cross-check.
Polynomial continuant_from_left(const PrimeField& f, std::span<const Polynomial> w);

// [W] as num/den, head included when present.
Fraction cf_eval(const Word& w);

// x_k / y_k = [w_1, ..., w_k] for k = 0..n with (x_0, y_0) = (1, 0), (x_1, y_1) = (w_1, 1).
struct Convergent {
  Polynomial x;
  Polynomial y;
};
std::vector<Convergent> convergents(const Word& w);

// Partial quotients of P/Q by the Euclidean algorithm. DivisionByZero if Q = 0.
Word euclid_cf(const Polynomial& p, const Polynomial& q);

// W* (letters reversed). Words with a head are rejected.
Word word_reverse(const Word& w);
// y.W: letters multiplied alternately by y and 1/y, so that [y.W] = y [W]. ZeroScalar if y = 0.
Word word_scale(const FieldElement& y, const Word& w);

struct SeriesExpansion {
  Word word;
  // Letters (head excluded) guaranteed to be partial quotients of every series
  // agreeing with the input on its known digits. Only certified letters are returned.
  std::size_t certified = 0;
};
SeriesExpansion cf_of_series(const LaurentSeries& a);

// Value of the finite continued fraction [W] expanded to `precision` digits.
LaurentSeries series_of_word(const Word& w, std::size_t precision);

// k-th complete quotient: a = [a_1, ..., a_{k-1}, a_k(series)], k >= 1.
LaurentSeries complete_quotient(const LaurentSeries& a, std::size_t k);

std::string to_string(const Word& w);
// Letters only, "[t, 12*t, ...]".
std::string letters_to_string(const Word& w);
std::string degrees_to_string(const std::vector<std::int64_t>& degrees);
std::string coeffs_to_string(const std::vector<Coeff>& coeffs);
// {"head": "..."?, "letters": ["...", ...]}
std::string to_json(const Word& w);
Word word_from_json(const std::string& json, const PrimeField& f);

}  // namespace cfrac
