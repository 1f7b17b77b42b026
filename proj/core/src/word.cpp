#include "cfrac/word.hpp"

#include <stdexcept>

#include "cfrac/errors.hpp"
#include "cfrac/parse.hpp"
#include "json.hpp"

namespace cfrac {

Word::Word(PrimeField f, std::vector<Polynomial> letters, std::optional<Polynomial> head)
    : field_(f), letters_(std::move(letters)), head_(std::move(head)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    require_same_field(f, letters_[i].field(), "word");
    if (letters_[i].degree() < 1) {
      throw std::invalid_argument("letter " + std::to_string(i + 1) + " has degree < 1");
    }
  }
  if (head_) {
    require_same_field(f, head_->field(), "word");
    if (head_->degree() > 0) throw std::invalid_argument("head of positive degree");
  }
}

Word Word::prefix(std::size_t n) const {
  Word w = *this;
  if (n < w.letters_.size()) w.letters_.resize(n, Polynomial(field_));
  return w;
}

std::vector<std::int64_t> Word::degrees() const {
  std::vector<std::int64_t> d;
  d.reserve(letters_.size());
  for (const auto& a : letters_) d.push_back(a.degree());
  return d;
}

std::vector<Coeff> Word::leading_coefficients() const {
  std::vector<Coeff> c;
  c.reserve(letters_.size());
  for (const auto& a : letters_) c.push_back(a.leading());
  return c;
}

void Word::push_back(Polynomial letter) {
  require_same_field(field_, letter.field(), "word");
  if (letter.degree() < 1) throw std::invalid_argument("letter of degree < 1");
  letters_.push_back(std::move(letter));
}

Polynomial continuant(const PrimeField& f, std::span<const Polynomial> w) {
  Polynomial prev(f);                         // K_{-1}
  Polynomial cur = Polynomial::constant(f, 1);  // K_0
  for (const auto& a : w) {
    Polynomial next = a * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial continuant(const Word& w) { return continuant(w.field(), w.letters()); }

Polynomial continuant_from_left(const PrimeField& f, std::span<const Polynomial> w) {
  // Suffix continuants, built from the right end.
  Polynomial after(f);                          // <w_{k+2}..w_n> at step k
  Polynomial cur = Polynomial::constant(f, 1);  // <w_{k+1}..w_n>
  for (std::size_t k = w.size(); k-- > 0;) {
    Polynomial next = w[k] * cur + after;
    after = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Fraction cf_eval(const Word& w) {
  const PrimeField& f = w.field();
  std::span<const Polynomial> l = w.letters();
  if (w.head()) {
    if (l.empty()) return {*w.head(), Polynomial::constant(f, 1)};
    Polynomial k = continuant(f, l);
    return {*w.head() * k + continuant(f, l.subspan(1)), k};
  }
  if (l.empty()) throw std::invalid_argument("value of the empty word");
  return {continuant(f, l), continuant(f, l.subspan(1))};
}

std::vector<Convergent> convergents(const Word& w) {
  const PrimeField& f = w.field();
  std::vector<Convergent> out;
  out.reserve(w.size() + 1);
  out.push_back({Polynomial::constant(f, 1), Polynomial(f)});
  if (w.empty()) return out;
  out.push_back({w[0], Polynomial::constant(f, 1)});
  for (std::size_t k = 1; k < w.size(); ++k) {
    const auto& a = w[k];
    out.push_back({a * out[k].x + out[k - 1].x, a * out[k].y + out[k - 1].y});
  }
  return out;
}

Word euclid_cf(const Polynomial& p, const Polynomial& q) {
  const PrimeField& f = p.field();
  require_same_field(f, q.field(), "euclid_cf");
  if (q.is_zero()) throw DivisionByZero("continued fraction of P/0");
  Word w(f);
  std::optional<Polynomial> head;
  Polynomial a = p, b = q;
  bool first = true;
  std::vector<Polynomial> letters;
  while (!b.is_zero()) {
    auto [quo, rem] = divrem(a, b);
    if (first && quo.degree() < 1) {
      head = std::move(quo);
    } else {
      letters.push_back(std::move(quo));
    }
    first = false;
    a = std::move(b);
    b = std::move(rem);
  }
  return Word(f, std::move(letters), std::move(head));
}

Word word_reverse(const Word& w) {
  if (w.head()) throw std::invalid_argument("reversal of a word with a head");
  return Word(w.field(), std::vector<Polynomial>(w.letters().rbegin(), w.letters().rend()));
}

Word word_scale(const FieldElement& y, const Word& w) {
  require_same_field(y.field(), w.field(), "word_scale");
  if (y.is_zero()) throw ZeroScalar("word scaling by zero");
  const Coeff yv = y.value(), yi = y.inverse().value();
  std::optional<Polynomial> head;
  bool by_y = true;
  if (w.head()) {
    head = w.head()->scaled(yv);
    by_y = false;
  }
  std::vector<Polynomial> l;
  l.reserve(w.size());
  for (const auto& a : w.letters()) {
    l.push_back(a.scaled(by_y ? yv : yi));
    by_y = !by_y;
  }
  return Word(w.field(), std::move(l), std::move(head));
}

SeriesExpansion cf_of_series(const LaurentSeries& a) {
  const PrimeField& f = a.field();
  const std::int64_t t = a.top();  // PrecisionExhausted on zero
  const std::int64_t low = a.low();
  SeriesExpansion out{Word(f), 0};
  // Budget: quotient k is certified iff 2 deg(q_k) < 1 - low.
  const std::int64_t budget = 1 - low;
  if (t >= 1 && low > 0) return out;
  const std::size_t m = low < 0 ? static_cast<std::size_t>(-low) : 0;
  // Truncated value S / T^m.
  std::vector<Coeff> s(static_cast<std::size_t>(t + static_cast<std::int64_t>(m)) + 1, 0);
  for (std::size_t k = 0; k < a.precision(); ++k) {
    std::int64_t e = t - static_cast<std::int64_t>(k) + static_cast<std::int64_t>(m);
    s[static_cast<std::size_t>(e)] = a.digits()[k];
  }
  Polynomial num(f, std::move(s));
  Polynomial den = Polynomial::monomial(f, 1, m);
  std::optional<Polynomial> head;
  std::vector<Polynomial> letters;
  std::int64_t qdeg = 0;
  bool first = true;
  while (!den.is_zero()) {
    auto [quo, rem] = divrem(num, den);
    if (first && t <= 0) {
      head = std::move(quo);  // q_0 = 1, always certified here since low <= t <= 0
    } else {
      qdeg += first ? 0 : quo.degree();
      if (!(2 * qdeg < budget)) break;
      letters.push_back(std::move(quo));
    }
    first = false;
    num = std::move(den);
    den = std::move(rem);
  }
  out.certified = letters.size();
  out.word = Word(f, std::move(letters), std::move(head));
  return out;
}

LaurentSeries series_of_word(const Word& w, std::size_t precision) {
  auto [num, den] = cf_eval(w);
  return from_rational(num, den, precision);
}

LaurentSeries complete_quotient(const LaurentSeries& a, std::size_t k) {
  if (k == 0) throw std::invalid_argument("complete quotients are numbered from 1");
  LaurentSeries z = a;
  for (std::size_t i = 1; i < k; ++i) {
    Polynomial q = poly_part(z);
    if (q.degree() < 1) throw std::invalid_argument("complete_quotient: partial quotient of degree < 1");
    z = inverse(z + (-q));
  }
  return z;
}

namespace {

std::string join_letters(const std::vector<Polynomial>& l) {
  std::string s;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) s += ", ";
    s += to_string(l[i]);
  }
  return s;
}

}  // namespace

std::string to_string(const Word& w) {
  std::string s = "[";
  if (w.head()) {
    s += to_string(*w.head());
    if (!w.empty()) s += "; ";
  }
  s += join_letters(w.letters());
  return s + "]";
}

std::string letters_to_string(const Word& w) { return "[" + join_letters(w.letters()) + "]"; }

std::string degrees_to_string(const std::vector<std::int64_t>& degrees) {
  std::string s = "[";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(degrees[i]);
  }
  return s + "]";
}

std::string coeffs_to_string(const std::vector<Coeff>& coeffs) {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(coeffs[i]);
  }
  return s + "]";
}

std::string to_json(const Word& w) {
  nlohmann::json j;
  if (w.head()) j["head"] = to_string(*w.head());
  std::vector<std::string> l;
  l.reserve(w.size());
  for (const auto& a : w.letters()) l.push_back(to_string(a));
  j["letters"] = l;
  return j.dump();
}

Word word_from_json(const std::string& json, const PrimeField& f) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("bad word JSON: ") + e.what(), e.byte);
  }
  std::optional<Polynomial> head;
  if (j.contains("head") && !j["head"].is_null()) head = parse_polynomial(j["head"].get<std::string>(), f);
  std::vector<Polynomial> l;
  for (const auto& x : j.at("letters")) l.push_back(parse_polynomial(x.get<std::string>(), f));
  return Word(f, std::move(l), std::move(head));
}

}  // namespace cfrac
