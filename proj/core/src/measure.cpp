#include "cfrac/measure.hpp"

#include <algorithm>
#include <stdexcept>

#include "cfrac/errors.hpp"

namespace cfrac {

MeasureEstimate nu_estimate(const std::vector<std::int64_t>& degrees, std::size_t window) {
  if (degrees.size() < 2) throw std::invalid_argument("nu_estimate needs at least two letters");
  if (window == 0) throw std::invalid_argument("nu_estimate needs a positive window");
  MeasureEstimate m;
  m.window = window;
  std::int64_t sum = 0, best = 0;
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    const std::int64_t d = degrees[k];
    if (d < 1) throw std::invalid_argument("letter degrees must be >= 1");
    if (k > 0) {
      m.ratios.emplace_back(d, sum);
      if (d > best) {
        m.record_ratio = m.ratios.back();
        m.record_index = k + 1;
      }
    }
    best = std::max(best, d);
    if (__builtin_add_overflow(sum, d, &sum)) throw std::overflow_error("degree sum overflows");
  }
  m.running_sup = *std::max_element(m.ratios.begin(), m.ratios.end());
  const std::size_t from = m.ratios.size() > window ? m.ratios.size() - window : 0;
  m.tail_sup = *std::max_element(m.ratios.begin() + static_cast<std::ptrdiff_t>(from), m.ratios.end());
  m.nu_lower = m.running_sup + 2;
  return m;
}

MeasureEstimate nu_estimate(const Word& w, std::size_t window) { return nu_estimate(w.degrees(), window); }

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

Rational nu_closed_form(const FamilySpec& spec) {
  FamilySpec s = spec.resolved();
  const auto p = static_cast<std::int64_t>(s.p);
  const auto r = static_cast<std::int64_t>(s.r);
  switch (s.name) {
    case FamilyName::theta:
      return Rational(2) + Rational((p - 1) * (p - 1), 2 * p);
    case FamilyName::mahler:
      return Rational(r);
    case FamilyName::mahler_dual:
      return Rational(r + 1);
    case FamilyName::example2_support:
      return Rational(8, 3);
    case FamilyName::annex4:
      return Rational(18, 7);
    case FamilyName::robbins3_word:
    case FamilyName::phi:
      return Rational(2);
    default:
      throw NoClosedForm("no closed form for nu of " + to_string(s.name));
  }
}

DegreeSequence degree_sequence_for_measure(const Rational& target, std::size_t length, std::size_t window) {
  if (target <= Rational(2)) throw std::invalid_argument("target must exceed 2");
  const Rational excess = target - 2;
  DegreeSequence out;
  std::int64_t sum = 0;
  for (std::size_t n = 0; n < length; ++n) {
    std::int64_t u = 1;
    if (n > 0) {
      // round half up: floor((2 num sum + den) / (2 den))
      const std::int64_t num = excess.numerator(), den = excess.denominator();
      std::int64_t prod, twice;
      if (__builtin_mul_overflow(num, sum, &prod) || __builtin_mul_overflow(prod, 2, &twice) ||
          __builtin_add_overflow(twice, den, &twice)) {
        throw std::overflow_error("degree sequence leaves 64-bit range");
      }
      u = std::max<std::int64_t>(1, twice / (2 * den));
    }
    out.degrees.push_back(u);
    if (__builtin_add_overflow(sum, u, &sum)) throw std::overflow_error("degree sequence leaves 64-bit range");
  }
  if (out.degrees.size() >= 2) out.estimate = nu_estimate(out.degrees, window);
  return out;
}

}  // namespace cfrac
