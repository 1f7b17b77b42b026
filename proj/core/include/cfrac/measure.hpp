#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "cfrac/families.hpp"
#include "cfrac/word.hpp"

namespace cfrac {

using Rational = boost::rational<std::int64_t>;

// Approximation exponent nu = 2 + limsup deg(a_{n+1}) / (deg a_1 + ... + deg a_n), read from a finite prefix.
struct MeasureEstimate {
  // ratios[k] = deg a_{k+2} / (deg a_1 + ... + deg a_{k+1})
  std::vector<Rational> ratios;
  // Largest ratio seen.
  Rational running_sup;
  // Largest ratio among the last `window` ones.
  Rational tail_sup;
  std::size_t window = 0;
  // 2 + running_sup.
  Rational nu_lower;
  // Ratio at the last letter whose degree exceeds every earlier one (0 if none), and its 1-based index.
  Rational record_ratio;
  std::size_t record_index = 0;
};

// std::invalid_argument if fewer than two degrees or a degree < 1.
MeasureEstimate nu_estimate(const std::vector<std::int64_t>& degrees, std::size_t window = 50);
MeasureEstimate nu_estimate(const Word& w, std::size_t window = 50);

double to_double(const Rational& r);

// Known value of nu for the family; NoClosedForm otherwise.
Rational nu_closed_form(const FamilySpec& spec);

struct DegreeSequence {
  std::vector<std::int64_t> degrees;
  MeasureEstimate estimate;
};
// u_1 = 1, u_{n+1} = max(1, round((target - 2) * (u_1 + ... + u_n))).
// std::overflow_error when the degrees leave 64-bit range.
DegreeSequence degree_sequence_for_measure(const Rational& target, std::size_t length, std::size_t window = 50);

}  // namespace cfrac
