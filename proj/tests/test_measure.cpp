#include <cmath>

#include "cfrac/errors.hpp"
#include "cfrac/families.hpp"
#include "cfrac/measure.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cfrac;

namespace {

FamilySpec spec_of(FamilyName name, std::uint32_t p = 0) {
  FamilySpec s;
  s.name = name;
  s.p = p;
  return s;
}

FamilySpec theta_spec(std::uint32_t p, std::int64_t a = 1, std::int64_t b = 2) {
  FamilySpec s = spec_of(FamilyName::theta, p);
  s.a = a;
  s.b = b;
  return s;
}

void check_shape(const MeasureEstimate& m, const std::vector<std::int64_t>& d) {
  REQUIRE(m.ratios.size() == d.size() - 1);
  std::int64_t sum = d[0];
  Rational best(0);
  for (std::size_t k = 0; k < m.ratios.size(); ++k) {
    CHECK(m.ratios[k] > 0);
    CHECK(m.ratios[k] == Rational(d[k + 1], sum));
    best = std::max(best, m.ratios[k]);
    sum += d[k + 1];
  }
  CHECK(m.running_sup == best);
  CHECK(m.nu_lower == best + 2);
  CHECK(m.tail_sup <= m.running_sup);
}

}  // namespace

TEST_CASE("ratios of the dual Mahler word") {
  for (std::int64_t r : {2, 3, 5}) {
    auto spec = spec_of(FamilyName::mahler_dual, static_cast<std::uint32_t>(r));
    auto d = family_degrees(spec, 20);
    auto m = nu_estimate(d);
    check_shape(m, d);
    // deg a_n / (deg a_1 + ... + deg a_{n-1}) = r^{n-1}(r-1)/(r^{n-1}-1)
    std::int64_t rn = r;
    for (std::size_t n = 2; n <= 20; ++n, rn *= r) CHECK(m.ratios[n - 2] == Rational(rn * (r - 1), rn - 1));
    CHECK(std::abs(to_double(m.ratios.back()) - static_cast<double>(r - 1)) < 1e-3);
    CHECK(nu_closed_form(spec) == Rational(r + 1));
    CHECK(family_word(spec, 12).degrees() == family_degrees(spec, 12));
  }
}

TEST_CASE("all degrees one") {
  std::vector<std::int64_t> d(30, 1);
  auto m = nu_estimate(d, 10);
  check_shape(m, d);
  for (std::size_t k = 0; k < m.ratios.size(); ++k) CHECK(m.ratios[k] == Rational(1, static_cast<std::int64_t>(k + 1)));
  CHECK(m.running_sup == Rational(1));
  CHECK(m.tail_sup == Rational(1, 20));
  CHECK(m.window == 10);
  CHECK(m.record_index == 0);
  CHECK_THROWS_AS(nu_estimate(std::vector<std::int64_t>{1}), std::invalid_argument);
  CHECK_THROWS_AS(nu_estimate(std::vector<std::int64_t>{1, 0}), std::invalid_argument);
}

TEST_CASE("Robbins word has exponent 2") {
  auto d = robbins3_word(300).degrees();
  auto m = nu_estimate(d);
  check_shape(m, d);
  CHECK(to_double(m.tail_sup) < 0.05);
  // The last record is the letter of degree 27.
  CHECK(m.record_index == 204);
  CHECK(m.record_ratio == Rational(27, 533));
  CHECK(nu_closed_form(spec_of(FamilyName::robbins3_word)) == Rational(2));
}

TEST_CASE("closed forms") {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    CHECK(nu_closed_form(theta_spec(static_cast<std::uint32_t>(p))) == Rational(2) + Rational((p - 1) * (p - 1), 2 * p));
  }
  CHECK(nu_closed_form(theta_spec(7)) == Rational(32, 7));
  CHECK(nu_closed_form(spec_of(FamilyName::example2_support)) == Rational(8, 3));
  CHECK(nu_closed_form(spec_of(FamilyName::annex4)) == Rational(18, 7));
  CHECK(nu_closed_form(spec_of(FamilyName::mahler, 3)) == Rational(3));
  CHECK_THROWS_AS(nu_closed_form(spec_of(FamilyName::modified_robbins, 5)), NoClosedForm);
  CHECK_THROWS_AS(nu_closed_form(spec_of(FamilyName::fibonacci_poly, 5)), NoClosedForm);
}

TEST_CASE("degree sequences with a prescribed exponent") {
  auto three = degree_sequence_for_measure(Rational(3), 3);
  CHECK(three.degrees == std::vector<std::int64_t>{1, 1, 2});
  auto grow = degree_sequence_for_measure(Rational(3), 40);
  for (std::size_t n = 1; n < grow.degrees.size(); ++n) CHECK(grow.degrees[n] == (std::int64_t{1} << (n - 1)));
  CHECK(grow.estimate.tail_sup == Rational(1));
  CHECK(grow.estimate.ratios == nu_estimate(grow.degrees).ratios);

  auto eight_thirds = degree_sequence_for_measure(Rational(8, 3), 60);
  CHECK(std::abs(to_double(eight_thirds.estimate.tail_sup) - 2.0 / 3) < 0.02);

  // r + 1 follows the dual Mahler growth up to rounding.
  auto dual = family_degrees(spec_of(FamilyName::mahler_dual, 3), 12);
  auto built = degree_sequence_for_measure(Rational(4), 12);
  for (std::size_t n = 3; n < 12; ++n) {
    const double ratio = static_cast<double>(built.degrees[n]) / static_cast<double>(built.degrees[n - 1]);
    CHECK(std::abs(ratio - static_cast<double>(dual[n]) / static_cast<double>(dual[n - 1])) < 0.5);
  }
  CHECK_THROWS_AS(degree_sequence_for_measure(Rational(2), 5), std::invalid_argument);
  CHECK_THROWS_AS(degree_sequence_for_measure(Rational(10), 200), std::overflow_error);
}

TEST_CASE("finite prefixes against closed forms") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto spec = theta_spec(p);
    auto d = family_degrees(spec, 30);
    CHECK(family_word(spec, 30).degrees() == d);
  }
  // Words of exponent 2 and the dual Mahler word start above their limits: the first ratio is 1, resp. r.
  CHECK(nu_estimate(family_degrees(spec_of(FamilyName::robbins3_word), 300)).running_sup == Rational(1));
  CHECK(nu_estimate(family_degrees(spec_of(FamilyName::mahler_dual, 3), 30)).running_sup == Rational(3));
  auto annex = spec_of(FamilyName::annex4);
  auto am = nu_estimate(testutil::fixture_integers("annex4_p5", "degrees"));
  CHECK(am.running_sup == Rational(1));
  CHECK(am.record_index == 157);
  CHECK(std::abs(to_double(am.record_ratio - (nu_closed_form(annex) - 2))) < 0.01);
}

TEST_CASE("theta tail near its closed form") {
  for (std::uint32_t p : {5u, 7u, 13u}) {
    auto spec = theta_spec(p);
    auto d = family_degrees(spec, 300);
    auto m = nu_estimate(d, 100);
    check_shape(m, d);
    CAPTURE(p);
    const Rational limit = nu_closed_form(spec) - 2;
    CHECK(std::abs(to_double(m.tail_sup - limit)) < 0.15);
    // Early blocks overshoot the limit: letter 7 has ratio limit + 1/p + ...
    CHECK(m.running_sup == m.ratios[5]);
    CHECK(m.running_sup > limit);
    CHECK(to_double(m.running_sup - limit) < 0.15);
  }
  CHECK_THROWS_AS(family_degrees(theta_spec(13), 400), std::overflow_error);
}

TEST_CASE("example 2 table") {
  auto d = testutil::fixture_integers("robbins_p13", "degrees");
  CHECK(family_degrees(spec_of(FamilyName::example2_support), 300) == d);
  auto m = nu_estimate(d, 100);
  check_shape(m, d);
  // The largest letter in the table is A_2 at n = 61; later ones are too small to show in a window.
  CHECK(m.record_index == 61);
  CHECK(std::abs(to_double(m.record_ratio) - 2.0 / 3) < 0.1);
  CHECK(m.tail_sup < Rational(1, 5));
  CHECK(m.running_sup == Rational(1));
}

TEST_CASE("alternating Schmidt ratios") {
  PrimeField f5(5);
  FamilySpec s = spec_of(FamilyName::schmidt, 5);
  s.base = Word(f5, {parse_polynomial("t^3 + 1", f5), parse_polynomial("2*t", f5)});
  s.r = 5;
  auto d = family_degrees(s, 26);
  CHECK(std::vector<std::int64_t>(d.begin(), d.begin() + 8) == family_word(s, 8).degrees());
  // Each parity class of ratios settles; the windowed sup tracks the larger limit.
  auto m = nu_estimate(d, 4);
  const auto n = m.ratios.size();
  const double hi = to_double(m.ratios[n - 2]), lo = to_double(m.ratios[n - 1]);
  CHECK(std::abs(hi - to_double(m.ratios[n - 4])) < 1e-3);
  CHECK(std::abs(lo - to_double(m.ratios[n - 3])) < 1e-3);
  CHECK(std::abs(to_double(m.tail_sup) - std::max(hi, lo)) < 1e-3);
  CHECK(m.tail_sup == std::max(std::max(m.ratios[n - 1], m.ratios[n - 2]), std::max(m.ratios[n - 3], m.ratios[n - 4])));
}
