#include <random>

#include "cfrac/equation.hpp"
#include "cfrac/errors.hpp"
#include "cfrac/expansion.hpp"
#include "cfrac/families.hpp"
#include "cfrac/transport.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cfrac;
using testutil::to_poly;
using testutil::to_vec;

namespace {

Polynomial P(const PrimeField& f, const std::string& text) { return parse_polynomial(text, f); }
XPolynomial X(const PrimeField& f, const std::string& text) { return parse_bivariate(text, f); }
AlgebraicEquation E(const PrimeField& f, const std::string& text) { return AlgebraicEquation::parse(text, f); }

const char* kRobbins = "x^4 + x^2 - t*x + 1";

// P(x + q) by expanding every (x + q)^i.
XPolynomial naive_shift(const XPolynomial& p, const Polynomial& q) {
  const PrimeField& f = p.field();
  XPolynomial sum(f), base = XPolynomial::x(f) + XPolynomial::from_t(q);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    sum = sum + XPolynomial::from_t(p.coeff(i)) * pow(base, i);
  }
  return sum;
}

Word letters_of(const PrimeField& f, const std::string& list) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start < list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string::npos) end = list.size();
    out.push_back(P(f, list.substr(start, end - start)));
    start = end + 1;
  }
  return Word(f, std::move(out));
}

Word random_word(std::mt19937_64& rng, const PrimeField& f, std::size_t len, std::size_t max_degree) {
  std::vector<Polynomial> letters;
  for (std::size_t i = 0; i < len; ++i) {
    letters.push_back(to_poly(f, oracle::random_poly(rng, 1 + rng() % max_degree, f.modulus())));
  }
  return Word(f, std::move(letters));
}

LaurentSeries root_series(const AlgebraicEquation& eq, std::size_t precision) {
  return hensel_root(eq, direct_seed(eq), precision);
}

}  // namespace

TEST_CASE("Taylor shift against direct expansion") {
  std::mt19937_64 rng(43);
  for (std::uint32_t p : {2u, 3u, 7u, 13u}) {
    PrimeField f(p);
    for (int i = 0; i < 30; ++i) {
      std::vector<Polynomial> c;
      std::size_t n = 1 + rng() % 9;
      for (std::size_t k = 0; k < n; ++k) c.push_back(to_poly(f, oracle::random_poly(rng, rng() % 5, p, false)));
      c.push_back(to_poly(f, oracle::random_poly(rng, rng() % 3, p)));
      AlgebraicEquation eq{XPolynomial(f, c)};
      auto q = to_poly(f, oracle::random_poly(rng, rng() % 4, p, false));
      CHECK(eq.taylor_shift(q).poly() == naive_shift(eq.poly(), q));
    }
  }
}

TEST_CASE("equation parsing and reversal") {
  PrimeField f7(7);
  auto pb = E(f7, "2*t*x^8 - (2*t^2+1)*(x^7+x) + 2*t^3 + 6*t");
  CHECK(pb.degree() == 8);
  CHECK(pb.coeff(7) == P(f7, "5*t^2+6"));
  auto bound = AlgebraicEquation::parse("b*t*x^8 - (a*b*t^2+1)*(x^7+x) + a^2*b*t^3 + c*t", f7,
                                        parse_bindings("a=1,b=2,c=2*a+1/b", f7));
  CHECK(bound == pb);
  auto rev = pb.reversed();
  CHECK(rev.coeff(0) == pb.coeff(8));
  CHECK(rev.coeff(8) == pb.coeff(0));
  CHECK(rev.reversed() == pb);
  CHECK(pb.proportional_to(AlgebraicEquation(pb.poly().scaled(3))));
  CHECK_FALSE(pb.proportional_to(rev));
  CHECK_THROWS_AS(E(f7, "t^2 + 1"), SyntaxError);
  CHECK_THROWS_AS(E(f7, "x^2 +* 1"), SyntaxError);

  auto h = HyperquadraticEquation::from_equation(pb);
  REQUIRE(h);
  CHECK(h->r == 7);
  CHECK(h->to_equation() == pb);
  CHECK_FALSE(HyperquadraticEquation::from_equation(E(f7, kRobbins)));
}

TEST_CASE("direct engine") {
  PrimeField f13(13), f5(5), f7(7);
  auto w = expand_root_direct(E(f13, kRobbins), 10);
  REQUIRE(w.head());
  CHECK(w.head()->is_zero());
  CHECK(letters_to_string(w) == "[t, 12*t, 7*t, 11*t, 8*t, 5*t, t^5 + 7*t^3 + 3*t, 3*t, 9*t, 4*t]");

  auto lin = expand_root_direct(E(f5, "x - t"), 10);
  CHECK(letters_to_string(lin) == "[t]");
  CHECK_FALSE(lin.head());
  // Rational root: the expansion stops after Euclid's quotients.
  auto rat = expand_root_direct(E(f5, "(t^2+1)*x - t^4"), 10);
  CHECK(rat == euclid_cf(P(f5, "t^4"), P(f5, "t^2+1")));

  auto sage = expand_root_direct(E(f7, "2*t*x^8 - (2*t^2+1)*(x^7+x) + 2*t^3 + 6*t"), 12);
  CHECK(to_string(sage) ==
        "[t, 2*t, t^5 + t^3 + t, 5*t, 4*t, 2*t^5 + 2*t^3 + 2*t, "
        "t^37 + 6*t^35 + t^23 + 6*t^21 + t^9 + 6*t^7, 5*t^5 + 5*t^3 + 5*t, 3*t, 2*t, "
        "4*t^5 + 4*t^3 + 4*t, 2*t^37 + 5*t^35 + 2*t^23 + 5*t^21 + 2*t^9 + 5*t^7]");

  CHECK(expand_root_direct(E(f5, kRobbins), 0).empty());
  CHECK_THROWS_AS(expand_root_direct(E(f5, "x^2 - 1"), 3), DominantRootViolation);

  // Annex tables for the quartic.
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    PrimeField f(p);
    std::string name = "robbins_p" + std::to_string(p);
    auto expect = testutil::fixture_integers(name, "degrees");
    auto word = expand_root_direct(E(f, kRobbins), expect.size());
    CAPTURE(p);
    CHECK(word.degrees() == expect);
    CHECK(letters_to_string(word.prefix(10)) == testutil::fixture_line(name, "cfe"));
  }
}

TEST_CASE("Newton iteration") {
  PrimeField f2(2);
  // x^3 = 1 + 1/T
  auto eq = E(f2, "t*x^3 - t - 1");
  auto s = hensel_root(eq, LaurentSeries(f2, 0, {1}), 6);
  REQUIRE(s.top() == 0);
  std::vector<std::int64_t> digits;
  for (std::int64_t e = 0; e > -6; --e) digits.push_back(s.coeff(e));
  CHECK(digits == std::vector<std::int64_t>{1, 1, 1, 1, 0, 0});
  // Oracle: cube the digits as a polynomial in 1/T and compare with 1 + 1/T.
  oracle::Vec u(digits.begin(), digits.end());
  auto cube = oracle::power(u, 3, 2);
  cube.resize(6, 0);
  CHECK(cube == oracle::Vec{1, 1, 0, 0, 0, 0});

  // Mahler: x = 1/T + x^r.
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    auto m = hensel_root(E(f, "t*x^" + std::to_string(p) + " - t*x + 1"), LaurentSeries(f, -1, {1}), 300);
    CHECK(m.precision() >= 300);
    CHECK(m.agrees_with(mahler_series(f, p, 300)));
  }

  // Quartic: 1/T + 1/T^3 + ...
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    PrimeField f(p);
    auto eq4 = E(f, kRobbins);
    auto root = root_series(eq4, 500);
    CHECK(root.top() == -1);
    CHECK(root.coeff(-2) == 0);
    CHECK(root.coeff(-3) == 1);
    CHECK(root.precision() >= 500);
    CHECK(evaluate(eq4.poly(), root).is_zero());
  }

  // Pure Frobenius form: x^3 = T^3 + 1 + 1/T^3 over F_3, root T + 1 + 1/T.
  PrimeField f3(3);
  auto frob = hensel_root(E(f3, "t^3*x^3 - t^6 - t^3 - 1"), LaurentSeries(f3, 1, {1}), 30);
  CHECK(frob.agrees_with(LaurentSeries(f3, 1, {1, 1, 1, 0, 0, 0})));

  // A double root defeats Newton.
  PrimeField f5(5);
  CHECK_THROWS_AS(hensel_root(E(f5, "t^2*x^2 - 2*t*x + 1"), LaurentSeries(f5, -1, {1, 0, 1}), 20), SingularRoot);
}

TEST_CASE("certified engine agrees with the direct engine") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    PrimeField f(p);
    auto eq = E(f, kRobbins);
    CHECK(expand_root_certified(eq, 40) == expand_root_direct(eq, 40));
  }
  PrimeField f5(5);
  auto modified = E(f5, "x^4 + x^2 - t*x - 1/12");
  auto w = expand_root_certified(modified, 10);
  REQUIRE(w.head());
  CHECK(letters_to_string(w) == "[3*t, 4*t, t, t, t, t, 4*t, 3*t, 2*t, 3*t]");
  CHECK(expand_root_certified(modified, 0).empty());

  CertifiedOptions tight;
  tight.max_precision = 16;
  CHECK_THROWS_AS(expand_root_certified(E(f5, kRobbins), 200, tight), PrecisionBudgetExceeded);
}

TEST_CASE("transport engine agrees with the direct engine") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    FamilySpec spec;
    spec.name = FamilyName::theta;
    spec.p = p;
    spec.a = 1;
    spec.b = 2;
    auto t = family_transport(spec);
    REQUIRE(t);
    auto moved = expand_hyperquadratic(t->data, 30);
    auto direct = expand_root_direct(family_equation(spec), 30);
    CAPTURE(p);
    CHECK(moved == direct);
    CHECK(moved == family_word(spec, 30));
  }

  FamilySpec ex2;
  ex2.name = FamilyName::example2_support;
  auto t = family_transport(ex2);
  REQUIRE(t);
  auto moved = expand_hyperquadratic(t->data, 300);
  CHECK(moved.degrees() == testutil::fixture_integers("robbins_p13", "degrees"));

  TransportOptions budget;
  budget.max_input_degree = 20;
  CHECK(expand_hyperquadratic(t->data, 300, budget).size() < 300);
}

TEST_CASE("hyperquadratic constructors") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    PrimeField f(p);
    for (std::int64_t a = 1; a < 3; ++a) {
      for (std::int64_t b = 1; b < 4; ++b) {
        if (b % p == 0) continue;
        FieldElement fa(f, a), fb(f, b);
        Word prefix(f, {P(f, "t").scaled(fa), P(f, "t").scaled(fb)});
        auto q = P(f, "t").scaled(fa + fb.inverse());
        auto eq = hyperquadratic_from_prefix(prefix, P(f, "t^2-1"), q, p);
        // b T X^{p+1} - (a b T^2 + 1)(X^p + X) + a^2 b T^3 + (2a + 1/b) T
        std::vector<Polynomial> c(p + 2, Polynomial(f));
        c[p + 1] = P(f, "t").scaled(fb);
        auto mid = -(P(f, "t^2").scaled(fa * fb) + P(f, "1"));
        c[p] = mid;
        c[1] = mid;
        c[0] = P(f, "t^3").scaled(fa * fa * fb) + P(f, "t").scaled(FieldElement(f, 2) * fa + fb.inverse());
        AlgebraicEquation pb{XPolynomial(f, c)};
        CAPTURE(p);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(eq.proportional_to(pb));
        CHECK(expand_root_direct(eq, 2) == prefix);
      }
    }
  }

  PrimeField f13(13);
  auto prefix = letters_of(f13, "t,12*t,7*t,11*t,8*t,5*t");
  auto big_p = P(f13, "(t^2+8)^4");
  auto eq12 = hyperquadratic_from_prefix(prefix, big_p, P(f13, "8*t^7+t^5+9*t^3+7*t"), 13);
  auto expanded = expand_root_direct(eq12, 300);
  CHECK(expanded.degrees() == testutil::fixture_integers("robbins_p13", "degrees"));
  CHECK(expanded.prefix(6) == prefix);

  PrimeField f5(5);
  auto phi = hyperquadratic_from_prefix(Word(f5, {P(f5, "t")}), P(f5, "1"), Polynomial(f5), 1);
  CHECK(phi.proportional_to(E(f5, "x^2 - t*x - 1")));
}

TEST_CASE("quadratic from a periodic expansion") {
  PrimeField f5(5);
  CHECK(quadratic_from_periodic(Word(f5), Word(f5, {P(f5, "t")})).proportional_to(E(f5, "x^2 - t*x - 1")));
  CHECK(quadratic_from_periodic(Word(f5), Word(f5, {P(f5, "2*t")})).proportional_to(E(f5, "x^2 - 2*t*x - 1")));
  auto shifted = quadratic_from_periodic(Word(f5, {P(f5, "t")}), Word(f5, {P(f5, "t")}));
  CHECK(expand_root_certified(shifted, 12) == Word(f5, std::vector<Polynomial>(12, P(f5, "t"))));

  std::mt19937_64 rng(47);
  for (std::uint32_t p : {2u, 5u, 7u}) {
    PrimeField f(p);
    for (int i = 0; i < 20; ++i) {
      auto pre = random_word(rng, f, rng() % 3, 2), per = random_word(rng, f, 1 + rng() % 3, 2);
      auto eq = quadratic_from_periodic(pre, per);
      CHECK(eq.degree() == 2);
      std::vector<Polynomial> expect = pre.letters();
      for (int k = 0; k < 3; ++k) expect.insert(expect.end(), per.letters().begin(), per.letters().end());
      const Word want(f, expect);
      if (pre.empty()) {
        CHECK(expand_root_direct(eq, expect.size()) == want);
      } else {
        // With a prefix the conjugate root need not be small, so the direct
        // engine's precondition can fail; pick the root by a seed instead.
        CertifiedOptions opts;
        opts.seed = series_of_word(want, 40);
        CHECK(expand_root_certified(eq, expect.size(), opts) == want);
      }
    }
  }
  CHECK_THROWS_AS(quadratic_from_periodic(Word(f5), Word(f5)), std::invalid_argument);
}

TEST_CASE("unbounded degrees predicate") {
  PrimeField f5(5);
  auto one = P(f5, "1"), zero = Polynomial(f5), t = P(f5, "t");
  CHECK(unbounded_predicate(one, zero, zero, one, 5));
  CHECK_FALSE(unbounded_predicate(one, zero, zero, one, 1));
  CHECK_FALSE(unbounded_predicate(t, t, one, P(f5, "t^4"), 5));
  CHECK_THROWS_AS(unbounded_predicate(t, t, one, one, 5), DegenerateTransformation);

  // Data of the p = 13 quartic: the determinant is a unit times (T^2+8)^4.
  PrimeField f13(13);
  auto big_p = P(f13, "(t^2+8)^4");
  auto m = mobius_from_prefix(letters_of(f13, "t,12*t,7*t,11*t,8*t,5*t"), big_p, P(f13, "8*t^7+t^5+9*t^3+7*t"));
  auto det = m.u * m.z - m.v * m.w;
  CHECK(det.monic() == big_p);
  CHECK(unbounded_predicate(m.u, m.v, m.w, m.z, 13));
  CHECK_FALSE(unbounded_predicate(m.u, m.v, m.w, m.z, 1));
}

TEST_CASE("derivative relations") {
  PrimeField f3(3), f13(13), f5(5);
  CHECK(verify_derivative_relation(E(f3, kRobbins), {X(f3, "x^3 - x"), X(f3, "t")}, 400));
  CHECK(verify_derivative_relation(E(f13, kRobbins), {X(f13, "2*x^2 - t*x/4 + 1"), X(f13, "9*t^2 - 6")}, 400));
  CHECK_FALSE(verify_derivative_relation(E(f5, kRobbins), {X(f5, "x^3 - x"), X(f5, "t")}, 400));
  CHECK_FALSE(verify_derivative_relation(E(f13, kRobbins), {X(f13, "2*x^2 - t*x/4 + 2"), X(f13, "9*t^2 - 6")}, 400));
}

TEST_CASE("relations of the quartic roots") {
  // p = 13: the root is hyperquadratic of degree 14.
  PrimeField f13(13);
  auto alpha13 = root_series(E(f13, kRobbins), 2000);
  auto h13 = X(f13, "9*t*x^14 - (t^2+1)*x^13 + (t^6+t^4+11*t^2+1)*x - (t^5+2*t^3+2*t)");
  CHECK(evaluate(h13, alpha13).is_zero());

  // p = 7, modified quartic, beta = 1/alpha.
  PrimeField f7(7);
  auto eq = E(f7, "x^4 + x^2 - t*x - 1/12");
  auto beta = inverse(root_series(eq, 3000));
  CHECK(evaluate(X(f7, "(2*t^2+2)*x^8 + (3*t^3+5*t)*x^7 + 4*t*x + 1"), beta).is_zero());
  auto b4 = complete_quotient(beta, 4);
  auto lhs = pow_frobenius(beta, 7);
  auto sq = P(f7, "(t^2-1)^2");
  CHECK(lhs.agrees_with(b4 * sq.scaled(3) + P(f7, "4*t^3+2*t")));
  // The third relation holds with both right-hand terms doubled; as printed,
  // -(T^2-1)^2 beta_9 + 3T^3 + 5T, it does not.
  auto b2 = complete_quotient(beta, 2), b9 = complete_quotient(beta, 9);
  CHECK(pow_frobenius(b2, 7).agrees_with(b9 * sq.scaled(5) + P(f7, "6*t^3+3*t")));
  CHECK_FALSE(pow_frobenius(b2, 7).agrees_with(b9 * (-sq) + P(f7, "3*t^3+5*t")));
  std::vector<Polynomial> a4_to_a8;
  for (std::size_t k = 4; k <= 8; ++k) a4_to_a8.push_back(poly_part(complete_quotient(beta, k)));
  CHECK(Word(f7, a4_to_a8) == letters_of(f7, "3*t^3+6*t,5*t,3*t,4*t,2*t"));
}

TEST_CASE("Mahler approximation quality") {
  for (std::uint64_t r : {2u, 3u}) {
    PrimeField f(static_cast<std::uint32_t>(r));
    auto alpha = mahler_series(f, r, 2000);
    std::uint64_t rn1 = 1;  // r^(n-1)
    for (int n = 1; n <= 5; ++n) {
      Polynomial u(f), v = Polynomial::monomial(f, 1, rn1);
      for (std::uint64_t rk = 1; rk <= rn1; rk *= r) u += Polynomial::monomial(f, 1, rn1 - rk);
      auto diff = alpha - from_rational(u, v, 2000);
      CHECK(diff.top() == -static_cast<std::int64_t>(rn1 * r));
      rn1 *= r;
    }
  }
}

TEST_CASE("square of [T, T^3, T^9, ...] is [W(T^2)] over F_3") {
  PrimeField f3(3);
  std::vector<Polynomial> powers;
  for (std::size_t k = 1; k <= 729; k *= 3) powers.push_back(Polynomial::monomial(f3, 1, k));
  auto beta = series_of_word(Word(f3, powers), 400);
  std::vector<Polynomial> inflated;
  const Word w = robbins3_word(400);
  for (const auto& l : w.letters()) inflated.push_back(l.inflated(2));
  auto rhs = series_of_word(Word(f3, inflated), 400);
  CHECK((beta * beta).truncated(250).agrees_with(rhs.truncated(250)));
  CHECK(rhs.top() == 2);
}
