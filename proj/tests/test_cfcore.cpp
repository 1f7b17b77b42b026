#include <random>

#include "cfrac/errors.hpp"
#include "cfrac/identities.hpp"
#include "cfrac/parse.hpp"
#include "cfrac/word.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cfrac;
using testutil::to_poly;
using testutil::to_vec;

namespace {

Word random_word(std::mt19937_64& rng, const PrimeField& f, std::size_t len, std::size_t max_degree) {
  std::vector<Polynomial> letters;
  for (std::size_t i = 0; i < len; ++i) {
    letters.push_back(to_poly(f, oracle::random_poly(rng, 1 + rng() % max_degree, f.modulus())));
  }
  return Word(f, std::move(letters));
}

Polynomial P(const PrimeField& f, const char* text) { return parse_polynomial(text, f); }

}  // namespace

TEST_CASE("word invariants") {
  PrimeField f(5);
  CHECK_THROWS_AS(Word(f, {Polynomial(f, {3})}), std::invalid_argument);
  CHECK_THROWS_AS(Word(f, {P(f, "t")}, P(f, "t")), std::invalid_argument);
  Word w(f, {P(f, "t"), P(f, "2*t^3+1")}, P(f, "4"));
  CHECK(w.degrees() == std::vector<std::int64_t>{1, 3});
  CHECK(w.leading_coefficients() == std::vector<Coeff>{1, 2});
  CHECK(to_string(w) == "[4; t, 2*t^3 + 1]");
  CHECK(letters_to_string(w) == "[t, 2*t^3 + 1]");
  CHECK(degrees_to_string({1, 1, 5}) == "[1, 1, 5]");
}

TEST_CASE("continuants") {
  PrimeField f7(7);
  CHECK(continuant(Word(f7)).is_one());
  Polynomial t = Polynomial::variable(f7);
  CHECK(continuant(Word(f7, {t, t, t, t, t})) == P(f7, "t^5 + 4*t^3 + 3*t"));

  // Closed form sum C(n-k, k) T^(n-2k).
  for (std::size_t n = 0; n < 25; ++n) {
    oracle::Vec closed(n + 1, 0);
    for (std::size_t k = 0; 2 * k <= n; ++k) closed[n - 2 * k] = oracle::binomial(n - k, k, 7);
    oracle::trim(closed);
    CHECK(to_vec(continuant(Word(f7, std::vector<Polynomial>(n, t)))) == closed);
  }

  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u, 5u, 13u}) {
    PrimeField f(p);
    for (int i = 0; i < 60; ++i) {
      auto w = random_word(rng, f, rng() % 9, 3);
      std::vector<oracle::Vec> letters;
      for (const auto& l : w.letters()) letters.push_back(to_vec(l));
      auto k = continuant(w);
      CHECK(to_vec(k) == oracle::euler_continuant(letters, p));
      CHECK(continuant_from_left(f, w.letters()) == k);
    }
  }

  // <w1, w2, w3> = w1 w2 w3 + w1 + w3
  PrimeField f13(13);
  auto a = P(f13, "t^2+3"), b = P(f13, "5*t"), c = P(f13, "t^3+t+1");
  CHECK(continuant(Word(f13, {a, b, c})) == a * b * c + a + c);
}

TEST_CASE("evaluation and convergents") {
  PrimeField f3(3), f5(5);
  Word w(f3, {P(f3, "t^2+1"), P(f3, "t^2+2")});
  auto v = cf_eval(w);
  CHECK(v.num == P(f3, "t^4"));
  CHECK(v.den == P(f3, "t^2+2"));
  auto single = cf_eval(Word(f3, {P(f3, "t^2+1")}));
  CHECK(single.num == P(f3, "t^2+1"));
  CHECK(single.den.is_one());
  // With head 1: 1 + (T^2+2)/T^4.
  auto h = cf_eval(Word(f3, w.letters(), P(f3, "1")));
  CHECK(h.num == P(f3, "t^4+t^2+2"));
  CHECK(h.den == P(f3, "t^4"));

  auto t = Polynomial::variable(f5);
  auto cv = convergents(Word(f5, {t, t, t}));
  REQUIRE(cv.size() == 4);
  CHECK(cv[0].x.is_one());
  CHECK(cv[0].y.is_zero());
  CHECK(cv[1].x == t);
  CHECK(cv[1].y.is_one());
  CHECK(cv[2].x == P(f5, "t^2+1"));
  CHECK(cv[2].y == t);
  CHECK(cv[3].x == P(f5, "t^3+2*t"));
  CHECK(cv[3].y == P(f5, "t^2+1"));
  auto e = cf_eval(Word(f5, {t, t, t}));
  CHECK(e.num == cv[3].x);
  CHECK(e.den == cv[3].y);

  std::mt19937_64 rng(23);
  for (std::uint32_t p : {2u, 3u, 7u, 13u}) {
    PrimeField f(p);
    for (int i = 0; i < 40; ++i) {
      auto word = random_word(rng, f, 1 + rng() % 12, 4);
      auto c = convergents(word);
      for (std::size_t k = 1; k < c.size(); ++k) {
        auto det = c[k].x * c[k - 1].y - c[k].y * c[k - 1].x;
        CHECK(det == Polynomial::constant(f, k % 2 ? -1 : 1));
        CHECK(gcd(c[k].x, c[k].y).is_one());
        CHECK(c[k].x.degree() > c[k].y.degree());
      }
    }
  }
}

TEST_CASE("Euclid") {
  PrimeField f17(17), f3(3);
  auto w = euclid_cf(P(f17, "t^17"), P(f17, "(t^2-1)^6"));
  CHECK(letters_to_string(w) ==
        "[t^5 + 6*t^3 + 4*t, 7*t, 11*t, 5*t, 16*t, 16*t, 14*t, 3*t, t, t, 12*t, 6*t, 10*t]");
  CHECK_FALSE(w.head());
  CHECK(letters_to_string(euclid_cf(P(f3, "t^4"), P(f3, "t^2+2"))) == "[t^2 + 1, t^2 + 2]");
  auto single = euclid_cf(P(f3, "t^2+t"), P(f3, "1"));
  CHECK(single.size() == 1);
  CHECK(single[0] == P(f3, "t^2+t"));
  CHECK_THROWS_AS(euclid_cf(P(f3, "t"), Polynomial(f3)), DivisionByZero);

  // deg P <= deg Q: a head carries the polynomial part.
  auto headed = euclid_cf(P(f3, "2*t+1"), P(f3, "t"));
  REQUIRE(headed.head());
  CHECK(*headed.head() == P(f3, "2"));
  CHECK(letters_to_string(headed) == "[t]");
  auto zero_head = euclid_cf(P(f3, "1"), P(f3, "t^2"));
  REQUIRE(zero_head.head());
  CHECK(zero_head.head()->is_zero());

  std::mt19937_64 rng(29);
  for (std::uint32_t p : {2u, 5u, 13u}) {
    PrimeField f(p);
    for (int i = 0; i < 60; ++i) {
      auto b = oracle::random_poly(rng, rng() % 12, p);
      auto a = oracle::random_poly(rng, b.size() + rng() % 12, p);
      auto quotients = oracle::euclid(a, b, p);
      auto got = euclid_cf(to_poly(f, a), to_poly(f, b));
      REQUIRE(got.size() == quotients.size());
      for (std::size_t k = 0; k < got.size(); ++k) CHECK(to_vec(got[k]) == quotients[k]);
      // cf_eval o euclid_cf gives P/Q in lowest terms.
      auto v = cf_eval(got);
      CHECK(v.num * to_poly(f, b) == v.den * to_poly(f, a));
      // euclid_cf o cf_eval is the identity on words.
      auto word = random_word(rng, f, 1 + rng() % 8, 3);
      auto e = cf_eval(word);
      CHECK(euclid_cf(e.num, e.den) == word);
    }
  }
}

TEST_CASE("reversal and scaling") {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {3u, 7u, 13u}) {
    PrimeField f(p);
    for (int i = 0; i < 40; ++i) {
      auto w = random_word(rng, f, rng() % 9, 3);
      CHECK(continuant(word_reverse(w)) == continuant(w));
      FieldElement y(f, 1 + static_cast<std::int64_t>(rng() % (p - 1)));
      auto s = word_scale(y, w);
      CHECK(continuant(s) == (w.size() % 2 == 0 ? continuant(w) : continuant(w).scaled(y)));
      CHECK(word_scale(FieldElement(f, 1), w) == w);
      if (!w.empty()) {
        auto a = cf_eval(w), b = cf_eval(s);
        CHECK(b.num * a.den == (a.num * b.den).scaled(y));
      }
    }
  }
  PrimeField f3(3);
  CHECK_THROWS_AS(word_scale(FieldElement(f3, 0), Word(f3)), ZeroScalar);
  CHECK_THROWS_AS(word_reverse(Word(f3, {P(f3, "t")}, P(f3, "0"))), std::invalid_argument);
}

TEST_CASE("identity suite") {
  std::mt19937_64 rng(37);
  int run = 0;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    PrimeField f(p);
    for (int i = 0; i < 80; ++i) {
      auto w = random_word(rng, f, rng() % 9, 3);
      FieldElement y(f, 1 + static_cast<std::int64_t>(rng() % (p - 1)));
      for (std::size_t split = 0; split <= w.size(); ++split) {
        auto rep = identity_suite(w, split, y);
        for (const auto& c : rep.checks) {
          CAPTURE(c.name);
          CHECK(c.passed);
        }
        ++run;
      }
    }
  }
  CHECK(run > 1000);

  // Smallest determinant case: <w1,w2> * 1 - w2 * w1 = 1.
  PrimeField f5(5);
  Word two(f5, {P(f5, "2*t+1"), P(f5, "t^2")});
  CHECK(continuant(two) - two[1] * two[0] == Polynomial::constant(f5, 1));
  // (8) with m = 0: y_n is the continuant of a_2..a_n.
  auto c = convergents(two);
  CHECK(c.back().y == continuant(f5, std::span<const Polynomial>(two.letters()).subspan(1)));
}

TEST_CASE("continued fraction of a series") {
  PrimeField f3(3);
  auto t = Polynomial::variable(f3);
  std::vector<Polynomial> fib{Polynomial(f3, {1}), t};
  for (int n = 2; n <= 5; ++n) fib.push_back(t * fib.back() + fib[fib.size() - 2]);
  auto s = from_rational(fib[5], fib[4], 40);
  auto r = cf_of_series(s);
  CHECK(r.certified == 5);
  CHECK(r.word == euclid_cf(fib[5], fib[4]));
  CHECK(r.word == Word(f3, std::vector<Polynomial>(5, t)));

  auto single = cf_of_series(LaurentSeries::from_polynomial(t, 5));
  CHECK(single.word == Word(f3, {t}));

  // [T, T^3, T^9, T^27, ...]
  std::vector<Polynomial> powers;
  for (std::size_t k = 1; k <= 243; k *= 3) powers.push_back(Polynomial::monomial(f3, 1, k));
  auto big = series_of_word(Word(f3, powers), 100);
  auto out = cf_of_series(big);
  REQUIRE(out.certified >= 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(out.word[k] == powers[k]);

  // Certified letters always agree with Euclid on the exact fraction.
  std::mt19937_64 rng(41);
  for (std::uint32_t p : {2u, 5u, 13u}) {
    PrimeField f(p);
    for (int i = 0; i < 40; ++i) {
      auto word = random_word(rng, f, 2 + rng() % 20, 3);
      auto e = cf_eval(word);
      std::size_t prec = 1 + rng() % 60;
      auto part = cf_of_series(from_rational(e.num, e.den, prec));
      REQUIRE(part.certified <= word.size());
      for (std::size_t k = 0; k < part.certified; ++k) CHECK(part.word[k] == word[k]);
      CHECK(part.word.size() == part.certified);
    }
  }
}

TEST_CASE("complete quotients") {
  PrimeField f5(5);
  Word w(f5, {P(f5, "t"), P(f5, "2*t"), P(f5, "t^2+1"), P(f5, "3*t")});
  auto s = series_of_word(w, 50);
  CHECK(complete_quotient(s, 1) == s);
  auto z3 = complete_quotient(s, 3);
  auto tail = series_of_word(Word(f5, {P(f5, "t^2+1"), P(f5, "3*t")}), 50);
  CHECK(z3.agrees_with(tail));
  CHECK_THROWS_AS(complete_quotient(s, 0), std::invalid_argument);
}

TEST_CASE("json round trip") {
  PrimeField f13(13);
  Word w(f13, {P(f13, "t"), P(f13, "12*t"), P(f13, "t^5 + 7*t^3 + 3*t")}, Polynomial(f13));
  auto j = to_json(w);
  CHECK(j == R"({"head":"0","letters":["t","12*t","t^5 + 7*t^3 + 3*t"]})");
  CHECK(word_from_json(j, f13) == w);
  Word plain(f13, {P(f13, "2*t+1")});
  CHECK(word_from_json(to_json(plain), f13) == plain);
}
