#include "cfrac/identities.hpp"

#include <stdexcept>

namespace cfrac {

namespace {

class Continuants {
 public:
  explicit Continuants(const Word& w) : f_(w.field()), w_(w.letters()) {}

  // <w_i, ..., w_{j-1}> (0-based, half open); an empty range gives 1 and
  // the range of length -1 gives 0.
  Polynomial k(std::int64_t i, std::int64_t j) const {
    if (j - i == -1) return Polynomial(f_);
    if (j - i < -1 || i < 0 || j > static_cast<std::int64_t>(w_.size())) {
      throw std::logic_error("continuant range out of bounds");
    }
    return continuant(f_, std::span<const Polynomial>(w_).subspan(static_cast<std::size_t>(i),
                                                                  static_cast<std::size_t>(j - i)));
  }

 private:
  PrimeField f_;
  const std::vector<Polynomial>& w_;
};

Polynomial sign(const PrimeField& f, std::int64_t k) {
  return Polynomial::constant(f, (k % 2 == 0) ? 1 : -1);
}

// [w_1, ..., w_n] folded from the right as an unreduced fraction.
Fraction fold_value(const PrimeField& f, const std::vector<Polynomial>& w) {
  Fraction v{w.back(), Polynomial::constant(f, 1)};
  for (std::size_t i = w.size() - 1; i-- > 0;) v = {w[i] * v.num + v.den, std::move(v.num)};
  return v;
}

}  // namespace

IdentityReport identity_suite(const Word& w, std::size_t split, const FieldElement& y) {
  if (w.head()) throw std::invalid_argument("identity_suite expects a word without head");
  require_same_field(w.field(), y.field(), "identity_suite");
  const PrimeField& f = w.field();
  const auto n = static_cast<std::int64_t>(w.size());
  const auto s = static_cast<std::int64_t>(std::min<std::size_t>(split, w.size()));
  Continuants K(w);
  IdentityReport r;
  auto add = [&](const char* name, bool ok) { r.checks.push_back({name, ok}); };

  const Polynomial kw = K.k(0, n);
  add("left and right recursions agree", continuant_from_left(f, w.letters()) == kw);

  if (n >= 1) {
    Fraction v = fold_value(f, w.letters());
    add("[W] = <W>/<W'>", v.num * K.k(1, n) == v.den * kw);
    Word rev = word_reverse(w);
    Fraction vr = fold_value(f, rev.letters());
    add("[W*] = <W>/<W''>", vr.num * K.k(0, n - 1) == vr.den * kw);
    add("<W*> = <W>", continuant(rev) == kw);
  }

  add("<A,B> = <A><B> + <A''><B'>", kw == K.k(0, s) * K.k(s, n) + K.k(0, s - 1) * K.k(s + 1, n));

  if (n >= 1) {
    add("<W><(W')''> - <W'><W''> = (-1)^|W|",
        kw * K.k(1, n - 1) - K.k(1, n) * K.k(0, n - 1) == sign(f, n));
  }

  {
    auto c = convergents(w);
    bool ok = true;
    for (std::size_t k = 1; k < c.size(); ++k) {
      ok = ok && c[k].x * c[k - 1].y - c[k].y * c[k - 1].x == sign(f, static_cast<std::int64_t>(k));
    }
    add("x_k y_{k-1} - y_k x_{k-1} = (-1)^k", ok);
  }

  if (s >= 1) {
    add("<A,B><A'> - <A><A',B> = (-1)^(|A|-1) <B'>",
        kw * K.k(1, s) - K.k(0, s) * K.k(1, n) == sign(f, s - 1) * K.k(s + 1, n));
  }

  if (n >= 1) {
    const std::int64_t m = s < n ? s : n - 1;
    add("x_n y_m - y_n x_m = (-1)^(m-1) <a_{m+2}..a_n>",
        kw * K.k(1, m) - K.k(1, n) * K.k(0, m) == sign(f, m - 1) * K.k(m + 1, n));
  }

  {
    Word yw = word_scale(y, w);
    Polynomial ky = continuant(yw);
    add("<y.W> = y^(|W| mod 2) <W>", ky == (n % 2 == 0 ? kw : kw.scaled(y.value())));
    if (n >= 1) {
      Fraction a = cf_eval(w), b = cf_eval(yw);
      add("[y.W] = y [W]", b.num * a.den == (a.num * b.den).scaled(y.value()));
    }
  }

  if (n >= 1) {
    // One-letter extension: [W, x] = [W] + z  <=>  z <W'> (x <W'> + <(W')''>) = (-1)^(|W|-1).
    const Polynomial& x = w[static_cast<std::size_t>(s % n)];
    std::vector<Polynomial> wx = w.letters();
    wx.push_back(x);
    const Polynomial kwx = continuant(f, wx);
    const Polynomial kwx1 = continuant(f, std::span<const Polynomial>(wx).subspan(1));
    const Polynomial kw1 = K.k(1, n);
    const Polynomial tail = x * kw1 + K.k(1, n - 1);
    const Fraction z{kwx * kw1 - kw * kwx1, kwx1 * kw1};
    add("[W,x] - [W] solves the extension equation", z.num * kw1 * tail == sign(f, n - 1) * z.den);
    const Fraction z2{sign(f, n - 1), kw1 * tail};
    add("[W] + z equals [W,x] for the solved z", (kw * z2.den + kw1 * z2.num) * kwx1 == kwx * kw1 * z2.den);
  }
  return r;
}

}  // namespace cfrac
