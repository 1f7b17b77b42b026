#include "cfrac/transport.hpp"

#include "cfrac/errors.hpp"

namespace cfrac {

Word expand_hyperquadratic(const HyperquadraticData& data, std::size_t count, const TransportOptions& opts) {
  const PrimeField& f = data.prefix.field();
  if (data.prefix.empty() || data.prefix.head()) {
    throw std::invalid_argument("hyperquadratic prefix must be a nonempty word without head");
  }
  if (!is_power_of(data.r, f.modulus())) throw std::invalid_argument("r must be a power of p");
  if (data.p.is_zero()) throw std::invalid_argument("P must be nonzero");

  std::vector<Polynomial> letters = data.prefix.letters();
  if (letters.size() >= count) return Word(f, std::vector<Polynomial>(letters.begin(), letters.begin() + count));

  // State (A z + B) / (C z + D), z the unread tail of alpha^r; its determinant is +-P.
  Polynomial a = Polynomial::constant(f, 1), b = -data.q, c(f), d = data.p;
  const std::int64_t det_degree = data.p.degree();
  const auto r = static_cast<std::int64_t>(data.r);
  std::size_t next_input = 0;

  while (letters.size() < count) {
    // |z| >= |T|^r, so [value] = [A/C] once C z dominates D and the error term is small.
    const bool ready = !c.is_zero() && c.degree() + r > d.degree() && det_degree < 2 * c.degree() + r;
    if (ready) {
      Polynomial q = divrem(a, c).quotient;
      if (q.degree() < 1) throw DegenerateTransformation("emitted a partial quotient of degree < 1");
      Polynomial na = a - q * c, nb = b - q * d;
      a = std::move(c);
      b = std::move(d);
      c = std::move(na);
      d = std::move(nb);
      letters.push_back(std::move(q));
      continue;
    }
    if (next_input >= letters.size()) {
      throw TransportStarved("letter " + std::to_string(next_input + 1) + " is needed before it is known");
    }
    const Polynomial& src = letters[next_input];
    if (static_cast<std::uint64_t>(src.degree()) > opts.max_input_degree / data.r) break;
    Polynomial w = src.inflated(data.r);  // a_k^r over F_p
    ++next_input;
    Polynomial na = a * w + b, nc = c * w + d;
    b = std::move(a);
    d = std::move(c);
    a = std::move(na);
    c = std::move(nc);
  }
  return Word(f, std::move(letters));
}

}  // namespace cfrac
