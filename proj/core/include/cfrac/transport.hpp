#pragma once

#include <cstdint>
#include <limits>

#include "cfrac/equation.hpp"
#include "cfrac/word.hpp"

namespace cfrac {

// alpha = [prefix, alpha_{l+1}] with alpha^r = P alpha_{l+1} + Q.
struct HyperquadraticData {
  Word prefix;
  Polynomial p;
  Polynomial q;
  std::uint64_t r;

  AlgebraicEquation equation() const { return hyperquadratic_from_prefix(prefix, p, q, r); }
};

struct TransportOptions {
  // Stop (returning a shorter word) before absorbing an input letter of larger degree.
  std::uint64_t max_input_degree = std::numeric_limits<std::uint64_t>::max();
};

// Letters of alpha without touching its series: since alpha^r = [a_1^r, a_2^r, ...],
// the letters of alpha_{l+1} = (alpha^r - Q)/P are read off by pushing the
// already known a_k^r through the Mobius map z -> (z - Q)/P. Throws
// TransportStarved if an input letter is needed before it has been produced.
Word expand_hyperquadratic(const HyperquadraticData& data, std::size_t count, const TransportOptions& opts = {});

}  // namespace cfrac
