#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfrac/equation.hpp"
#include "cfrac/laurent.hpp"
#include "cfrac/transport.hpp"
#include "cfrac/word.hpp"

namespace cfrac {

enum class FamilyName {
  phi,
  fibonacci_poly,
  mahler,
  mahler_dual,
  schmidt,
  robbins3_word,
  example2_support,
  theta,
  modified_robbins,
  gamma,
  annex4,
  robbins,
};

// Also accepts the short forms "robbins3", "example2", "fibonacci".
FamilyName family_from_string(std::string_view name);
std::string to_string(FamilyName name);

struct FamilySpec {
  FamilyName name;
  std::uint32_t p = 0;  // 0: the family's natural prime
  std::uint64_t r = 0;  // 0: defaults to p
  std::optional<std::int64_t> a, b;
  std::optional<Word> base;  // schmidt
  std::uint64_t n = 0;       // fibonacci index

  // Fills in defaults and checks parameter domains; std::invalid_argument otherwise.
  FamilySpec resolved() const;
  // The characteristic alone: given, implied by r, or fixed by the family.
  std::uint32_t prime() const;
  PrimeField field() const { return PrimeField(resolved().p); }
};

// F_0 = 1, F_1 = T, F_{n+1} = T F_n + F_{n-1}.
Polynomial fibonacci_poly(std::size_t n, const PrimeField& f);

// a_1..a_l, a_1^r..a_l^r, a_1^{r^2}.. truncated to `letters`.
Word schmidt_word(const Word& base, std::uint64_t r, std::size_t letters);

// Prefix of W_inf over F_3: W_0 empty, W_1 = T, W_n = W_{n-1}, 2T, W_{n-2}^(3), 2T, W_{n-1}.
Word robbins3_word(std::size_t letters);

// Largest e with 9^e | m (0 for m = 0 as well).
std::uint64_t v9(std::uint64_t m);
struct Example2Support {
  std::vector<Polynomial> a;    // A_0..A_kmax over F_13
  std::vector<std::uint64_t> i; // i(1)..i(nmax)
};
// A_0 = T, A_{k+1} = [A_k^13 / (T^2+8)^4]; i(n) = v9(4n - 1).
Example2Support example2_support(std::size_t k_max, std::size_t n_max);

// n = m^2 - m + i with 1 <= i <= 2m.
std::pair<std::uint64_t, std::uint64_t> theta_block(std::uint64_t n);
// Index of B in letter n and its constant factor, both 1-based in n.
std::uint64_t theta_j(std::uint64_t n);
FieldElement theta_lambda(const FieldElement& a, const FieldElement& b, std::uint64_t n);
// B_0..B_jmax; NonDivisible if a division by T^2 - 1 is not exact.
std::vector<Polynomial> theta_b(const PrimeField& f, std::size_t j_max);
Word theta_word(const FieldElement& a, const FieldElement& b, std::size_t letters);

// Sum of T^{-r^k}, to `precision` digits.
LaurentSeries mahler_series(const PrimeField& f, std::uint64_t r, std::size_t precision);

// Words that have a closed description; UnsupportedFamily otherwise.
Word family_word(const FamilySpec& spec, std::size_t letters);
// Letter degrees, without building letters where a degree rule is known.
// std::overflow_error past 64 bits.
std::vector<std::int64_t> family_degrees(const FamilySpec& spec, std::size_t letters);
// Defining equation; UnsupportedFamily for fibonacci_poly.
AlgebraicEquation family_equation(const FamilySpec& spec);

// alpha = [head; prefix, alpha_{l+1}] with alpha^r = P alpha_{l+1} + Q, where known.
struct FamilyTransport {
  HyperquadraticData data;
  std::optional<Polynomial> head;
};
std::optional<FamilyTransport> family_transport(const FamilySpec& spec);

}  // namespace cfrac
