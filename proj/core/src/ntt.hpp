#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cfrac::detail {

// Longest transform used; longer products are split into blocks.
inline constexpr std::size_t kMaxNttLength = std::size_t{1} << 23;

// out = a * b with coefficients reduced mod p. Exact: the convolution is
// computed modulo enough NTT primes that CRT recovers the integer result.
void ntt_multiply(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::uint32_t p, std::vector<std::uint32_t>& out);

}  // namespace cfrac::detail
