#include "ntt.hpp"

#include <algorithm>
#include <array>

namespace cfrac::detail {

namespace {

std::uint32_t pow_plain(std::uint64_t a, std::uint64_t e, std::uint32_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// Montgomery arithmetic for one NTT prime below 2^31, R = 2^32.
struct NttPrime {
  std::uint32_t mod;
  std::uint32_t generator;
  std::uint32_t neg_inv;  // -mod^{-1} mod 2^32
  std::uint32_t r2;       // R^2 mod mod
  // roots[h + j] = w_{2h}^j in Montgomery form, for every level h < table.
  std::vector<std::uint32_t> roots, iroots;

  NttPrime(std::uint32_t m, std::uint32_t g) : mod(m), generator(g) {
    std::uint32_t inv = m;  // Newton iteration for m^{-1} mod 2^32
    for (int i = 0; i < 5; ++i) inv *= 2 - m * inv;
    neg_inv = ~inv + 1;
    std::uint64_t r = (std::uint64_t{1} << 32) % m;
    r2 = static_cast<std::uint32_t>(r * r % m);
  }

  std::uint32_t reduce(std::uint64_t t) const {
    std::uint32_t k = static_cast<std::uint32_t>(t) * neg_inv;
    std::uint64_t u = (t + static_cast<std::uint64_t>(k) * mod) >> 32;
    return static_cast<std::uint32_t>(u >= mod ? u - mod : u);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= mod ? s - mod : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + mod - b;
  }

  void ensure(std::size_t n) {
    if (roots.size() >= n) return;
    roots.assign(n, 0);
    iroots.assign(n, 0);
    for (std::size_t h = 1; h < n; h <<= 1) {
      std::uint32_t w = pow_plain(generator, (mod - 1) / (2 * h), mod);
      std::uint32_t iw = pow_plain(w, mod - 2, mod);
      std::uint64_t x = 1, ix = 1;
      for (std::size_t j = 0; j < h; ++j) {
        roots[h + j] = mul(static_cast<std::uint32_t>(x), r2);
        iroots[h + j] = mul(static_cast<std::uint32_t>(ix), r2);
        x = x * w % mod;
        ix = ix * iw % mod;
      }
    }
  }

  // Decimation in frequency: natural order in, bit-reversed order out.
  void forward(std::uint32_t* a, std::size_t n) const {
    for (std::size_t h = n >> 1; h >= 1; h >>= 1) {
      const std::uint32_t* w = roots.data() + h;
      for (std::size_t s = 0; s < n; s += 2 * h) {
        std::uint32_t* x = a + s;
        std::uint32_t* y = x + h;
        for (std::size_t j = 0; j < h; ++j) {
          std::uint32_t u = x[j], v = y[j];
          x[j] = add(u, v);
          y[j] = mul(sub(u, v), w[j]);
        }
      }
    }
  }

  // Decimation in time: bit-reversed order in, natural order out, unscaled.
  void inverse(std::uint32_t* a, std::size_t n) const {
    for (std::size_t h = 1; h < n; h <<= 1) {
      const std::uint32_t* w = iroots.data() + h;
      for (std::size_t s = 0; s < n; s += 2 * h) {
        std::uint32_t* x = a + s;
        std::uint32_t* y = x + h;
        for (std::size_t j = 0; j < h; ++j) {
          std::uint32_t u = x[j], v = mul(y[j], w[j]);
          x[j] = add(u, v);
          y[j] = sub(u, v);
        }
      }
    }
  }

  // Residues of the integer convolution a*b modulo this prime.
  std::vector<std::uint32_t> convolve(std::span<const std::uint32_t> a,
                                      std::span<const std::uint32_t> b) {
    std::size_t len = a.size() + b.size() - 1;
    std::size_t n = 1;
    while (n < len) n <<= 1;
    ensure(n);
    bool square = a.data() == b.data() && a.size() == b.size();
    std::vector<std::uint32_t> fa(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i] % mod;
    forward(fa.data(), n);
    if (square) {
      for (std::size_t i = 0; i < n; ++i) fa[i] = mul(fa[i], fa[i]);
    } else {
      std::vector<std::uint32_t> fb(n, 0);
      for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i] % mod;
      forward(fb.data(), n);
      for (std::size_t i = 0; i < n; ++i) fa[i] = mul(fa[i], fb[i]);
    }
    inverse(fa.data(), n);
    // fa = n * conv * R^{-1}; one Montgomery product by R^2/n restores conv.
    std::uint32_t scale = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(r2) * pow_plain(n % mod, mod - 2, mod) % mod);
    fa.resize(len);
    for (auto& v : fa) v = mul(v, scale);
    return fa;
  }
};

std::array<NttPrime, 3>& primes() {
  // Per thread so that table growth never races with a running transform.
  thread_local std::array<NttPrime, 3> table{NttPrime(2013265921u, 31u),
                                             NttPrime(1811939329u, 13u),
                                             NttPrime(469762049u, 3u)};
  return table;
}

void multiply_block(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                    std::uint32_t p, std::uint32_t* out) {
  auto& P = primes();
  const unsigned __int128 bound = static_cast<unsigned __int128>(std::min(a.size(), b.size())) *
                                  (p - 1) * (p - 1);
  const std::uint64_t q0 = P[0].mod, q1 = P[1].mod, q2 = P[2].mod;
  std::size_t len = a.size() + b.size() - 1;
  auto acc = [&](std::size_t i, std::uint64_t v) {
    std::uint64_t s = out[i] + v % p;
    out[i] = static_cast<std::uint32_t>(s >= p ? s - p : s);
  };
  if (bound < q0) {
    auto r0 = P[0].convolve(a, b);
    for (std::size_t i = 0; i < len; ++i) acc(i, r0[i]);
    return;
  }
  auto r0 = P[0].convolve(a, b);
  auto r1 = P[1].convolve(a, b);
  const std::uint64_t inv01 = pow_plain(q0 % q1, q1 - 2, static_cast<std::uint32_t>(q1));
  if (bound < static_cast<unsigned __int128>(q0) * q1) {
    for (std::size_t i = 0; i < len; ++i) {
      std::uint64_t t = (r1[i] + q1 - r0[i] % q1) % q1 * inv01 % q1;
      acc(i, r0[i] + q0 * t);
    }
    return;
  }
  auto r2 = P[2].convolve(a, b);
  const std::uint64_t q01_mod2 = q0 * q1 % q2;
  const std::uint64_t inv012 = pow_plain(q01_mod2, q2 - 2, static_cast<std::uint32_t>(q2));
  const std::uint64_t q01_modp = q0 * q1 % p;
  for (std::size_t i = 0; i < len; ++i) {
    std::uint64_t t1 = (r1[i] + q1 - r0[i] % q1) % q1 * inv01 % q1;
    std::uint64_t x01 = r0[i] + q0 * t1;
    std::uint64_t t2 = (r2[i] + q2 - x01 % q2) % q2 * inv012 % q2;
    acc(i, x01 % p + q01_modp * t2 % p);
  }
}

}  // namespace

void ntt_multiply(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::uint32_t p, std::vector<std::uint32_t>& out) {
  out.assign(a.size() + b.size() - 1, 0);
  if (a.size() + b.size() - 1 <= kMaxNttLength) {
    multiply_block(a, b, p, out.data());
    return;
  }
  std::size_t sa, sb;
  if (b.size() <= kMaxNttLength / 2) {
    sb = b.size();
    sa = kMaxNttLength - sb + 1;
  } else if (a.size() <= kMaxNttLength / 2) {
    sa = a.size();
    sb = kMaxNttLength - sa + 1;
  } else {
    sa = sb = kMaxNttLength / 2;
  }
  for (std::size_t i = 0; i < a.size(); i += sa) {
    auto ca = a.subspan(i, std::min(sa, a.size() - i));
    for (std::size_t j = 0; j < b.size(); j += sb) {
      auto cb = b.subspan(j, std::min(sb, b.size() - j));
      multiply_block(ca, cb, p, out.data() + i + j);
    }
  }
}

}  // namespace cfrac::detail
