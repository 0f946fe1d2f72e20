#pragma once

// Naive reference computations used only by tests.

#include <cstdint>
#include <random>
#include <vector>

namespace brute {

inline std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  __extension__ typedef __int128 i128;
  std::int64_t r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = static_cast<std::int64_t>(static_cast<i128>(r) * b % m);
    b = static_cast<std::int64_t>(static_cast<i128>(b) * b % m);
  }
  return r;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline std::vector<std::int64_t> primes_below(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p < n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

/// Legendre symbol by Euler's criterion.
inline int legendre(std::int64_t a, std::int64_t p) {
  const std::int64_t r = powmod(a, (p - 1) / 2, p);
  return r == 0 ? 0 : r == 1 ? 1 : -1;
}

inline bool is_square_mod(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  for (std::int64_t x = 0; x < p; ++x)
    if (x * x % p == a) return true;
  return false;
}

inline bool is_fourth_power_mod(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  for (std::int64_t x = 1; x < p; ++x)
    if (powmod(x, 4, p) == a) return true;
  return false;
}

inline bool squarefree(std::int64_t n) {
  if (n < 0) n = -n;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

inline bool fundamental(std::int64_t d) {
  const std::int64_t m = ((d % 4) + 4) % 4;
  if (m == 1) return d != 1 && squarefree(d);
  if (d % 4 != 0) return false;
  const std::int64_t q = d / 4;
  const std::int64_t r = ((q % 4) + 4) % 4;
  return (r == 2 || r == 3) && squarefree(q);
}

/// d > 0 fundamental, all odd prime factors = 1 mod 4 and no factor 4 or -8.
inline bool positive_prime_product(std::int64_t d) {
  if (d <= 1 || !fundamental(d)) return false;
  std::int64_t n = d;
  if (n % 8 == 0) {
    n /= 8;
    if (n % 4 != 1) return false;
  } else if (n % 4 == 0) {
    return false;
  }
  for (std::int64_t p = 3; p * p <= n; p += 2)
    if (n % p == 0) {
      if (p % 4 != 1) return false;
      n /= p;
    }
  return n == 1 || n % 4 == 1;
}

/// Class number h+ by counting cycles of reduced indefinite forms, d > 0 non-square.
inline std::int64_t narrow_class_number(std::int64_t d) {
  // reduced: 0 < b < sqrt d, sqrt d - b < 2|a| < sqrt d + b
  std::int64_t s = 0;
  while ((s + 1) * (s + 1) <= d) ++s;
  struct F {
    std::int64_t a, b, c;
  };
  std::vector<F> reduced;
  for (std::int64_t b = (d % 2 == 0) ? 2 : 1; b <= s; b += 2) {
    const std::int64_t ac = (b * b - d) / 4;  // negative
    for (std::int64_t a = 1; a <= -ac; ++a) {
      if ((-ac) % a != 0) continue;
      const std::int64_t c = ac / a;
      for (std::int64_t sa : {a, -a}) {
        const std::int64_t sc = sa > 0 ? c : -c;
        const std::int64_t aa = sa < 0 ? -sa : sa;
        if (s - b < 2 * aa && 2 * aa <= s + b) reduced.push_back({sa, b, sc});
      }
    }
  }
  // rho-cycle on reduced forms
  auto rho = [&](F f) {
    const std::int64_t c = f.c < 0 ? -f.c : f.c;
    std::int64_t b = -f.b;
    // choose b' = -b mod 2c with s - 2c < b' <= s  (c = |f.c|)
    std::int64_t r = ((b % (2 * c)) + 2 * c) % (2 * c);
    std::int64_t bb = r + ((s - r) / (2 * c)) * 2 * c;
    if (bb > s) bb -= 2 * c;
    return F{f.c, bb, (bb * bb - d) / (4 * f.c)};
  };
  std::vector<bool> seen(reduced.size(), false);
  std::int64_t cycles = 0;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    F f = reduced[i];
    for (;;) {
      std::size_t j = 0;
      for (; j < reduced.size(); ++j)
        if (reduced[j].a == f.a && reduced[j].b == f.b) break;
      if (j == reduced.size() || seen[j]) break;
      seen[j] = true;
      f = rho(f);
    }
  }
  return cycles;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed5eedULL);
  return g;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

}  // namespace brute
