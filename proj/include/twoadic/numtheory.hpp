#pragma once

#include <cstdint>
#include <vector>

namespace twoadic {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1)
      r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

/// Deterministic primality by trial division; adequate at desk scale.
inline bool is_prime(std::uint64_t m) {
  if (m < 2)
    return false;
  if (m % 2 == 0)
    return m == 2;
  for (std::uint64_t d = 3; d * d <= m; d += 2)
    if (m % d == 0)
      return false;
  return true;
}

/// Distinct prime factors of m, ascending, by trial division.
inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0)
        m /= d;
    }
  }
  if (m > 1)
    out.push_back(m);
  return out;
}

/// Legendre symbol (a/p) for an odd prime p, by Euler's criterion:
/// a^((p-1)/2) mod p, mapped to {-1, 0, +1}.
inline int legendre_symbol(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0)
    return 0;
  const std::uint64_t e = powmod(a, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

} // namespace twoadic
