#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "twoadic/errors.hpp"
#include "twoadic/numtheory.hpp"

namespace twoadic::sequences {

/// Polynomial over GF(2) stored as a coefficient bitmask, bit j = coefficient
/// of x^j. The highest set bit defines the degree, so every representable
/// polynomial is monic.
struct Gf2Polynomial {
  std::uint64_t mask = 0;

  explicit Gf2Polynomial(std::uint64_t m) : mask(m) {
    if (mask == 0)
      throw error(errc::invalid_polynomial, "zero polynomial");
  }

  int degree() const noexcept { return 63 - std::countl_zero(mask); }
  bool coefficient(int j) const noexcept { return (mask >> j) & 1u; }

  std::string to_string() const {
    std::string out;
    for (int j = degree(); j >= 0; --j) {
      if (!coefficient(j))
        continue;
      if (!out.empty())
        out += " + ";
      if (j == 0)
        out += "1";
      else if (j == 1)
        out += "x";
      else
        out += "x^" + std::to_string(j);
    }
    return out;
  }

  friend bool operator==(Gf2Polynomial a, Gf2Polynomial b) = default;
};

namespace detail {

/// a*b mod f in GF(2)[x], for deg f = n <= 32. Operands are reduced
/// residues (degree < n); reduction is interleaved so nothing exceeds
/// n+1 bits.
inline std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f, int n) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1u)
      r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> n) & 1u)
      a ^= f;
  }
  return r;
}

inline std::uint64_t gf2_powmod_x(std::uint64_t exp, std::uint64_t f, int n) {
  std::uint64_t result = 1;
  std::uint64_t base = (n == 1) ? (2u ^ f) : 2u; // x reduced mod f
  while (exp) {
    if (exp & 1u)
      result = gf2_mulmod(result, base, f, n);
    base = gf2_mulmod(base, base, f, n);
    exp >>= 1;
  }
  return result;
}

} // namespace detail

/// True iff poly is primitive over GF(2): x has multiplicative order exactly
/// 2^n - 1 in GF(2)[x]/(poly). Checked as x^(2^n-1) = 1 together with
/// x^((2^n-1)/r) != 1 for every prime divisor r of 2^n - 1.
inline bool is_primitive(Gf2Polynomial poly) {
  const int n = poly.degree();
  if (n < 1 || n > 32)
    throw error(errc::unsupported_degree, "degree must be in [1, 32], got " + std::to_string(n));
  if (!poly.coefficient(0))
    throw error(errc::invalid_polynomial, "constant term must be 1: " + poly.to_string());

  const std::uint64_t order = (std::uint64_t{1} << n) - 1;
  if (detail::gf2_powmod_x(order, poly.mask, n) != 1)
    return false;
  for (std::uint64_t r : distinct_prime_factors(order))
    if (detail::gf2_powmod_x(order / r, poly.mask, n) == 1)
      return false;
  return true;
}

/// The primitive polynomial of degree n with the smallest coefficient
/// bitmask. Deterministic; every degree in [1, 32] has one.
inline Gf2Polynomial find_primitive_poly(int n) {
  if (n < 1 || n > 32)
    throw error(errc::unsupported_degree, "degree must be in [1, 32], got " + std::to_string(n));
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t low = 1; low < top; low += 2) {
    Gf2Polynomial candidate(top | low);
    if (is_primitive(candidate))
      return candidate;
  }
  throw error(errc::internal, "no primitive polynomial of degree " + std::to_string(n));
}

} // namespace twoadic::sequences
