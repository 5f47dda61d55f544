#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twoadic/binary_sequence.hpp"
#include "twoadic/correlation.hpp"
#include "twoadic/errors.hpp"
#include "twoadic/gf2poly.hpp"
#include "twoadic/numtheory.hpp"

namespace twoadic::sequences {

enum class Family { msequence, legendre, twinprime };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::msequence: return "msequence";
    case Family::legendre: return "legendre";
    default: return "twinprime";
  }
}

inline std::optional<Family> family_from_name(std::string_view name) {
  if (name == "msequence")
    return Family::msequence;
  if (name == "legendre")
    return Family::legendre;
  if (name == "twinprime")
    return Family::twinprime;
  return std::nullopt;
}

/// Which sequence to build: n for msequence, prime p for legendre, the
/// smaller twin prime p for twinprime.
struct FamilySpec {
  Family family;
  std::uint32_t parameter;

  friend bool operator==(FamilySpec a, FamilySpec b) = default;
};

inline constexpr std::uint32_t default_prime_bound = 100000;
inline constexpr std::uint32_t default_twin_period_bound = 100000;

/// One period (length 2^n - 1) of the LFSR with feedback recurrence
/// s_{i+n} = sum_{j<n} c_j s_{i+j} over GF(2), c_j the low coefficients of
/// poly. The initial state bitmask supplies s_0..s_{n-1}, bit j = s_j.
inline BinarySequence gen_msequence(Gf2Polynomial poly, std::uint64_t init_state) {
  if (!is_primitive(poly))
    throw error(errc::not_primitive, "feedback polynomial is not primitive: " + poly.to_string());
  const int n = poly.degree();
  if (init_state == 0 || (init_state >> n) != 0)
    throw error(errc::degenerate_state, "initial state must be a nonzero " + std::to_string(n) + "-bit value");

  const std::uint64_t period = (std::uint64_t{1} << n) - 1;
  const std::uint64_t taps = poly.mask ^ (std::uint64_t{1} << n); // low coefficients c_0..c_{n-1}
  std::vector<std::uint8_t> bits(period);
  std::uint64_t state = init_state; // bit k holds s_{i+k}
  for (std::uint64_t i = 0; i < period; ++i) {
    bits[i] = static_cast<std::uint8_t>(state & 1u);
    const std::uint64_t next = std::popcount(state & taps) & 1u;
    state = (state >> 1) | (next << (n - 1));
  }
  return BinarySequence(std::move(bits));
}

/// Legendre sequence of period p for a prime p = 3 (mod 4), with the
/// convention s_0 = 0, quadratic residues -> 0, nonresidues -> 1.
inline BinarySequence gen_legendre(std::uint32_t p, std::uint32_t bound = default_prime_bound) {
  if (p > bound)
    throw error(errc::bound_exceeded,
                "p = " + std::to_string(p) + " exceeds bound " + std::to_string(bound));
  if (!is_prime(p))
    throw error(errc::not_prime, "p must be prime, got " + std::to_string(p));
  if (p % 4 != 3)
    throw error(errc::wrong_residue_class, "p must be = 3 (mod 4), got " + std::to_string(p));

  std::vector<std::uint8_t> bits(p, 0);
  for (std::uint32_t i = 1; i < p; ++i)
    bits[i] = legendre_symbol(i, p) == 1 ? 0 : 1;
  return BinarySequence(std::move(bits));
}

/// Twin-prime (Whiteman generalized cyclotomic) sequence of period
/// N = p(p+2). For i coprime to N the bit encodes the sign of the product of
/// the two Legendre symbols; multiples of p+2 map to 0 and the remaining
/// multiples of p map to 1. The two-level property is asserted after
/// construction unless verify_ideal is off.
inline BinarySequence gen_twin_prime(std::uint32_t p, bool verify_ideal = true,
                                     std::uint32_t period_bound = default_twin_period_bound) {
  const std::uint64_t q = std::uint64_t{p} + 2;
  if (!is_prime(p) || !is_prime(q))
    throw error(errc::not_twin_prime,
                "p and p+2 must both be prime, got " + std::to_string(p) + " and " + std::to_string(q));
  const std::uint64_t period = p * q;
  if (period > period_bound)
    throw error(errc::bound_exceeded, "period p(p+2) = " + std::to_string(period) +
                                          " exceeds bound " + std::to_string(period_bound));

  std::vector<std::uint8_t> bits(period);
  for (std::uint64_t i = 0; i < period; ++i) {
    if (i % q == 0)
      bits[i] = 0;
    else if (i % p == 0)
      bits[i] = 1;
    else
      bits[i] = legendre_symbol(i % p, p) * legendre_symbol(i % q, q) == 1 ? 0 : 1;
  }
  BinarySequence s(std::move(bits));
  if (verify_ideal && !correlation::is_ideal_two_level(s))
    throw error(errc::internal,
                "generated twin-prime sequence failed the two-level autocorrelation gate");
  return s;
}

/// Canonical family member for a spec: m-sequences use the lexicographically
/// smallest primitive polynomial and the initial state s_0 = 1, s_1 = ... =
/// s_{n-1} = 0 (any nonzero state is a cyclic shift with the same spectrum
/// and complexity).
inline BinarySequence generate(FamilySpec spec) {
  switch (spec.family) {
    case Family::msequence: {
      if (spec.parameter < 1 || spec.parameter > 32)
        throw error(errc::unsupported_degree,
                    "degree must be in [1, 32], got " + std::to_string(spec.parameter));
      return gen_msequence(find_primitive_poly(static_cast<int>(spec.parameter)), 1);
    }
    case Family::legendre:
      return gen_legendre(spec.parameter);
    default:
      return gen_twin_prime(spec.parameter);
  }
}

} // namespace twoadic::sequences
