#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twoadic/binary_sequence.hpp"
#include "twoadic/correlation.hpp"
#include "twoadic/errors.hpp"

namespace twoadic::adic {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced fraction p/q equal to S(2) / (2^N - 1), with gcd(p, q) = 1 and
/// 0 <= p <= q.
struct RationalApprox {
  BigInt p;
  BigInt q;
};

enum class Verdict : std::uint8_t {
  unset,      // not computed (report built without verification)
  holds,
  fails,
  degenerate, // N = 1: modulus 1 makes the congruence vacuous
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "true";
    case Verdict::fails: return "false";
    case Verdict::degenerate: return "degenerate";
    default: return "unset";
  }
}

/// Everything the analyzer knows about one sequence: the exact reduced
/// fraction, its log2 denominator, the maximality flag, and (when built with
/// verification on) the congruence verdicts.
struct ComplexityReport {
  std::size_t period = 0;
  BigInt s2;
  RationalApprox fraction;
  double phi = 0.0;   // log2 of fraction.q; the exact q is authoritative
  bool is_max = false; // q = 2^N - 1 exactly
  bool verified = false;
  Verdict theorem1 = Verdict::unset;
  Verdict product_congruence = Verdict::unset;
  Verdict gcd_claim = Verdict::unset;
};

namespace detail {

inline BigInt bigint_from_bits(const std::vector<std::uint8_t>& bits) {
  const std::size_t words = (bits.size() + 63) / 64;
  std::vector<std::uint64_t> packed(words, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i])
      packed[i / 64] |= std::uint64_t{1} << (i % 64);
  BigInt r = 0;
  for (std::size_t j = words; j-- > 0;) {
    r <<= 64;
    r |= packed[j];
  }
  return r;
}

inline BigInt mod_norm(BigInt x, const BigInt& m) {
  x %= m;
  if (x < 0)
    x += m;
  return x;
}

inline void require_nondegenerate_modulus(std::size_t n) {
  if (n < 2)
    throw error(errc::degenerate_modulus,
                "period 1 gives modulus 1; every congruence is vacuous");
}

inline void require_ideal(const BinarySequence& s) {
  if (!correlation::is_ideal_two_level(s))
    throw error(errc::not_ideal, "sequence does not have ideal two-level autocorrelation");
}

} // namespace detail

inline BigInt modulus_for(std::size_t n) { return (BigInt(1) << n) - 1; }

/// S(2) = sum of s_i * 2^i over one period; lies in [0, 2^N - 1].
inline BigInt evaluate_s2(const BinarySequence& s) {
  return detail::bigint_from_bits(s.bits());
}

/// Base-2 logarithm of a positive big integer, correct to double precision.
inline double log2_of(const BigInt& q) {
  if (q <= 0)
    throw error(errc::internal, "log2 of a non-positive value");
  const auto b = boost::multiprecision::msb(q);
  if (b <= 52)
    return std::log2(q.convert_to<double>());
  const BigInt top = q >> (b - 52);
  return std::log2(top.convert_to<double>()) + static_cast<double>(b - 52);
}

/// P(2) for the sign polynomial P(x) = sum (-1)^{s_i} x^i, assembled from the
/// positive and negative bit masks. Cross-checked against the closed form
/// 2^N - 1 - 2*S(2) before returning.
inline BigInt eval_p2(const BinarySequence& s) {
  const BigInt positive = detail::bigint_from_bits(s.complemented().bits());
  const BigInt negative = evaluate_s2(s);
  const BigInt direct = positive - negative;
  if (direct != modulus_for(s.period()) - 2 * negative)
    throw error(errc::internal, "sign-sum and closed-form P(2) disagree");
  return direct;
}

/// The inverse of 2 modulo 2^N - 1, which is 2^(N-1).
inline BigInt inverse_of_two(std::size_t n) {
  detail::require_nondegenerate_modulus(n);
  return BigInt(1) << (n - 1);
}

/// P(2^{-1}) mod 2^N - 1: each 2^{-i} is realized as 2^{(N-i) mod N}; the
/// result is the canonical residue in [0, 2^N - 2].
inline BigInt eval_p_at_inverse(const BinarySequence& s) {
  const std::size_t n = s.period();
  detail::require_nondegenerate_modulus(n);
  std::vector<std::uint8_t> positive(n, 0);
  std::vector<std::uint8_t> negative(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t e = (n - i) % n;
    (s.bit(i) ? negative : positive)[e] = 1;
  }
  return detail::mod_norm(detail::bigint_from_bits(positive) - detail::bigint_from_bits(negative),
                          modulus_for(n));
}

enum class Strict : bool { off = false, on = true };

/// True iff P(2) * P(2^{-1}) = N + 1 (mod 2^N - 1). With Strict::on the
/// input must already have ideal two-level autocorrelation.
inline bool verify_product_congruence(const BinarySequence& s, Strict strict = Strict::off) {
  const std::size_t n = s.period();
  detail::require_nondegenerate_modulus(n);
  if (strict == Strict::on)
    detail::require_ideal(s);
  const BigInt m = modulus_for(n);
  const BigInt lhs = detail::mod_norm(eval_p2(s) * eval_p_at_inverse(s), m);
  const BigInt rhs = detail::mod_norm(BigInt(n) + 1, m);
  return lhs == rhs;
}

/// True iff S(2) * P(2^{-1}) = -(N+1)/2 (mod 2^N - 1). The division by 2 is
/// multiplication by 2^(N-1), the exact modular inverse; both sides are
/// normalized to [0, 2^N - 2] before comparison.
inline bool verify_s2_congruence(const BinarySequence& s, Strict strict = Strict::off) {
  const std::size_t n = s.period();
  detail::require_nondegenerate_modulus(n);
  if (strict == Strict::on)
    detail::require_ideal(s);
  const BigInt m = modulus_for(n);
  const BigInt lhs = detail::mod_norm(evaluate_s2(s) * eval_p_at_inverse(s), m);
  const BigInt rhs = detail::mod_norm(-(BigInt(n) + 1) * inverse_of_two(n), m);
  return lhs == rhs;
}

/// True iff gcd(N + 1, 2^N - 1) = 1, by exact big-integer gcd.
inline bool verify_gcd_claim(std::size_t n) {
  return boost::multiprecision::gcd(BigInt(n) + 1, modulus_for(n)) == 1;
}

/// Reduces S(2) / (2^N - 1) to lowest terms and reports the 2-adic
/// complexity log2(q). With verify on, also populates the congruence
/// verdicts (degenerate for period 1, where the modulus is 1).
inline ComplexityReport two_adic_complexity(const BinarySequence& s, bool verify = false) {
  ComplexityReport report;
  report.period = s.period();
  report.s2 = evaluate_s2(s);
  const BigInt m = modulus_for(report.period);
  const BigInt g = boost::multiprecision::gcd(report.s2, m);
  report.fraction.q = m / g;
  report.fraction.p = report.s2 / g;
  report.phi = log2_of(report.fraction.q);
  report.is_max = (report.fraction.q == m);
  report.verified = verify;
  if (verify) {
    report.gcd_claim = verify_gcd_claim(report.period) ? Verdict::holds : Verdict::fails;
    if (report.period < 2) {
      report.theorem1 = Verdict::degenerate;
      report.product_congruence = Verdict::degenerate;
    } else {
      report.theorem1 = verify_s2_congruence(s) ? Verdict::holds : Verdict::fails;
      report.product_congruence =
          verify_product_congruence(s) ? Verdict::holds : Verdict::fails;
    }
  }
  return report;
}

/// min(phi(S), phi(S reversed)), decided by exact comparison of the two
/// reduced denominators.
inline double symmetric_two_adic_complexity(const BinarySequence& s) {
  const ComplexityReport forward = two_adic_complexity(s);
  const ComplexityReport backward = two_adic_complexity(s.reversed());
  return forward.fraction.q <= backward.fraction.q ? forward.phi : backward.phi;
}

} // namespace twoadic::adic
