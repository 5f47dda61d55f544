#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

#include "twoadic/binary_sequence.hpp"
#include "twoadic/errors.hpp"

namespace twoadic::correlation {

/// Periodic autocorrelation values of one sequence; entry tau holds C_S(tau).
struct CorrelationSpectrum {
  std::vector<std::int64_t> values;

  std::size_t period() const noexcept { return values.size(); }
  std::int64_t operator[](std::size_t tau) const { return values[tau]; }

  friend bool operator==(const CorrelationSpectrum& a, const CorrelationSpectrum& b) = default;
};

/// Coefficients of the sign polynomial: coeff i = (-1)^{s_i}, each +1 or -1.
struct SignPolynomial {
  std::vector<std::int32_t> coeffs;

  static SignPolynomial of(const BinarySequence& s) {
    SignPolynomial p;
    p.coeffs.reserve(s.period());
    for (std::uint8_t b : s.bits())
      p.coeffs.push_back(b ? -1 : 1);
    return p;
  }
};

namespace detail {

/// Bit-packed view of a period: `single` holds the N bits once (tail word
/// zero-padded), `doubled` holds two consecutive periods plus one spare word
/// so any N-bit window starting in the first period can be read word-wise.
struct PackedPeriod {
  std::vector<std::uint64_t> single;
  std::vector<std::uint64_t> doubled;
  std::size_t n = 0;
};

inline PackedPeriod pack(const BinarySequence& s) {
  PackedPeriod p;
  p.n = s.period();
  p.single.assign((p.n + 63) / 64, 0);
  p.doubled.assign((2 * p.n + 63) / 64 + 1, 0);
  for (std::size_t i = 0; i < p.n; ++i) {
    if (s.bit(i)) {
      p.single[i / 64] |= std::uint64_t{1} << (i % 64);
      p.doubled[i / 64] |= std::uint64_t{1} << (i % 64);
      const std::size_t j = i + p.n;
      p.doubled[j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  return p;
}

/// C_S(tau) = N - 2 * hamming(S, S cyclically shifted by tau); the shifted
/// period is the window of `doubled` starting at bit tau.
inline std::int64_t correlation_at(const PackedPeriod& p, std::size_t tau) {
  const std::size_t words = p.single.size();
  const std::size_t wq = tau / 64;
  const unsigned wr = tau % 64;
  std::int64_t distance = 0;
  for (std::size_t j = 0; j < words; ++j) {
    std::uint64_t w = p.doubled[wq + j] >> wr;
    if (wr)
      w |= p.doubled[wq + j + 1] << (64 - wr);
    w ^= p.single[j];
    if (j + 1 == words && p.n % 64)
      w &= (std::uint64_t{1} << (p.n % 64)) - 1;
    distance += std::popcount(w);
  }
  return static_cast<std::int64_t>(p.n) - 2 * distance;
}

} // namespace detail

/// C_S(tau) = sum over one period of (-1)^{s_{i+tau} + s_i}, index i+tau
/// taken mod N. Reference shift-sum form.
inline std::int64_t autocorrelation(const BinarySequence& s, std::int64_t tau) {
  const std::size_t n = s.period();
  if (tau < 0 || static_cast<std::size_t>(tau) >= n)
    throw error(errc::shift_range, "shift must be in [0, period), got " + std::to_string(tau));
  std::int64_t acc = 0;
  const std::size_t t = static_cast<std::size_t>(tau);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + t < n ? i + t : i + t - n;
    acc += (s.bit(i) == s.bit(j)) ? 1 : -1;
  }
  return acc;
}

inline CorrelationSpectrum autocorrelation_spectrum(const BinarySequence& s) {
  const auto packed = detail::pack(s);
  CorrelationSpectrum spectrum;
  spectrum.values.resize(s.period());
  for (std::size_t tau = 0; tau < s.period(); ++tau)
    spectrum.values[tau] = detail::correlation_at(packed, tau);
  return spectrum;
}

/// True iff C_S(tau) = -1 for every shift 0 < tau < N. Vacuously true for
/// period 1.
inline bool is_ideal_two_level(const BinarySequence& s) {
  const auto packed = detail::pack(s);
  for (std::size_t tau = 1; tau < s.period(); ++tau)
    if (detail::correlation_at(packed, tau) != -1)
      return false;
  return true;
}

/// Spectrum as the circular product P(x) * P(x^{-1}) mod x^N - 1, computed by
/// integer convolution of the sign polynomial with its index-reversed
/// counterpart. Coefficient tau equals C_S(tau); must match
/// autocorrelation_spectrum entry for entry.
inline CorrelationSpectrum spectrum_via_convolution(const BinarySequence& s) {
  const std::size_t n = s.period();
  const auto p = SignPolynomial::of(s);
  std::vector<std::int32_t> reversed(n);
  for (std::size_t k = 0; k < n; ++k)
    reversed[k] = p.coeffs[(n - k) % n];

  CorrelationSpectrum spectrum;
  spectrum.values.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t idx = i + k;
      if (idx >= n)
        idx -= n;
      spectrum.values[idx] += static_cast<std::int64_t>(p.coeffs[i]) * reversed[k];
    }
  }
  return spectrum;
}

} // namespace twoadic::correlation
