#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "twoadic/binary_sequence.hpp"

namespace test_util {

inline twoadic::BinarySequence random_sequence(std::mt19937& rng, std::size_t min_period,
                                               std::size_t max_period) {
  std::uniform_int_distribution<std::size_t> period_dist(min_period, max_period);
  std::vector<std::uint8_t> bits(period_dist(rng));
  for (auto& b : bits)
    b = static_cast<std::uint8_t>(rng() & 1u);
  return twoadic::BinarySequence(std::move(bits));
}

inline twoadic::BinarySequence from_string(const char* s) {
  return twoadic::parse_sequence_text(s);
}

} // namespace test_util
