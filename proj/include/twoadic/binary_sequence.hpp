#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "twoadic/errors.hpp"

namespace twoadic {

/// One period of a periodic binary sequence. Immutable after construction;
/// the period is the number of stored bits and must be at least 1.
class BinarySequence {
public:
  explicit BinarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty())
      throw error(errc::format, "sequence period must be >= 1");
    for (std::uint8_t b : bits_)
      if (b > 1)
        throw error(errc::format, "sequence entries must be 0 or 1");
  }

  std::size_t period() const noexcept { return bits_.size(); }
  std::uint8_t bit(std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// Index-reversed copy: bit i of the result is bit (period-1-i) of *this.
  BinarySequence reversed() const {
    std::vector<std::uint8_t> r(bits_.rbegin(), bits_.rend());
    return BinarySequence(std::move(r));
  }

  /// Copy with every bit flipped.
  BinarySequence complemented() const {
    std::vector<std::uint8_t> r(bits_);
    for (auto& b : r)
      b ^= 1u;
    return BinarySequence(std::move(r));
  }

  friend bool operator==(const BinarySequence& a, const BinarySequence& b) = default;

private:
  std::vector<std::uint8_t> bits_;
};

/// Parses the sequence text format: one line of ASCII '0'/'1' characters
/// with an optional single trailing newline. Any other byte is a format
/// error reported with its offset.
inline BinarySequence parse_sequence_text(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c == '\n' && i + 1 == text.size()) {
      break;
    } else {
      std::ostringstream msg;
      msg << "invalid byte 0x" << std::hex << (static_cast<unsigned>(c) & 0xffu)
          << " at offset " << std::dec << i << " (expected '0', '1' or trailing newline)";
      throw error(errc::format, msg.str());
    }
  }
  if (bits.empty())
    throw error(errc::format, "empty sequence: period must be >= 1");
  return BinarySequence(std::move(bits));
}

inline std::string to_text(const BinarySequence& s) {
  std::string out;
  out.reserve(s.period() + 1);
  for (std::uint8_t b : s.bits())
    out.push_back(static_cast<char>('0' + b));
  out.push_back('\n');
  return out;
}

inline BinarySequence read_sequence_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw error(errc::io, "cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence_text(buf.str());
}

inline void write_sequence_file(const std::string& path, const BinarySequence& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw error(errc::io, "cannot open " + path + " for writing");
  out << to_text(s);
  if (!out)
    throw error(errc::io, "write to " + path + " failed");
}

} // namespace twoadic
