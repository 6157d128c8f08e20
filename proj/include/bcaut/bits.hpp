#ifndef BCAUT_BITS_HPP
#define BCAUT_BITS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace bcaut {

/// A bitstring; position 0 is the leftmost (most significant) character.
using bitstring = std::vector<bool>;

/// ceil(log2(x)) for x >= 1, and 0 for x <= 1.
constexpr std::size_t ceil_log2(std::uint64_t x) noexcept {
  return x <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(x - 1));
}

/// Reads `width` bits MSB-first out of `value`.
inline bitstring to_bits(std::uint64_t value, std::size_t width) {
  bitstring out(width);
  for (std::size_t i = 0; i < width; ++i) {
    out[i] = ((value >> (width - 1 - i)) & 1U) != 0;
  }
  return out;
}

inline std::uint64_t to_value(const bitstring& bits) {
  if (bits.size() > 64) {
    throw range_error("bitstring wider than 64 bits");
  }
  std::uint64_t v = 0;
  for (bool b : bits) {
    v = (v << 1) | (b ? 1U : 0U);
  }
  return v;
}

/// Text form used by the file formats: "0101", or "-" for the empty string.
inline std::string code_to_string(std::uint64_t value, std::size_t width) {
  if (width == 0) {
    return "-";
  }
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1U) {
      s[i] = '1';
    }
  }
  return s;
}

inline std::string to_string(const bitstring& bits) {
  std::string s;
  for (bool b : bits) {
    s.push_back(b ? '1' : '0');
  }
  return s;
}

constexpr std::uint64_t low_mask(std::size_t width) noexcept {
  return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
}

}  // namespace bcaut

#endif
