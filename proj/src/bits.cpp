#include "cvue/bits.hpp"

#include <stdexcept>

namespace cvue {

BitString random_bits(std::size_t length, Rng& rng) {
  BitString bits(length);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < length; ++i) {
    if (i % 64 == 0) word = rng();
    bits[i] = static_cast<std::uint8_t>(word & 1U);
    word >>= 1;
  }
  return bits;
}

std::size_t hamming_weight(const BitString& bits) {
  std::size_t w = 0;
  for (auto b : bits) w += b;
  return w;
}

std::size_t hamming_distance(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

std::string to_hex(const BitString& bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out((bits.size() + 3) / 4, '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw std::invalid_argument("to_hex: bit values must be 0 or 1");
    if (bits[i]) {
      auto& c = out[i / 4];
      const int nibble = (c >= 'a' ? c - 'a' + 10 : c - '0') | (8 >> (i % 4));
      c = kDigits[nibble];
    }
  }
  return out;
}

BitString from_hex(std::string_view hex, std::size_t length) {
  if (hex.size() != (length + 3) / 4) {
    throw std::invalid_argument("from_hex: expected " + std::to_string((length + 3) / 4) + " hex digits, got " +
                                std::to_string(hex.size()));
  }
  BitString bits(length);
  for (std::size_t k = 0; k < hex.size(); ++k) {
    const char c = hex[k];
    int v = 0;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      v = c - 'A' + 10;
    } else {
      throw std::invalid_argument(std::string("from_hex: invalid digit '") + c + "'");
    }
    for (int j = 0; j < 4; ++j) {
      const std::size_t i = 4 * k + static_cast<std::size_t>(j);
      const auto bit = static_cast<std::uint8_t>((v >> (3 - j)) & 1);
      if (i < length) {
        bits[i] = bit;
      } else if (bit) {
        throw std::invalid_argument("from_hex: nonzero padding bits");
      }
    }
  }
  return bits;
}

}  // namespace cvue
