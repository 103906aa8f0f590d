#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cvue/random.hpp"

namespace cvue {

/// One bit per element, each 0 or 1.
using BitString = std::vector<std::uint8_t>;

BitString random_bits(std::size_t length, Rng& rng);

std::size_t hamming_weight(const BitString& bits);
std::size_t hamming_distance(const BitString& a, const BitString& b);

/// Hex with the first bit as the most significant bit of the first nibble;
/// the last nibble is zero-padded.
std::string to_hex(const BitString& bits);
BitString from_hex(std::string_view hex, std::size_t length);

}  // namespace cvue
