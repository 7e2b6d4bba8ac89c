#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace catcrypt {

// Permutation key: the four cat-map parameters, each q = ceil(log2 M) bits
// and held reduced modulo M, plus the round count.
struct CipherKey {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t rx = 0;
  std::uint32_t ry = 0;
  unsigned rounds = 1;

  friend bool operator==(const CipherKey&, const CipherKey&) = default;
};

struct Point {
  std::size_t x = 0;
  std::size_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

// q = ceil(log2 M): bits per cat-map parameter.
[[nodiscard]] unsigned key_param_bits(std::size_t dim);

// Builds a key with every parameter reduced modulo `dim`.
[[nodiscard]] CipherKey make_key(std::size_t dim, std::uint64_t a, std::uint64_t b, std::uint64_t rx,
                                 std::uint64_t ry, unsigned rounds);

// x' = x + a*y + rx, y' = b*x + (a*b + 1)*y + ry, all mod M. The linear part
// has determinant 1, so this permutes the M x M grid for every key.
[[nodiscard]] Point cat_map_point(Point p, const CipherKey& key, std::size_t dim);

// Inverse: x = (ab+1)(x'-rx) - a(y'-ry), y = -b(x'-rx) + (y'-ry), mod M.
[[nodiscard]] Point cat_map_inverse(Point p, const CipherKey& key, std::size_t dim);

// Key bits as a '0'/'1' string: a || b || rx || ry, each q bits, most
// significant bit first. Length is exactly 4*q.
[[nodiscard]] std::string serialize_key_bits(const CipherKey& key, std::size_t dim);

// Same bits as q hex digits (4*q is always a multiple of 4).
[[nodiscard]] std::string key_to_hex(const CipherKey& key, std::size_t dim);

// Parses q hex digits. Throws KeyLengthError on the wrong digit count and
// InvalidKeyError on non-hex characters or rounds == 0.
[[nodiscard]] CipherKey key_from_hex(std::string_view hex, std::size_t dim, unsigned rounds);

}  // namespace catcrypt
