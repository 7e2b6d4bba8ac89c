#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "catcrypt/cat_map.hpp"
#include "catcrypt/image.hpp"

namespace catcrypt {

inline constexpr std::size_t kPlanes = 8;

// Eight M x M bit matrices; plane k holds bit k (0 = LSB) of every pixel.
// This is the reference representation of the permutation layer; the cipher
// itself runs on a fused scatter table built from the same maps.
class BitPlaneSet {
 public:
  BitPlaneSet() = default;
  explicit BitPlaneSet(std::size_t dim);

  static BitPlaneSet decompose(const Image& image);
  [[nodiscard]] Image reassemble() const;

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] bool bit(std::size_t plane, Point p) const { return planes_.at(plane).at(p.y * dim_ + p.x) != 0; }
  void set(std::size_t plane, Point p, bool value) { planes_.at(plane).at(p.y * dim_ + p.x) = value ? 1 : 0; }
  [[nodiscard]] std::size_t count_set() const;

  friend bool operator==(const BitPlaneSet&, const BitPlaneSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::array<std::vector<std::uint8_t>, kPlanes> planes_;
};

// Keyed step: every plane is moved by the same cat-map bijection, the bit at
// (x, y) landing on cat_map_point(x, y).
[[nodiscard]] BitPlaneSet permute_bits(const BitPlaneSet& planes, const CipherKey& key);
[[nodiscard]] BitPlaneSet unpermute_bits(const BitPlaneSet& planes, const CipherKey& key);

// `steps` iterations of the fixed Arnold map (u, v) -> (u + v, u + 2v) mod M.
[[nodiscard]] Point arnold_point(Point p, std::size_t dim, unsigned steps);
[[nodiscard]] Point arnold_inverse(Point p, std::size_t dim, unsigned steps);

// Static step that moves bits between planes. Plane k is first carried k times
// through the Arnold map to (X, Y), then the bit is written to plane
// (k + X + Y) mod 8 of that pixel. Plane 0 keeps its positions.
//
// Without this step the keyed permutation keeps every bit in its plane and
// the byte-XOR diffusion never crosses planes either, so a one-bit change
// could reach at most one eighth of the image.
[[nodiscard]] BitPlaneSet interleave_planes(const BitPlaneSet& planes);
[[nodiscard]] BitPlaneSet deinterleave_planes(const BitPlaneSet& planes);

}  // namespace catcrypt
