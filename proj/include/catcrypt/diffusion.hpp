#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace catcrypt {

inline constexpr std::size_t kBlockBytes = 16;

// Seed the shipped diffusion matrix was generated from.
inline constexpr std::uint64_t kDiffusionSeed = 0x5eedd1ff05160016ULL;

// 16 x 16 matrix over GF(2) acting on 16-byte blocks: output byte j is the XOR
// of every input byte i with entry (j, i) set. Each plane of bits is
// transformed independently, so the map is linear over GF(2).
class DiffusionMatrix {
 public:
  // Bit i of rows[j] is entry (j, i).
  using Rows = std::array<std::uint16_t, kBlockBytes>;

  constexpr DiffusionMatrix() = default;
  explicit constexpr DiffusionMatrix(const Rows& rows) : rows_(rows) {}

  static DiffusionMatrix identity();

  [[nodiscard]] bool at(std::size_t row, std::size_t col) const { return (rows_.at(row) >> col) & 1u; }
  void set(std::size_t row, std::size_t col, bool value);

  [[nodiscard]] const Rows& rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t column_weight(std::size_t col) const;

  friend bool operator==(const DiffusionMatrix&, const DiffusionMatrix&) = default;

 private:
  Rows rows_{};
};

[[nodiscard]] std::size_t gf2_rank(const DiffusionMatrix& m);

// Gauss-Jordan inverse over GF(2); nullopt when singular.
[[nodiscard]] std::optional<DiffusionMatrix> gf2_inverse(const DiffusionMatrix& m);

[[nodiscard]] DiffusionMatrix gf2_multiply(const DiffusionMatrix& lhs, const DiffusionMatrix& rhs);

// Complement of a seeded random permutation matrix. Dense in both directions:
// the inverse is the complement of the transposed permutation, so every
// column of the matrix and of its inverse has weight 15.
[[nodiscard]] DiffusionMatrix generate_diffusion_matrix(std::uint64_t seed);

// The static matrix used by the cipher for every key, image and round.
// Equal to generate_diffusion_matrix(kDiffusionSeed).
[[nodiscard]] DiffusionMatrix build_diffusion_matrix();

// Throws SizeMismatchError unless block.size() == 16.
[[nodiscard]] std::array<std::uint8_t, kBlockBytes> diffuse(std::span<const std::uint8_t> block,
                                                            const DiffusionMatrix& m);

// 16 lines of 16 '0'/'1' characters, row 0 first, column 0 leftmost.
[[nodiscard]] std::string format_matrix(const DiffusionMatrix& m);

// Column-mask form of a matrix for whole-image passes. Each input byte is
// broadcast across a 128-bit lane and masked by its column, two words at a time.
class DiffusionKernel {
 public:
  explicit DiffusionKernel(const DiffusionMatrix& m);

  void apply_block(std::span<const std::uint8_t, kBlockBytes> in, std::span<std::uint8_t, kBlockBytes> out) const;

  // In place over consecutive row-major 16-byte blocks. bytes.size() must be
  // a multiple of 16.
  void apply(std::span<std::uint8_t> bytes) const;

 private:
  std::array<std::uint64_t, kBlockBytes> lo_{};
  std::array<std::uint64_t, kBlockBytes> hi_{};
};

}  // namespace catcrypt
