#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace catcrypt {

// Square M x M grid of 8-bit grayscale pixels stored row-major. Pixel (x, y)
// is column x of row y. M is at least 4 and a multiple of 4, so the byte
// count always splits into whole 16-byte diffusion blocks.
class Image {
 public:
  Image() = default;

  // All-zero image. Throws UnsupportedDimensionError for invalid M.
  explicit Image(std::size_t dim);

  // Takes ownership of `pixels`, which must hold exactly dim * dim bytes.
  Image(std::size_t dim, std::vector<std::uint8_t> pixels);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t size() const noexcept { return pixels_.size(); }
  [[nodiscard]] bool empty() const noexcept { return pixels_.empty(); }

  [[nodiscard]] std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  [[nodiscard]] std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  [[nodiscard]] std::uint8_t at(std::size_t x, std::size_t y) const { return pixels_.at(y * dim_ + x); }
  std::uint8_t& at(std::size_t x, std::size_t y) { return pixels_.at(y * dim_ + x); }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// Throws UnsupportedDimensionError unless dim >= 4 and dim % 4 == 0.
void validate_dim(std::size_t dim);

[[nodiscard]] bool is_valid_dim(std::size_t dim) noexcept;

}  // namespace catcrypt
