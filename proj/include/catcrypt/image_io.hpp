#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <variant>
#include <vector>

#include "catcrypt/image.hpp"

namespace catcrypt {

// Binary PGM (P5) only. Header tokens may be separated by any whitespace and
// '#' comments run to end of line. Exactly one whitespace byte separates
// maxval from the payload.
//
// Errors: non-square images throw UnsupportedDimensionError, maxval != 255
// throws UnsupportedDepthError, anything else malformed throws ParseError.
// Filesystem failures throw IoError naming the path.
[[nodiscard]] Image read_pgm(const std::filesystem::path& path);

// Writes "P5\n<M> <M>\n255\n" followed by the M*M pixels.
void write_pgm(const Image& image, const std::filesystem::path& path);

// In-memory forms of the above, used by the file variants.
[[nodiscard]] Image parse_pgm(std::span<const std::uint8_t> bytes);
[[nodiscard]] std::vector<std::uint8_t> format_pgm(const Image& image);

// Ciphertext blobs are headerless: exactly dim * dim raw bytes.
[[nodiscard]] Image read_raw(const std::filesystem::path& path, std::size_t dim);
void write_raw(const Image& image, const std::filesystem::path& path);

namespace test_image {
struct AllZero {};
struct SingleLsb {
  std::size_t x = 0;
  std::size_t y = 0;
};
struct UniformRandom {
  std::uint64_t seed = 0;
};
}  // namespace test_image

using TestImageKind = std::variant<test_image::AllZero, test_image::SingleLsb, test_image::UniformRandom>;

// Synthetic plaintexts. UniformRandom fills bytes from std::mt19937_64(seed),
// eight bytes per draw, little-endian. Throws UnsupportedDimensionError for
// invalid `dim` and std::out_of_range for a SingleLsb pixel outside the grid.
[[nodiscard]] Image make_test_image(const TestImageKind& kind, std::size_t dim);

}  // namespace catcrypt
