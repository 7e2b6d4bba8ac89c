#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>

#include "catcrypt/image.hpp"

namespace catcrypt {

// Upper acceptance bound for chi-square uniformity over 256 gray levels
// (255 degrees of freedom, alpha = 0.05).
inline constexpr double kChiSquareThreshold = 293.0;

// PSNR of two identical images. Aggregation skips it instead of averaging it.
inline constexpr double kPsnrIdentical = std::numeric_limits<double>::infinity();

// Sliding SSIM window side.
inline constexpr std::size_t kSsimWindow = 8;

// 100 * (differing bits) / (8 * length). Throws SizeMismatchError on unequal
// lengths and EmptyInputError on empty input.
[[nodiscard]] double hamming_percent(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y);

struct Histogram256 {
  std::array<std::uint64_t, 256> counts{};
  std::uint64_t len = 0;

  static Histogram256 of(std::span<const std::uint8_t> bytes);
};

// sum over gray levels of (o_i - e)^2 / e with e = len / 256.
[[nodiscard]] double chi_square(const Histogram256& h);

// 10 * log10(255^2 / MSE); kPsnrIdentical when MSE is zero.
[[nodiscard]] double psnr(const Image& a, const Image& b);

// Mean SSIM over every 8 x 8 window at stride 1 with uniform weights,
// C1 = (0.01 * 255)^2 and C2 = (0.03 * 255)^2. Variances and covariance use
// the population (1/N) normalization. Throws UnsupportedDimensionError for
// M < 8.
[[nodiscard]] double ssim(const Image& a, const Image& b);

// One trial's measurements; which fields are filled depends on the experiment.
struct TrialRecord {
  std::optional<double> ps_percent;
  std::optional<double> diff_percent;
  std::optional<double> chi2;
  std::optional<double> psnr_db;
  std::optional<double> ssim;
};

}  // namespace catcrypt
