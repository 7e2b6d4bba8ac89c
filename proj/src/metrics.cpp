#include "catcrypt/metrics.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "catcrypt/errors.hpp"

namespace catcrypt {
namespace {

void require_same_shape(const Image& a, const Image& b) {
  if (a.dim() != b.dim()) {
    throw SizeMismatchError("image sizes differ: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

// Summed-area table with a zero border row and column.
std::vector<std::int64_t> integral(std::size_t m, auto&& value) {
  std::vector<std::int64_t> t((m + 1) * (m + 1), 0);
  for (std::size_t y = 0; y < m; ++y) {
    std::int64_t row = 0;
    for (std::size_t x = 0; x < m; ++x) {
      row += value(y * m + x);
      t[(y + 1) * (m + 1) + x + 1] = t[y * (m + 1) + x + 1] + row;
    }
  }
  return t;
}

std::int64_t window_sum(const std::vector<std::int64_t>& t, std::size_t m, std::size_t x, std::size_t y,
                        std::size_t w) {
  const std::size_t s = m + 1;
  return t[(y + w) * s + x + w] - t[y * s + x + w] - t[(y + w) * s + x] + t[y * s + x];
}

}  // namespace

double hamming_percent(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
  if (x.size() != y.size()) {
    throw SizeMismatchError("hamming distance over sequences of length " + std::to_string(x.size()) + " and " +
                            std::to_string(y.size()));
  }
  if (x.empty()) throw EmptyInputError("hamming distance over empty sequences");
  std::uint64_t diff = 0;
  for (std::size_t i = 0; i < x.size(); ++i) diff += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(x[i] ^ y[i])));
  return 100.0 * static_cast<double>(diff) / (8.0 * static_cast<double>(x.size()));
}

Histogram256 Histogram256::of(std::span<const std::uint8_t> bytes) {
  Histogram256 h;
  for (auto b : bytes) ++h.counts[b];
  h.len = bytes.size();
  return h;
}

double chi_square(const Histogram256& h) {
  if (h.len == 0) throw EmptyInputError("chi-square of an empty histogram");
  const double e = static_cast<double>(h.len) / 256.0;
  double chi2 = 0.0;
  for (auto o : h.counts) {
    const double d = static_cast<double>(o) - e;
    chi2 += d * d / e;
  }
  return chi2;
}

double psnr(const Image& a, const Image& b) {
  require_same_shape(a, b);
  if (a.empty()) throw EmptyInputError("PSNR of empty images");
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  std::uint64_t sse = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const int d = static_cast<int>(pa[i]) - static_cast<int>(pb[i]);
    sse += static_cast<std::uint64_t>(d * d);
  }
  if (sse == 0) return kPsnrIdentical;
  const double mse = static_cast<double>(sse) / static_cast<double>(pa.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double ssim(const Image& a, const Image& b) {
  require_same_shape(a, b);
  const std::size_t m = a.dim();
  if (m < kSsimWindow) {
    throw UnsupportedDimensionError("SSIM needs M >= 8, got " + std::to_string(m));
  }
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  const auto sa = integral(m, [&](std::size_t i) { return std::int64_t{pa[i]}; });
  const auto sb = integral(m, [&](std::size_t i) { return std::int64_t{pb[i]}; });
  const auto saa = integral(m, [&](std::size_t i) { return std::int64_t{pa[i]} * pa[i]; });
  const auto sbb = integral(m, [&](std::size_t i) { return std::int64_t{pb[i]} * pb[i]; });
  const auto sab = integral(m, [&](std::size_t i) { return std::int64_t{pa[i]} * pb[i]; });

  constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
  constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);
  constexpr double kN = static_cast<double>(kSsimWindow * kSsimWindow);

  const std::size_t windows = m - kSsimWindow + 1;
  double total = 0.0;
  for (std::size_t y = 0; y < windows; ++y) {
    for (std::size_t x = 0; x < windows; ++x) {
      const double mu_a = static_cast<double>(window_sum(sa, m, x, y, kSsimWindow)) / kN;
      const double mu_b = static_cast<double>(window_sum(sb, m, x, y, kSsimWindow)) / kN;
      const double var_a = static_cast<double>(window_sum(saa, m, x, y, kSsimWindow)) / kN - mu_a * mu_a;
      const double var_b = static_cast<double>(window_sum(sbb, m, x, y, kSsimWindow)) / kN - mu_b * mu_b;
      const double cov = static_cast<double>(window_sum(sab, m, x, y, kSsimWindow)) / kN - mu_a * mu_b;
      total += ((2.0 * mu_a * mu_b + kC1) * (2.0 * cov + kC2)) /
               ((mu_a * mu_a + mu_b * mu_b + kC1) * (var_a + var_b + kC2));
    }
  }
  return total / static_cast<double>(windows * windows);
}

}  // namespace catcrypt
