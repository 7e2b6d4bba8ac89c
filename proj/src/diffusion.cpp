#include "catcrypt/diffusion.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

#include "catcrypt/errors.hpp"

namespace catcrypt {
namespace {

// generate_diffusion_matrix(kDiffusionSeed), frozen so the cipher never
// depends on generator behaviour at run time.
constexpr DiffusionMatrix::Rows kStaticRows = {
    0xffdf, 0xfff7, 0xfbff, 0xfffe, 0xdfff, 0xfeff, 0xffbf, 0x7fff,
    0xefff, 0xffef, 0xf7ff, 0xff7f, 0xfdff, 0xfffb, 0xfffd, 0xbfff,
};

// Unbiased draw in [0, bound) from raw 64-bit output.
std::uint64_t draw_below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v = gen();
  while (v >= limit) v = gen();
  return v % bound;
}

}  // namespace

DiffusionMatrix DiffusionMatrix::identity() {
  Rows rows{};
  for (std::size_t j = 0; j < kBlockBytes; ++j) rows[j] = static_cast<std::uint16_t>(1u << j);
  return DiffusionMatrix(rows);
}

void DiffusionMatrix::set(std::size_t row, std::size_t col, bool value) {
  auto& r = rows_.at(row);
  const auto bit = static_cast<std::uint16_t>(1u << col);
  r = value ? static_cast<std::uint16_t>(r | bit) : static_cast<std::uint16_t>(r & ~bit);
}

std::size_t DiffusionMatrix::column_weight(std::size_t col) const {
  std::size_t w = 0;
  for (auto r : rows_) w += (r >> col) & 1u;
  return w;
}

std::size_t gf2_rank(const DiffusionMatrix& m) {
  auto rows = m.rows();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < kBlockBytes && rank < kBlockBytes; ++col) {
    std::size_t pivot = rank;
    while (pivot < kBlockBytes && !((rows[pivot] >> col) & 1u)) ++pivot;
    if (pivot == kBlockBytes) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < kBlockBytes; ++i) {
      if (i != rank && ((rows[i] >> col) & 1u)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

std::optional<DiffusionMatrix> gf2_inverse(const DiffusionMatrix& m) {
  // Augmented [M | I] packed into 32-bit rows: low half M, high half I.
  std::array<std::uint32_t, kBlockBytes> aug{};
  for (std::size_t j = 0; j < kBlockBytes; ++j) aug[j] = m.rows()[j] | (1u << (16 + j));

  for (std::size_t col = 0; col < kBlockBytes; ++col) {
    std::size_t pivot = col;
    while (pivot < kBlockBytes && !((aug[pivot] >> col) & 1u)) ++pivot;
    if (pivot == kBlockBytes) return std::nullopt;
    std::swap(aug[col], aug[pivot]);
    for (std::size_t i = 0; i < kBlockBytes; ++i) {
      if (i != col && ((aug[i] >> col) & 1u)) aug[i] ^= aug[col];
    }
  }

  DiffusionMatrix::Rows inv{};
  for (std::size_t j = 0; j < kBlockBytes; ++j) inv[j] = static_cast<std::uint16_t>(aug[j] >> 16);
  return DiffusionMatrix(inv);
}

DiffusionMatrix gf2_multiply(const DiffusionMatrix& lhs, const DiffusionMatrix& rhs) {
  // Row j of the product is the XOR of rhs rows selected by row j of lhs.
  DiffusionMatrix::Rows out{};
  for (std::size_t j = 0; j < kBlockBytes; ++j) {
    std::uint16_t acc = 0;
    for (std::size_t k = 0; k < kBlockBytes; ++k) {
      if (lhs.at(j, k)) acc ^= rhs.rows()[k];
    }
    out[j] = acc;
  }
  return DiffusionMatrix(out);
}

DiffusionMatrix generate_diffusion_matrix(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::array<std::size_t, kBlockBytes> perm{};
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = kBlockBytes - 1; i > 0; --i) {
    std::swap(perm[i], perm[draw_below(gen, i + 1)]);
  }

  DiffusionMatrix::Rows rows{};
  for (std::size_t j = 0; j < kBlockBytes; ++j) {
    rows[j] = static_cast<std::uint16_t>(0xffffu ^ (1u << perm[j]));
  }
  DiffusionMatrix m(rows);
  // J + P is invertible for even block sizes; (J + P)(J + P^T) = I.
  if (gf2_rank(m) != kBlockBytes) throw std::logic_error("generated diffusion matrix is singular");
  return m;
}

DiffusionMatrix build_diffusion_matrix() { return DiffusionMatrix(kStaticRows); }

std::array<std::uint8_t, kBlockBytes> diffuse(std::span<const std::uint8_t> block, const DiffusionMatrix& m) {
  if (block.size() != kBlockBytes) {
    throw SizeMismatchError("diffusion block must be 16 bytes, got " + std::to_string(block.size()));
  }
  std::array<std::uint8_t, kBlockBytes> out{};
  for (std::size_t j = 0; j < kBlockBytes; ++j) {
    std::uint8_t acc = 0;
    for (std::size_t i = 0; i < kBlockBytes; ++i) {
      if (m.at(j, i)) acc ^= block[i];
    }
    out[j] = acc;
  }
  return out;
}

std::string format_matrix(const DiffusionMatrix& m) {
  std::string text;
  text.reserve(kBlockBytes * (kBlockBytes + 1));
  for (std::size_t j = 0; j < kBlockBytes; ++j) {
    for (std::size_t i = 0; i < kBlockBytes; ++i) text.push_back(m.at(j, i) ? '1' : '0');
    text.push_back('\n');
  }
  return text;
}

DiffusionKernel::DiffusionKernel(const DiffusionMatrix& m) {
  for (std::size_t i = 0; i < kBlockBytes; ++i) {
    for (std::size_t j = 0; j < kBlockBytes; ++j) {
      if (!m.at(j, i)) continue;
      if (j < 8) {
        lo_[i] |= std::uint64_t{0xff} << (8 * j);
      } else {
        hi_[i] |= std::uint64_t{0xff} << (8 * (j - 8));
      }
    }
  }
}

void DiffusionKernel::apply_block(std::span<const std::uint8_t, kBlockBytes> in,
                                  std::span<std::uint8_t, kBlockBytes> out) const {
  constexpr std::uint64_t kBroadcast = 0x0101010101010101ULL;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  for (std::size_t i = 0; i < kBlockBytes; ++i) {
    const std::uint64_t v = in[i] * kBroadcast;
    lo ^= v & lo_[i];
    hi ^= v & hi_[i];
  }
  for (std::size_t j = 0; j < 8; ++j) {
    out[j] = static_cast<std::uint8_t>(lo >> (8 * j));
    out[j + 8] = static_cast<std::uint8_t>(hi >> (8 * j));
  }
}

void DiffusionKernel::apply(std::span<std::uint8_t> bytes) const {
  if (bytes.size() % kBlockBytes != 0) {
    throw SizeMismatchError("byte count " + std::to_string(bytes.size()) + " is not a multiple of 16");
  }
  std::array<std::uint8_t, kBlockBytes> tmp{};
  for (std::size_t off = 0; off < bytes.size(); off += kBlockBytes) {
    auto block = bytes.subspan(off).first<kBlockBytes>();
    apply_block(block, tmp);
    std::copy(tmp.begin(), tmp.end(), block.begin());
  }
}

}  // namespace catcrypt
