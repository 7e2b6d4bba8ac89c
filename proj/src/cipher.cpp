#include "catcrypt/cipher.hpp"

#include <algorithm>
#include <string>

#include "catcrypt/bit_planes.hpp"
#include "catcrypt/errors.hpp"

namespace catcrypt {
namespace {

DiffusionMatrix inverse_of_static() {
  static const DiffusionMatrix inv = *gf2_inverse(build_diffusion_matrix());
  return inv;
}

}  // namespace

Cipher::Cipher(std::size_t dim, const CipherKey& key)
    : dim_(dim), key_(key), forward_(build_diffusion_matrix()), inverse_(inverse_of_static()) {
  validate_dim(dim);
  if (key.rounds == 0) throw InvalidKeyError("round count must be at least 1");

  const std::size_t n = dim * dim;
  scatter_.resize(kPlanes * n);
  for (std::size_t y = 0; y < dim; ++y) {
    for (std::size_t x = 0; x < dim; ++x) {
      // Arnold iterates are accumulated plane by plane instead of recomputed.
      Point dst = cat_map_point({x, y}, key_, dim);
      for (std::size_t k = 0; k < kPlanes; ++k) {
        if (k > 0) dst = arnold_point(dst, dim, 1);
        const auto plane = static_cast<std::uint32_t>((k + dst.x + dst.y) % kPlanes);
        scatter_[k * n + y * dim + x] = static_cast<std::uint32_t>((dst.y * dim + dst.x) << 3) | plane;
      }
    }
  }
}

void Cipher::check(const Image& image) const {
  if (image.dim() != dim_) {
    throw UnsupportedDimensionError("cipher keyed for M=" + std::to_string(dim_) + " given image with M=" +
                                    std::to_string(image.dim()));
  }
}

void Cipher::encrypt_round(std::span<std::uint8_t> bytes, std::vector<std::uint8_t>& scratch) const {
  const std::size_t n = dim_ * dim_;
  if (bytes.size() != n) throw SizeMismatchError("round buffer does not match image size");
  forward_.apply(bytes);

  scratch.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    const std::uint8_t v = bytes[p];
    if (v == 0) continue;
    for (std::size_t k = 0; k < kPlanes; ++k) {
      if ((v >> k) & 1u) {
        const std::uint32_t d = scatter_[k * n + p];
        scratch[d >> 3] = static_cast<std::uint8_t>(scratch[d >> 3] | (1u << (d & 7u)));
      }
    }
  }
  std::copy(scratch.begin(), scratch.end(), bytes.begin());
}

void Cipher::decrypt_round(std::span<std::uint8_t> bytes, std::vector<std::uint8_t>& scratch) const {
  const std::size_t n = dim_ * dim_;
  if (bytes.size() != n) throw SizeMismatchError("round buffer does not match image size");

  scratch.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    std::uint8_t v = 0;
    for (std::size_t k = 0; k < kPlanes; ++k) {
      const std::uint32_t d = scatter_[k * n + p];
      v = static_cast<std::uint8_t>(v | (((bytes[d >> 3] >> (d & 7u)) & 1u) << k));
    }
    scratch[p] = v;
  }
  std::copy(scratch.begin(), scratch.end(), bytes.begin());
  inverse_.apply(bytes);
}

Image Cipher::encrypt(const Image& plain) const {
  check(plain);
  Image out = plain;
  std::vector<std::uint8_t> scratch;
  for (unsigned r = 0; r < key_.rounds; ++r) encrypt_round(out.pixels(), scratch);
  return out;
}

Image Cipher::decrypt(const Image& cipher) const {
  check(cipher);
  Image out = cipher;
  std::vector<std::uint8_t> scratch;
  for (unsigned r = 0; r < key_.rounds; ++r) decrypt_round(out.pixels(), scratch);
  return out;
}

Image encrypt(const Image& plain, const CipherKey& key) {
  validate_dim(plain.dim());
  return Cipher(plain.dim(), key).encrypt(plain);
}

Image decrypt(const Image& cipher, const CipherKey& key) {
  validate_dim(cipher.dim());
  return Cipher(cipher.dim(), key).decrypt(cipher);
}

}  // namespace catcrypt
