#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "catcrypt/cat_map.hpp"
#include "catcrypt/diffusion.hpp"
#include "catcrypt/image.hpp"

namespace catcrypt {

// Key-scheduled cipher for one image size. A round is
//   1. diffusion of every row-major 16-byte block by the static matrix,
//   2. the keyed cat-map permutation applied to all bit planes,
//   3. the static plane interleave.
// Steps 2 and 3 are fused into one table mapping each source bit to its
// destination. Decryption runs the inverse steps in reverse order.
//
// Immutable after construction; safe to share across threads.
class Cipher {
 public:
  // Throws UnsupportedDimensionError for invalid `dim` and InvalidKeyError
  // when key.rounds == 0.
  Cipher(std::size_t dim, const CipherKey& key);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const CipherKey& key() const noexcept { return key_; }

  [[nodiscard]] Image encrypt(const Image& plain) const;
  [[nodiscard]] Image decrypt(const Image& cipher) const;

  // Single rounds over a dim*dim byte buffer, for callers that sample every
  // intermediate round count. `scratch` is resized as needed.
  void encrypt_round(std::span<std::uint8_t> bytes, std::vector<std::uint8_t>& scratch) const;
  void decrypt_round(std::span<std::uint8_t> bytes, std::vector<std::uint8_t>& scratch) const;

 private:
  void check(const Image& image) const;

  std::size_t dim_;
  CipherKey key_;
  DiffusionKernel forward_;
  DiffusionKernel inverse_;
  // Entry k * dim^2 + p: destination of bit k of pixel p, as (pixel << 3) | plane.
  std::vector<std::uint32_t> scatter_;
};

// One-shot helpers; each builds a Cipher for image.dim().
[[nodiscard]] Image encrypt(const Image& plain, const CipherKey& key);
[[nodiscard]] Image decrypt(const Image& cipher, const CipherKey& key);

}  // namespace catcrypt
