#include "catcrypt/cipher.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <string>

#include "catcrypt/bit_planes.hpp"
#include "catcrypt/errors.hpp"
#include "catcrypt/image_io.hpp"
#include "catcrypt/key_schedule.hpp"

namespace catcrypt {
namespace {

Image ramp16() {
  Image img(16);
  auto px = img.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) px[i] = static_cast<std::uint8_t>((i * 37 + 11) % 256);
  return img;
}

std::string hex(const Image& img) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (auto b : img.pixels()) {
    s += digits[b >> 4];
    s += digits[b & 15];
  }
  return s;
}

std::size_t popcount(const Image& img) {
  std::size_t n = 0;
  for (auto b : img.pixels()) n += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(b)));
  return n;
}

// One round built from the reference pieces instead of the fused table.
Image reference_round(const Image& in, const CipherKey& key) {
  Image diffused = in;
  const auto a = build_diffusion_matrix();
  auto px = diffused.pixels();
  for (std::size_t s = 0; s < px.size(); s += 16) {
    const auto d = diffuse(px.subspan(s, 16), a);
    std::copy(d.begin(), d.end(), px.begin() + static_cast<std::ptrdiff_t>(s));
  }
  return interleave_planes(permute_bits(BitPlaneSet::decompose(diffused), key)).reassemble();
}

// Values produced by a separate pure-Python implementation of the round.
TEST(Cipher, FrozenVectors) {
  const auto plain = ramp16();
  EXPECT_EQ(hex(encrypt(plain, make_key(16, 3, 5, 7, 2, 1))),
            "c947b68d9178d2e1f94ef6b8faac73b36e15b85eb86de9336fc79c1d6ce0a8b582110654106a94cd18344fc01c698680"
            "ebdd6f42cf8952e7deb77f678fbd5e3f2e852907a4dd13e305558955909443d6dd8a6cd87523d4c28d272f7e3cf3d08b"
            "074f2e99a156cc410a1cb8d52b72cdc50930c518a64fc6311b04c042b625563c50d5d1d72011004560dc91e24bc5a117"
            "6c51b047d88968306d8394040c0429b68e19177474ab07cb143c5ee078a81586f9f96f46ef5957adcc937f63af6d5b75"
            "9fecfba33d4f74b9b43c5bf10906248cb55eeddbf764dcd3e5f3ae7dbeb4d89a236e3c9ca954c5512e3daad02370c4d5"
            "e9e1c354b87be655fbd5c60ea8117658");
  EXPECT_EQ(hex(encrypt(plain, make_key(16, 3, 5, 7, 2, 3))),
            "f867cc5ef1a92b5f57792c3d6ef7c2db075478c73f1bb2a7f860350d6ef18d413a54db35266df586f36fa300a8cbfb61"
            "08fe4c2f22d6758ee8316fe3ccb405e3bf1fcd784f355494c5697aa8e13aa07091c671e8fe4ca4e4c0b56bfcdcea15a1"
            "f3db87bdca7155a60b621154eb6c18848eedd9ba0c0350e2cd746f3811af359dcb7c39208639837ed290e53219cd6f5a"
            "1fc9c0296a53efcd7f7d7900078a08354c05cb51f34950784813fe235f4d99003f929b8a951346e392f7daa096b0bba1"
            "35517d2571d7ed60540e3299be8db4330bcaf1b17e2bb2d3240bc82324fc403515c784c34525ce50d4e74c651af5c757"
            "cf350bd9977f3caca12db04c9733eb7b");
}

TEST(Cipher, FusedTableMatchesReferencePath) {
  std::mt19937_64 gen(17);
  for (std::size_t m : {4u, 16u, 32u}) {
    for (int t = 0; t < 10; ++t) {
      const auto key = make_key(m, gen(), gen(), gen(), gen(), 1);
      const auto plain = make_test_image(test_image::UniformRandom{gen()}, m);
      EXPECT_EQ(encrypt(plain, key), reference_round(plain, key));
    }
  }
  Image lsb(16);
  lsb.at(5, 9) = 1;
  const auto key = make_key(16, 3, 5, 7, 2, 1);
  EXPECT_EQ(encrypt(lsb, key), reference_round(lsb, key));
}

TEST(Cipher, RoundTrip) {
  std::mt19937_64 gen(23);
  for (std::size_t m : {4u, 8u, 16u, 60u, 64u}) {
    for (unsigned r = 1; r <= 8; ++r) {
      const auto key = make_key(m, gen(), gen(), gen(), gen(), r);
      const auto plain = make_test_image(test_image::UniformRandom{gen()}, m);
      const auto c = encrypt(plain, key);
      EXPECT_EQ(decrypt(c, key), plain) << "M=" << m << " r=" << r;
    }
  }
}

TEST(Cipher, ZeroImageIsFixedPoint) {
  const Image zero(64);
  for (unsigned r : {1u, 6u}) EXPECT_EQ(encrypt(zero, make_key(64, 9, 4, 1, 30, r)), zero);
}

TEST(Cipher, LinearOverXor) {
  const auto key = make_key(32, 11, 6, 3, 8, 4);
  const auto x = make_test_image(test_image::UniformRandom{1}, 32);
  const auto y = make_test_image(test_image::UniformRandom{2}, 32);
  Image xy(32);
  for (std::size_t i = 0; i < xy.size(); ++i) xy.pixels()[i] = x.pixels()[i] ^ y.pixels()[i];
  const auto cx = encrypt(x, key), cy = encrypt(y, key), cxy = encrypt(xy, key);
  for (std::size_t i = 0; i < xy.size(); ++i) ASSERT_EQ(cxy.pixels()[i], cx.pixels()[i] ^ cy.pixels()[i]);
}

TEST(Cipher, OneRoundSpreadsSingleBitToFifteen) {
  Image lsb(64);
  lsb.at(10, 20) = 1;
  EXPECT_EQ(popcount(encrypt(lsb, make_key(64, 5, 7, 1, 2, 1))), 15u);
}

TEST(Cipher, SixRoundsReachHalfTheBits) {
  Image lsb(256);
  lsb.at(77, 140) = 1;
  const auto c = encrypt(lsb, derive_trial_key(1, 0, 256, 6));
  const double ratio = static_cast<double>(popcount(c)) / (8.0 * 65536.0);
  EXPECT_NEAR(ratio, 0.5, 0.01);
}

TEST(Cipher, Errors) {
  EXPECT_THROW(Cipher(18, make_key(18, 1, 1, 0, 0, 1)), UnsupportedDimensionError);
  EXPECT_THROW(Cipher(16, make_key(16, 1, 1, 0, 0, 0)), InvalidKeyError);
  const Cipher c(16, make_key(16, 1, 1, 0, 0, 1));
  EXPECT_THROW((void)c.encrypt(Image(32)), UnsupportedDimensionError);
  EXPECT_THROW((void)c.decrypt(Image(8)), UnsupportedDimensionError);
}

TEST(Cipher, RoundsCompose) {
  const auto k2 = make_key(16, 3, 5, 7, 2, 2);
  const auto k1 = make_key(16, 3, 5, 7, 2, 1);
  const auto plain = ramp16();
  EXPECT_EQ(encrypt(plain, k2), encrypt(encrypt(plain, k1), k1));
}

}  // namespace
}  // namespace catcrypt
