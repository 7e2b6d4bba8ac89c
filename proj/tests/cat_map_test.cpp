#include "catcrypt/cat_map.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "catcrypt/errors.hpp"

namespace catcrypt {
namespace {

CipherKey random_key(std::mt19937_64& gen, std::size_t dim) {
  return make_key(dim, gen(), gen(), gen(), gen(), 1);
}

TEST(CatMap, ParamBits) {
  EXPECT_EQ(key_param_bits(4), 2u);
  EXPECT_EQ(key_param_bits(16), 4u);
  EXPECT_EQ(key_param_bits(196), 8u);
  EXPECT_EQ(key_param_bits(256), 8u);
  EXPECT_EQ(key_param_bits(300), 9u);
  EXPECT_EQ(key_param_bits(512), 9u);
}

TEST(CatMap, ExhaustiveBijection) {
  std::mt19937_64 gen(42);
  for (std::size_t m : {4u, 8u, 16u, 32u, 64u}) {
    for (int t = 0; t < 100; ++t) {
      const auto key = random_key(gen, m);
      std::vector<bool> hit(m * m, false);
      for (std::size_t y = 0; y < m; ++y) {
        for (std::size_t x = 0; x < m; ++x) {
          const auto p = cat_map_point({x, y}, key, m);
          ASSERT_LT(p.x, m);
          ASSERT_LT(p.y, m);
          ASSERT_FALSE(hit[p.y * m + p.x]) << "collision at M=" << m;
          hit[p.y * m + p.x] = true;
          ASSERT_EQ(cat_map_inverse(p, key, m), (Point{x, y}));
        }
      }
    }
  }
}

TEST(CatMap, ZeroParamsAreIdentity) {
  const auto key = make_key(16, 0, 0, 0, 0, 1);
  for (std::size_t y = 0; y < 16; ++y)
    for (std::size_t x = 0; x < 16; ++x) EXPECT_EQ(cat_map_point({x, y}, key, 16), (Point{x, y}));
}

TEST(CatMap, SmallWorkedExample) {
  // a=1, b=1: x' = x + y, y' = x + 2y (mod 4)
  const auto key = make_key(4, 1, 1, 0, 0, 1);
  EXPECT_EQ(cat_map_point({1, 0}, key, 4), (Point{1, 1}));
  EXPECT_EQ(cat_map_point({1, 2}, key, 4), (Point{3, 1}));
  const auto shifted = make_key(4, 1, 1, 1, 3, 1);
  EXPECT_EQ(cat_map_point({1, 2}, shifted, 4), (Point{0, 0}));
}

TEST(CatMap, KeyBitsLength) {
  std::mt19937_64 gen(5);
  for (std::size_t m : {4u, 16u, 64u, 196u, 256u, 300u, 512u}) {
    const auto key = random_key(gen, m);
    const auto bits = serialize_key_bits(key, m);
    EXPECT_EQ(bits.size(), 4 * key_param_bits(m));
    EXPECT_EQ(bits.find_first_not_of("01"), std::string::npos);
    EXPECT_EQ(key_to_hex(key, m).size() * 4, bits.size());
  }
  EXPECT_EQ(serialize_key_bits(make_key(256, 0, 0, 0, 0, 1), 256).size(), 32u);
}

TEST(CatMap, BitOrderIsBigEndianConcatenation) {
  const auto key = make_key(16, 1, 2, 3, 15, 1);
  EXPECT_EQ(serialize_key_bits(key, 16), "0001001000111111");
  EXPECT_EQ(key_to_hex(key, 16), "123f");
}

TEST(CatMap, HexRoundTrip) {
  std::mt19937_64 gen(9);
  for (std::size_t m : {4u, 16u, 256u, 300u, 512u}) {
    for (int t = 0; t < 20; ++t) {
      auto key = random_key(gen, m);
      key.rounds = 5;
      EXPECT_EQ(key_from_hex(key_to_hex(key, m), m, 5), key);
    }
  }
}

TEST(CatMap, HexUpperCaseAccepted) {
  EXPECT_EQ(key_from_hex("ABCDEF01", 256, 1), key_from_hex("abcdef01", 256, 1));
}

TEST(CatMap, HexErrors) {
  EXPECT_THROW((void)key_from_hex("abcdef0", 256, 1), KeyLengthError);
  EXPECT_THROW((void)key_from_hex("abcdef012", 256, 1), KeyLengthError);
  EXPECT_THROW((void)key_from_hex("abcdefgh", 256, 1), InvalidKeyError);
  EXPECT_THROW((void)key_from_hex("abcdef01", 256, 0), InvalidKeyError);
}

TEST(CatMap, ParametersReducedModM) {
  // q = 9 bits allows values up to 511 for M = 300
  const auto key = key_from_hex("1ff" "000000", 300, 1);
  EXPECT_LT(key.a, 300u);
}

}  // namespace
}  // namespace catcrypt
