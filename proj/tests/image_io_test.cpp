#include "catcrypt/image_io.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include "catcrypt/errors.hpp"
#include "catcrypt/metrics.hpp"

namespace catcrypt {
namespace {

namespace fs = std::filesystem;

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("catcrypt_io_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST(Pgm, ParseAllZero4x4) {
  auto data = bytes_of("P5\n4 4\n255\n");
  data.resize(data.size() + 16, 0);
  const auto img = parse_pgm(data);
  EXPECT_EQ(img.dim(), 4u);
  EXPECT_EQ(img, Image(4));
}

TEST(Pgm, CommentsAndWhitespace) {
  auto data = bytes_of("P5 # made by hand\n# another\n  8\t8 #w h\n255\r");
  for (int i = 0; i < 64; ++i) data.push_back(static_cast<std::uint8_t>(i));
  const auto img = parse_pgm(data);
  EXPECT_EQ(img.dim(), 8u);
  EXPECT_EQ(img.at(7, 7), 63);
}

TEST(Pgm, PayloadMayStartWithWhitespaceByte) {
  auto data = bytes_of("P5\n4 4\n255\n");
  data.resize(data.size() + 16, '\n');
  EXPECT_EQ(parse_pgm(data).at(0, 0), '\n');
}

TEST(Pgm, ErrorCategories) {
  auto with_payload = [](std::string header, std::size_t n) {
    auto d = bytes_of(header);
    d.resize(d.size() + n, 0);
    return d;
  };
  EXPECT_THROW((void)parse_pgm(with_payload("P5\n4 8\n255\n", 32)), UnsupportedDimensionError);
  EXPECT_THROW((void)parse_pgm(with_payload("P5\n4 4\n65535\n", 32)), UnsupportedDepthError);
  EXPECT_THROW((void)parse_pgm(with_payload("P5\n4 4\n15\n", 16)), UnsupportedDepthError);
  EXPECT_THROW((void)parse_pgm(with_payload("P2\n4 4\n255\n", 16)), ParseError);
  EXPECT_THROW((void)parse_pgm(with_payload("P5\n4 x\n255\n", 16)), ParseError);
  EXPECT_THROW((void)parse_pgm(with_payload("P5\n4 4\n255\n", 15)), ParseError);
  EXPECT_THROW((void)parse_pgm(with_payload("P5\n4 4\n255", 0)), ParseError);
  EXPECT_THROW((void)parse_pgm(with_payload("P5\n6 6\n255\n", 36)), UnsupportedDimensionError);
}

TEST(Pgm, FormatHeader) {
  const auto out = format_pgm(Image(4));
  EXPECT_EQ(std::string(out.begin(), out.begin() + 11), "P5\n4 4\n255\n");
  EXPECT_EQ(out.size(), 11u + 16u);
}

TEST_F(TempDir, FileRoundTrip) {
  for (std::size_t m : {4u, 16u, 300u}) {
    const auto img = make_test_image(test_image::UniformRandom{m}, m);
    const auto path = dir_ / ("img" + std::to_string(m) + ".pgm");
    write_pgm(img, path);
    EXPECT_EQ(read_pgm(path), img);
  }
  const auto zero = Image(8);
  write_pgm(zero, dir_ / "z.pgm");
  EXPECT_EQ(read_pgm(dir_ / "z.pgm"), zero);
}

TEST_F(TempDir, RawRoundTrip) {
  const auto img = make_test_image(test_image::UniformRandom{5}, 32);
  write_raw(img, dir_ / "c.bin");
  EXPECT_EQ(fs::file_size(dir_ / "c.bin"), 1024u);
  EXPECT_EQ(read_raw(dir_ / "c.bin", 32), img);
  EXPECT_THROW((void)read_raw(dir_ / "c.bin", 16), SizeMismatchError);
}

TEST_F(TempDir, IoErrorsNamePath) {
  try {
    (void)read_pgm(dir_ / "missing.pgm");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("missing.pgm"), std::string::npos);
  }
  EXPECT_THROW(write_pgm(Image(4), dir_ / "no" / "such" / "dir.pgm"), IoError);
}

std::uint64_t fnv1a(std::span<const std::uint8_t> bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto b : bytes) h = (h ^ b) * 0x100000001b3ULL;
  return h;
}

TEST(Pgm, LenaFixture) {
  const fs::path path = fs::path(CATCRYPT_FIXTURE_DIR) / "lena256.pgm";
  EXPECT_EQ(fs::file_size(path), 15u + 65536u);
  const auto img = read_pgm(path);
  EXPECT_EQ(img.dim(), 256u);
  EXPECT_EQ(img.size(), 65536u);
  EXPECT_EQ(fnv1a(img.pixels()), 0x8a0592f201ad6537ULL);
}

TEST(TestImages, Kinds) {
  EXPECT_EQ(make_test_image(test_image::AllZero{}, 16), Image(16));
  const auto lsb = make_test_image(test_image::SingleLsb{0, 0}, 16);
  EXPECT_EQ(std::count(lsb.pixels().begin(), lsb.pixels().end(), 1), 1);
  EXPECT_EQ(std::count(lsb.pixels().begin(), lsb.pixels().end(), 0), 255);
  EXPECT_EQ(lsb.at(0, 0), 1);
  const auto r = make_test_image(test_image::UniformRandom{7}, 64);
  EXPECT_LE(chi_square(Histogram256::of(r.pixels())), kChiSquareThreshold);
  EXPECT_EQ(r, make_test_image(test_image::UniformRandom{7}, 64));
  EXPECT_THROW((void)make_test_image(test_image::AllZero{}, 10), UnsupportedDimensionError);
  EXPECT_THROW((void)make_test_image(test_image::SingleLsb{16, 0}, 16), std::out_of_range);
}

}  // namespace
}  // namespace catcrypt
