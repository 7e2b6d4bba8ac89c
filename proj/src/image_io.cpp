#include "catcrypt/image_io.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <random>
#include <stdexcept>
#include <string>

#include "catcrypt/errors.hpp"

namespace catcrypt {
namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::uint64_t number(const char* what) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw ParseError(std::string("PGM header: expected ") + what);
    }
    std::uint64_t v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + static_cast<std::uint64_t>(bytes_[pos_] - '0');
      if (v > 0xffffffffULL) throw ParseError(std::string("PGM header: ") + what + " out of range");
      ++pos_;
    }
    return v;
  }

  std::size_t& pos() { return pos_; }
  std::span<const std::uint8_t> bytes() const { return bytes_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::vector<std::uint8_t> slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return data;
}

void spill(std::span<const std::uint8_t> data, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

Image parse_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') throw ParseError("not a binary PGM (missing P5 magic)");
  HeaderReader r(bytes);
  r.pos() = 2;
  if (r.pos() >= bytes.size() || !(std::isspace(bytes[r.pos()]) || bytes[r.pos()] == '#')) {
    throw ParseError("PGM header: magic must be followed by whitespace");
  }
  const auto width = r.number("width");
  const auto height = r.number("height");
  const auto maxval = r.number("maxval");
  if (r.pos() >= bytes.size() || !std::isspace(bytes[r.pos()])) {
    throw ParseError("PGM header: maxval must be followed by one whitespace byte");
  }
  ++r.pos();

  if (width == 0 || height == 0) throw ParseError("PGM header: zero width or height");
  if (maxval == 0 || maxval >= 65536) throw ParseError("PGM header: maxval out of range");
  if (width != height) {
    throw UnsupportedDimensionError("PGM is " + std::to_string(width) + "x" + std::to_string(height) +
                                    "; only square images are supported");
  }
  if (maxval != 255) throw UnsupportedDepthError("PGM maxval " + std::to_string(maxval) + "; only 255 is supported");
  validate_dim(width);

  const std::size_t n = width * height;
  const std::size_t remaining = bytes.size() - r.pos();
  if (remaining < n) {
    throw ParseError("PGM payload truncated: " + std::to_string(remaining) + " of " + std::to_string(n) + " bytes");
  }
  const auto* begin = bytes.data() + r.pos();
  return Image(width, std::vector<std::uint8_t>(begin, begin + n));
}

std::vector<std::uint8_t> format_pgm(const Image& image) {
  validate_dim(image.dim());
  const std::string header = "P5\n" + std::to_string(image.dim()) + " " + std::to_string(image.dim()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), image.pixels().begin(), image.pixels().end());
  return out;
}

Image read_pgm(const std::filesystem::path& path) {
  const auto data = slurp(path);
  try {
    return parse_pgm(data);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_pgm(const Image& image, const std::filesystem::path& path) { spill(format_pgm(image), path); }

Image read_raw(const std::filesystem::path& path, std::size_t dim) {
  validate_dim(dim);
  auto data = slurp(path);
  if (data.size() != dim * dim) {
    throw SizeMismatchError(path.string() + ": raw blob has " + std::to_string(data.size()) + " bytes, expected " +
                            std::to_string(dim * dim));
  }
  return Image(dim, std::move(data));
}

void write_raw(const Image& image, const std::filesystem::path& path) { spill(image.pixels(), path); }

Image make_test_image(const TestImageKind& kind, std::size_t dim) {
  Image img(dim);
  if (const auto* s = std::get_if<test_image::SingleLsb>(&kind)) {
    if (s->x >= dim || s->y >= dim) throw std::out_of_range("single-lsb pixel outside the image");
    img.at(s->x, s->y) = 1;
  } else if (const auto* u = std::get_if<test_image::UniformRandom>(&kind)) {
    std::mt19937_64 gen(u->seed);
    auto px = img.pixels();
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < px.size(); ++i) {
      if (i % 8 == 0) word = gen();
      px[i] = static_cast<std::uint8_t>(word >> (8 * (i % 8)));
    }
  }
  return img;
}

}  // namespace catcrypt
