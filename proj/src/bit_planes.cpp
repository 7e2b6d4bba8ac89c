#include "catcrypt/bit_planes.hpp"

#include "catcrypt/errors.hpp"

namespace catcrypt {

BitPlaneSet::BitPlaneSet(std::size_t dim) : dim_(dim) {
  validate_dim(dim);
  for (auto& plane : planes_) plane.assign(dim * dim, 0);
}

BitPlaneSet BitPlaneSet::decompose(const Image& image) {
  BitPlaneSet set(image.dim());
  const auto px = image.pixels();
  for (std::size_t k = 0; k < kPlanes; ++k) {
    for (std::size_t i = 0; i < px.size(); ++i) set.planes_[k][i] = (px[i] >> k) & 1u;
  }
  return set;
}

Image BitPlaneSet::reassemble() const {
  Image image(dim_);
  auto px = image.pixels();
  for (std::size_t k = 0; k < kPlanes; ++k) {
    for (std::size_t i = 0; i < px.size(); ++i) px[i] = static_cast<std::uint8_t>(px[i] | (planes_[k][i] << k));
  }
  return image;
}

std::size_t BitPlaneSet::count_set() const {
  std::size_t n = 0;
  for (const auto& plane : planes_) {
    for (auto b : plane) n += b;
  }
  return n;
}

BitPlaneSet permute_bits(const BitPlaneSet& planes, const CipherKey& key) {
  const std::size_t m = planes.dim();
  BitPlaneSet out(m);
  for (std::size_t y = 0; y < m; ++y) {
    for (std::size_t x = 0; x < m; ++x) {
      const Point dst = cat_map_point({x, y}, key, m);
      for (std::size_t k = 0; k < kPlanes; ++k) out.set(k, dst, planes.bit(k, {x, y}));
    }
  }
  return out;
}

BitPlaneSet unpermute_bits(const BitPlaneSet& planes, const CipherKey& key) {
  const std::size_t m = planes.dim();
  BitPlaneSet out(m);
  for (std::size_t y = 0; y < m; ++y) {
    for (std::size_t x = 0; x < m; ++x) {
      const Point dst = cat_map_point({x, y}, key, m);
      for (std::size_t k = 0; k < kPlanes; ++k) out.set(k, {x, y}, planes.bit(k, dst));
    }
  }
  return out;
}

Point arnold_point(Point p, std::size_t dim, unsigned steps) {
  for (unsigned s = 0; s < steps; ++s) p = {(p.x + p.y) % dim, (p.x + 2 * p.y) % dim};
  return p;
}

Point arnold_inverse(Point p, std::size_t dim, unsigned steps) {
  // [[1,1],[1,2]]^-1 = [[2,-1],[-1,1]]
  for (unsigned s = 0; s < steps; ++s) p = {(2 * p.x + dim - p.y) % dim, (p.y + dim - p.x) % dim};
  return p;
}

BitPlaneSet interleave_planes(const BitPlaneSet& planes) {
  const std::size_t m = planes.dim();
  BitPlaneSet out(m);
  for (std::size_t k = 0; k < kPlanes; ++k) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t x = 0; x < m; ++x) {
        const Point dst = arnold_point({x, y}, m, static_cast<unsigned>(k));
        out.set((k + dst.x + dst.y) % kPlanes, dst, planes.bit(k, {x, y}));
      }
    }
  }
  return out;
}

BitPlaneSet deinterleave_planes(const BitPlaneSet& planes) {
  const std::size_t m = planes.dim();
  BitPlaneSet out(m);
  for (std::size_t k = 0; k < kPlanes; ++k) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t x = 0; x < m; ++x) {
        const Point dst = arnold_point({x, y}, m, static_cast<unsigned>(k));
        out.set(k, {x, y}, planes.bit((k + dst.x + dst.y) % kPlanes, dst));
      }
    }
  }
  return out;
}

}  // namespace catcrypt
