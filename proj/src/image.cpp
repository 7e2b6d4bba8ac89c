#include "catcrypt/image.hpp"

#include <string>
#include <utility>

#include "catcrypt/errors.hpp"

namespace catcrypt {

bool is_valid_dim(std::size_t dim) noexcept { return dim >= 4 && dim % 4 == 0; }

void validate_dim(std::size_t dim) {
  if (!is_valid_dim(dim)) {
    throw UnsupportedDimensionError("image side length " + std::to_string(dim) +
                                    " is unsupported (need M >= 4 and M % 4 == 0)");
  }
}

Image::Image(std::size_t dim) : dim_(dim) {
  validate_dim(dim);
  pixels_.assign(dim * dim, 0);
}

Image::Image(std::size_t dim, std::vector<std::uint8_t> pixels) : dim_(dim), pixels_(std::move(pixels)) {
  validate_dim(dim);
  if (pixels_.size() != dim * dim) {
    throw SizeMismatchError("pixel buffer holds " + std::to_string(pixels_.size()) + " bytes, expected " +
                            std::to_string(dim * dim));
  }
}

}  // namespace catcrypt
