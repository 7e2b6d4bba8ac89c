#pragma once

#include <stdexcept>
#include <string>

namespace catcrypt {

// Every failure surfaced by the library derives from Error so callers can
// catch the whole family at once; the subclasses name the category.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two inputs that must agree in length (blocks, byte sequences, images) don't.
class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

// Image side length is not square, below 4, or not a multiple of 4.
class UnsupportedDimensionError : public Error {
 public:
  using Error::Error;
};

// PGM maxval other than 255.
class UnsupportedDepthError : public Error {
 public:
  using Error::Error;
};

// Malformed PGM header or payload.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Serialized key does not carry exactly 4*q bits for the image size.
class KeyLengthError : public Error {
 public:
  using Error::Error;
};

// Key present but unusable (zero rounds, non-hex digits).
class InvalidKeyError : public Error {
 public:
  using Error::Error;
};

// Measurement over zero elements (empty histogram, empty byte sequence).
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace catcrypt
