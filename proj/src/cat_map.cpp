#include "catcrypt/cat_map.hpp"

#include <cctype>

#include "catcrypt/errors.hpp"

namespace catcrypt {
namespace {

constexpr std::uint64_t mod_sub(std::uint64_t v, std::uint64_t s, std::uint64_t m) { return (v + m - s % m) % m; }

}  // namespace

unsigned key_param_bits(std::size_t dim) {
  unsigned q = 0;
  while ((std::size_t{1} << q) < dim) ++q;
  return q;
}

CipherKey make_key(std::size_t dim, std::uint64_t a, std::uint64_t b, std::uint64_t rx, std::uint64_t ry,
                   unsigned rounds) {
  CipherKey key;
  key.a = static_cast<std::uint32_t>(a % dim);
  key.b = static_cast<std::uint32_t>(b % dim);
  key.rx = static_cast<std::uint32_t>(rx % dim);
  key.ry = static_cast<std::uint32_t>(ry % dim);
  key.rounds = rounds;
  return key;
}

Point cat_map_point(Point p, const CipherKey& key, std::size_t dim) {
  const std::uint64_t m = dim;
  const std::uint64_t a = key.a % m;
  const std::uint64_t b = key.b % m;
  const std::uint64_t d = (a * b + 1) % m;
  const std::uint64_t x = p.x;
  const std::uint64_t y = p.y;
  return {static_cast<std::size_t>((x + a * y + key.rx) % m),
          static_cast<std::size_t>((b * x + d * y + key.ry) % m)};
}

Point cat_map_inverse(Point p, const CipherKey& key, std::size_t dim) {
  const std::uint64_t m = dim;
  const std::uint64_t a = key.a % m;
  const std::uint64_t b = key.b % m;
  const std::uint64_t d = (a * b + 1) % m;
  const std::uint64_t u = mod_sub(p.x, key.rx, m);
  const std::uint64_t v = mod_sub(p.y, key.ry, m);
  return {static_cast<std::size_t>(mod_sub(d * u % m, a * v % m, m)),
          static_cast<std::size_t>(mod_sub(v, b * u % m, m))};
}

std::string serialize_key_bits(const CipherKey& key, std::size_t dim) {
  const unsigned q = key_param_bits(dim);
  std::string bits;
  bits.reserve(4 * q);
  for (std::uint32_t param : {key.a, key.b, key.rx, key.ry}) {
    for (unsigned i = q; i-- > 0;) bits.push_back(((param >> i) & 1u) ? '1' : '0');
  }
  return bits;
}

std::string key_to_hex(const CipherKey& key, std::size_t dim) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::string bits = serialize_key_bits(key, dim);
  std::string hex;
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    unsigned nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) nibble = (nibble << 1) | static_cast<unsigned>(bits[i + j] == '1');
    hex.push_back(kDigits[nibble]);
  }
  return hex;
}

CipherKey key_from_hex(std::string_view hex, std::size_t dim, unsigned rounds) {
  const unsigned q = key_param_bits(dim);
  if (hex.size() != q) {
    throw KeyLengthError("key for M=" + std::to_string(dim) + " needs " + std::to_string(4 * q) + " bits (" +
                         std::to_string(q) + " hex digits), got " + std::to_string(hex.size()) + " digits");
  }
  if (rounds == 0) throw InvalidKeyError("round count must be at least 1");

  std::string bits;
  for (char c : hex) {
    if (!std::isxdigit(static_cast<unsigned char>(c))) {
      throw InvalidKeyError(std::string("invalid hex digit '") + c + "' in key");
    }
    const unsigned nibble = std::isdigit(static_cast<unsigned char>(c))
                                ? static_cast<unsigned>(c - '0')
                                : static_cast<unsigned>(std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
    for (unsigned i = 4; i-- > 0;) bits.push_back(((nibble >> i) & 1u) ? '1' : '0');
  }

  std::uint64_t params[4] = {};
  for (std::size_t p = 0; p < 4; ++p) {
    for (std::size_t i = 0; i < q; ++i) params[p] = (params[p] << 1) | static_cast<std::uint64_t>(bits[p * q + i] == '1');
  }
  return make_key(dim, params[0], params[1], params[2], params[3], rounds);
}

}  // namespace catcrypt
