#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catcrypt/image.hpp"

namespace catcrypt {

// Round count used by the error-propagation experiment.
inline constexpr unsigned kSecureRounds = 6;

struct ExperimentConfig {
  std::vector<std::size_t> sizes;
  std::vector<unsigned> rounds;
  std::size_t trials = 1000;
  std::uint64_t master_seed = 0;
  std::vector<double> error_percents;
  unsigned jobs = 1;
};

// Throws std::invalid_argument (or UnsupportedDimensionError for sizes) when
// the config cannot be run.
void validate_config(const ExperimentConfig& cfg);

// Population statistics. `count` is the number of values summarized.
struct Summary {
  double min = 0.0;
  double mean = 0.0;
  double max = 0.0;
  double std = 0.0;
  std::size_t count = 0;

  static Summary of(std::span<const double> values);
};

struct AvalancheOptions {
  // Use I' = I, i.e. skip setting the random LSB.
  bool identical_plaintexts = false;
};

struct AvalancheCell {
  std::size_t dim = 0;
  unsigned rounds = 0;
  Summary ps;    // hamming_percent(enc(I), enc(I'))
  Summary diff;  // hamming_percent(I', enc(I'))
};

// Cells for every (M, r), ascending M then r.
[[nodiscard]] std::vector<AvalancheCell> avalanche_sweep(const ExperimentConfig& cfg, AvalancheOptions opts = {});

enum class UniformityPlaintext {
  kSingleLsb,    // all-zero image with one random LSB set, as in the avalanche sweep
  kAllZero,      // encrypts to itself at every round count
  kRandomBytes,  // control: histogram of uniform bytes instead of a ciphertext
};

struct UniformityCell {
  std::size_t dim = 0;
  unsigned rounds = 0;
  Summary chi2;
  std::size_t below_threshold = 0;  // trials with chi2 <= kChiSquareThreshold
};

[[nodiscard]] std::vector<UniformityCell> uniformity_sweep(const ExperimentConfig& cfg,
                                                           UniformityPlaintext plaintext = UniformityPlaintext::kSingleLsb);

struct ErrorPropCell {
  // Percentage of ciphertext bits flipped; empty for the single-bit row.
  std::optional<double> percent;
  std::size_t flipped_bits = 0;
  Summary dif;
  // Finite PSNR values only; trials with identical decryptions are counted in
  // psnr_infinite instead.
  Summary psnr;
  std::size_t psnr_infinite = 0;
  Summary ssim;
};

struct ErrorPropOptions {
  bool single_bit = true;
  unsigned rounds = kSecureRounds;
};

// Rows: the single-bit row first (if enabled), then one per error percent in
// cfg order. cfg.sizes and cfg.rounds are ignored; the image fixes M.
[[nodiscard]] std::vector<ErrorPropCell> error_propagation(const ExperimentConfig& cfg, const Image& image,
                                                           ErrorPropOptions opts = {});

// ceil(percent * total_bits / 100), clamped to [0, total_bits].
[[nodiscard]] std::size_t bits_for_percent(double percent, std::size_t total_bits);

struct KeyspaceReport {
  std::size_t dim = 0;
  unsigned q = 0;
  unsigned key_bits = 0;
  double keyspace = 0.0;  // 2^key_bits
  double guesses_per_second = 0.0;
  double seconds_to_enumerate = 0.0;
  std::string note;
};

inline constexpr double kDefaultGuessRate = 1e9;

[[nodiscard]] KeyspaceReport keyspace_report(std::size_t dim, double guesses_per_second = kDefaultGuessRate);

// Grid used when no sizes or rounds are given.
[[nodiscard]] std::vector<std::size_t> default_sizes();
[[nodiscard]] std::vector<unsigned> default_rounds();

}  // namespace catcrypt
