#include "catcrypt/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "catcrypt/cipher.hpp"
#include "catcrypt/errors.hpp"
#include "catcrypt/key_schedule.hpp"
#include "catcrypt/metrics.hpp"

namespace catcrypt {
namespace {

// Runs body(i) for i in [0, n) on up to `jobs` threads. Each index writes
// only its own output slots, so the result never depends on scheduling. If
// bodies throw, the exception from the lowest index is rethrown.
template <typename Body>
void parallel_for(std::size_t n, unsigned jobs, Body&& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::size_t failed_index = std::numeric_limits<std::size_t>::max();
  std::exception_ptr failure;

  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (i < failed_index) {
          failed_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

using Column = std::vector<double>;

void flip_bit(std::span<std::uint8_t> bytes, std::uint64_t bit) {
  bytes[bit >> 3] = static_cast<std::uint8_t>(bytes[bit >> 3] ^ (1u << (bit & 7u)));
}

// Flips `k` distinct bits chosen uniformly. For k above half the bits the
// complement is sampled instead, so rejection stays cheap.
void flip_distinct_bits(std::span<std::uint8_t> bytes, std::size_t k, TrialStream& stream) {
  const std::size_t total = bytes.size() * 8;
  const bool invert = k > total / 2;
  const std::size_t draws = invert ? total - k : k;
  std::vector<bool> chosen(total, false);
  for (std::size_t picked = 0; picked < draws;) {
    const auto i = stream.below(total);
    if (!chosen[i]) {
      chosen[i] = true;
      ++picked;
    }
  }
  for (std::size_t i = 0; i < total; ++i) {
    if (chosen[i] != invert) flip_bit(bytes, i);
  }
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
  for (auto m : cfg.sizes) validate_dim(m);
  for (auto r : cfg.rounds) {
    if (r == 0) throw std::invalid_argument("round counts must be at least 1");
  }
  if (cfg.trials == 0) throw std::invalid_argument("trial count must be at least 1");
  for (auto p : cfg.error_percents) {
    if (!(p >= 0.0 && p <= 100.0)) throw std::invalid_argument("error percentages must lie in [0, 100]");
  }
}

Summary Summary::of(std::span<const double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  double sum = 0.0;
  for (auto v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (auto v : values) sq += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(sq / static_cast<double>(values.size()));
  // Rounding can push the mean of identical values a hair outside [min, max].
  s.mean = std::clamp(s.mean, s.min, s.max);
  return s;
}

std::vector<AvalancheCell> avalanche_sweep(const ExperimentConfig& cfg, AvalancheOptions opts) {
  validate_config(cfg);
  const auto sizes = sorted_unique(cfg.sizes);
  const auto rounds = sorted_unique(cfg.rounds);
  std::vector<AvalancheCell> cells;
  if (sizes.empty() || rounds.empty()) return cells;
  const unsigned max_r = rounds.back();
  const std::size_t trials = cfg.trials;

  for (auto m : sizes) {
    const std::size_t n = m * m;
    std::vector<Column> ps(rounds.size(), Column(trials));
    std::vector<Column> diff(rounds.size(), Column(trials));

    parallel_for(trials, cfg.jobs, [&](std::size_t w) {
      const Cipher cipher(m, derive_trial_key(cfg.master_seed, w, m, 1));
      std::vector<std::uint8_t> base(n, 0);
      std::vector<std::uint8_t> prime(n, 0);
      if (!opts.identical_plaintexts) {
        TrialStream stream(cfg.master_seed, w, StreamTag::kPlaintext);
        prime[stream.below(n)] = 1;
      }
      const std::vector<std::uint8_t> plain_prime = prime;
      std::vector<std::uint8_t> scratch;
      std::size_t ri = 0;
      for (unsigned r = 1; r <= max_r; ++r) {
        cipher.encrypt_round(base, scratch);
        cipher.encrypt_round(prime, scratch);
        if (r == rounds[ri]) {
          ps[ri][w] = hamming_percent(base, prime);
          diff[ri][w] = hamming_percent(plain_prime, prime);
          ++ri;
        }
      }
    });

    for (std::size_t ri = 0; ri < rounds.size(); ++ri) {
      cells.push_back({m, rounds[ri], Summary::of(ps[ri]), Summary::of(diff[ri])});
    }
  }
  return cells;
}

std::vector<UniformityCell> uniformity_sweep(const ExperimentConfig& cfg, UniformityPlaintext plaintext) {
  validate_config(cfg);
  const auto sizes = sorted_unique(cfg.sizes);
  const auto rounds = sorted_unique(cfg.rounds);
  std::vector<UniformityCell> cells;
  if (sizes.empty() || rounds.empty()) return cells;
  const unsigned max_r = rounds.back();
  const std::size_t trials = cfg.trials;

  for (auto m : sizes) {
    const std::size_t n = m * m;
    std::vector<Column> chi2(rounds.size(), Column(trials));

    parallel_for(trials, cfg.jobs, [&](std::size_t w) {
      TrialStream stream(cfg.master_seed, w, StreamTag::kPlaintext);
      std::vector<std::uint8_t> bytes(n, 0);

      if (plaintext == UniformityPlaintext::kRandomBytes) {
        for (std::size_t ri = 0; ri < rounds.size(); ++ri) {
          for (std::size_t i = 0; i < n; i += 8) {
            const auto word = stream.next();
            for (std::size_t j = 0; j < 8 && i + j < n; ++j) bytes[i + j] = static_cast<std::uint8_t>(word >> (8 * j));
          }
          chi2[ri][w] = chi_square(Histogram256::of(bytes));
        }
        return;
      }

      if (plaintext == UniformityPlaintext::kSingleLsb) bytes[stream.below(n)] = 1;
      const Cipher cipher(m, derive_trial_key(cfg.master_seed, w, m, 1));
      std::vector<std::uint8_t> scratch;
      std::size_t ri = 0;
      for (unsigned r = 1; r <= max_r; ++r) {
        cipher.encrypt_round(bytes, scratch);
        if (r == rounds[ri]) chi2[ri++][w] = chi_square(Histogram256::of(bytes));
      }
    });

    for (std::size_t ri = 0; ri < rounds.size(); ++ri) {
      const auto below = static_cast<std::size_t>(
          std::count_if(chi2[ri].begin(), chi2[ri].end(), [](double v) { return v <= kChiSquareThreshold; }));
      cells.push_back({m, rounds[ri], Summary::of(chi2[ri]), below});
    }
  }
  return cells;
}

std::size_t bits_for_percent(double percent, std::size_t total_bits) {
  if (!(percent > 0.0)) return 0;
  if (percent >= 100.0) return total_bits;
  // Long double keeps exact products such as 50% of 2^19 from rounding up.
  const long double exact = static_cast<long double>(percent) * static_cast<long double>(total_bits) / 100.0L;
  const auto k = static_cast<std::size_t>(std::ceil(exact));
  return std::min(k, total_bits);
}

std::vector<ErrorPropCell> error_propagation(const ExperimentConfig& cfg, const Image& image, ErrorPropOptions opts) {
  validate_config(cfg);
  validate_dim(image.dim());
  if (opts.rounds == 0) throw std::invalid_argument("round count must be at least 1");
  const std::size_t m = image.dim();
  const std::size_t total_bits = 8 * image.size();
  const std::size_t trials = cfg.trials;

  std::vector<ErrorPropCell> rows;
  if (opts.single_bit) rows.push_back({std::nullopt, 1, {}, {}, 0, {}});
  for (auto p : cfg.error_percents) rows.push_back({p, bits_for_percent(p, total_bits), {}, {}, 0, {}});

  std::vector<Column> dif(rows.size(), Column(trials));
  std::vector<Column> psnr_db(rows.size(), Column(trials));
  std::vector<Column> ssim_v(rows.size(), Column(trials));

  parallel_for(trials, cfg.jobs, [&](std::size_t w) {
    CipherKey key = derive_trial_key(cfg.master_seed, w, m, opts.rounds);
    const Cipher cipher(m, key);
    const Image c = cipher.encrypt(image);
    const Image clean = cipher.decrypt(c);
    TrialStream channel(cfg.master_seed, w, StreamTag::kChannel);
    for (std::size_t row = 0; row < rows.size(); ++row) {
      Image corrupted = c;
      if (!rows[row].percent) {
        flip_bit(corrupted.pixels(), channel.below(total_bits));
      } else {
        flip_distinct_bits(corrupted.pixels(), rows[row].flipped_bits, channel);
      }
      const Image noisy = cipher.decrypt(corrupted);
      dif[row][w] = hamming_percent(clean.pixels(), noisy.pixels());
      psnr_db[row][w] = psnr(clean, noisy);
      ssim_v[row][w] = ssim(clean, noisy);
    }
  });

  for (std::size_t row = 0; row < rows.size(); ++row) {
    Column finite;
    finite.reserve(trials);
    for (auto v : psnr_db[row]) {
      if (std::isfinite(v)) finite.push_back(v);
    }
    rows[row].dif = Summary::of(dif[row]);
    rows[row].psnr = Summary::of(finite);
    rows[row].psnr_infinite = trials - finite.size();
    rows[row].ssim = Summary::of(ssim_v[row]);
  }
  return rows;
}

KeyspaceReport keyspace_report(std::size_t dim, double guesses_per_second) {
  if (dim < 4) throw UnsupportedDimensionError("key space needs M >= 4");
  if (!(guesses_per_second > 0.0)) throw std::invalid_argument("guess rate must be positive");
  KeyspaceReport r;
  r.dim = dim;
  r.q = key_param_bits(dim);
  r.key_bits = 4 * r.q;
  r.keyspace = std::ldexp(1.0, static_cast<int>(r.key_bits));
  r.guesses_per_second = guesses_per_second;
  r.seconds_to_enumerate = r.keyspace / guesses_per_second;

  char buf[320];
  std::snprintf(buf, sizeof buf,
                "exhaustive search of 2^%u keys takes %.4g s at %.4g guesses/s. "
                "A 64-bit key length quoted for M >= 256 counts two 32-bit generator draws; "
                "only %u of those bits select the permutation.",
                r.key_bits, r.seconds_to_enumerate, guesses_per_second, r.key_bits);
  r.note = buf;
  return r;
}

std::vector<std::size_t> default_sizes() { return {16, 32, 64, 128, 196, 256, 300, 512}; }

std::vector<unsigned> default_rounds() { return {1, 2, 3, 4, 5, 6, 7}; }

}  // namespace catcrypt
