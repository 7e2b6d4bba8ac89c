#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "catcrypt/cat_map.hpp"

namespace catcrypt {

// Independent substreams of one trial. Every random choice an experiment
// makes is drawn from the stream named for it, so a trial replays the same
// way no matter which worker runs it or in what order.
enum class StreamTag : std::uint32_t {
  kKey = 0,
  kPlaintext = 1,
  kChannel = 2,
};

// Counter-style generator: std::mt19937_64 seeded through std::seed_seq from
// (master_seed, trial_index, tag). Both are fully specified by the standard,
// so streams are identical across platforms. Bounded draws use rejection,
// never std::uniform_int_distribution (whose output is implementation-defined).
class TrialStream {
 public:
  TrialStream(std::uint64_t master_seed, std::uint64_t trial_index, StreamTag tag);

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 gen_;
};

// Draws four q-bit parameters from the trial's key stream and reduces them
// modulo M. Keys do not depend on `rounds`, so one trial index gives the same
// permutation at every round count.
[[nodiscard]] CipherKey derive_trial_key(std::uint64_t master_seed, std::uint64_t trial_index, std::size_t dim,
                                         unsigned rounds);

}  // namespace catcrypt
