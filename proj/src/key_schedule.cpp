#include "catcrypt/key_schedule.hpp"

#include <limits>
#include <stdexcept>

namespace catcrypt {
namespace {

std::seed_seq make_seed(std::uint64_t master_seed, std::uint64_t trial_index, StreamTag tag) {
  return std::seed_seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                       static_cast<std::uint32_t>(trial_index), static_cast<std::uint32_t>(trial_index >> 32),
                       static_cast<std::uint32_t>(tag)};
}

}  // namespace

TrialStream::TrialStream(std::uint64_t master_seed, std::uint64_t trial_index, StreamTag tag) {
  auto seq = make_seed(master_seed, trial_index, tag);
  gen_.seed(seq);
}

std::uint64_t TrialStream::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("TrialStream::below needs a nonzero bound");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % bound;
  std::uint64_t v = gen_();
  while (v >= limit) v = gen_();
  return v % bound;
}

CipherKey derive_trial_key(std::uint64_t master_seed, std::uint64_t trial_index, std::size_t dim,
                           unsigned rounds) {
  TrialStream stream(master_seed, trial_index, StreamTag::kKey);
  const unsigned q = key_param_bits(dim);
  const std::uint64_t mask = (std::uint64_t{1} << q) - 1;
  std::uint64_t params[4];
  for (auto& p : params) p = stream.next() & mask;
  return make_key(dim, params[0], params[1], params[2], params[3], rounds);
}

}  // namespace catcrypt
