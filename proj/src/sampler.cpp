#include "mbb/sampler.hpp"

#include <algorithm>

namespace mbb {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw ParameterError("uniform_below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

PrSampler::PrSampler(GroupRef group, std::uint64_t seed, std::uint32_t slots, std::uint32_t burn_in)
    : group_(std::move(group)), rng_(seed) {
  if (!group_) throw ParameterError("sampler needs a group");
  const auto& gens = group_->generators();
  if (gens.empty()) throw ParameterError("sampler needs at least one generator");
  std::size_t r = slots;
  if (r == 0) r = std::max<std::size_t>(kDefaultPrSlots, 2 * gens.size());
  if (r < gens.size()) {
    throw ParameterError("product replacement needs at least " + std::to_string(gens.size()) +
                         " slots, got " + std::to_string(r));
  }
  // Two slots are needed for a replacement step.
  r = std::max<std::size_t>(r, 2);
  slots_.reserve(r);
  for (std::size_t k = 0; k < r; ++k) slots_.push_back(gens[k % gens.size()]);
  accumulator_ = group_->identity();
  for (std::uint32_t k = 0; k < burn_in; ++k) step();
}

void PrSampler::step() {
  const std::size_t r = slots_.size();
  const auto i = static_cast<std::size_t>(uniform_below(rng_, r));
  auto j = static_cast<std::size_t>(uniform_below(rng_, r - 1));
  if (j >= i) ++j;
  const std::uint64_t variant = uniform_below(rng_, 4);
  const Elem other = (variant & 1U) ? group_->inv(slots_[j]) : slots_[j];
  slots_[i] = (variant & 2U) ? group_->mul(other, slots_[i]) : group_->mul(slots_[i], other);
  accumulator_ = group_->mul(accumulator_, slots_[i]);
  ++steps_;
}

Elem PrSampler::next() {
  step();
  return accumulator_;
}

}  // namespace mbb
