#pragma once

// Seeded pseudo-random elements by product replacement with an accumulator
// ("rattle"). The generator is std::mt19937_64; indices are drawn from its raw
// 64-bit output by rejection sampling, so streams do not depend on the
// standard library's distribution implementations. Golden-output tests pin
// this choice.

#include <cstdint>
#include <random>
#include <vector>

#include "mbb/bbcore.hpp"

namespace mbb {

inline constexpr std::uint32_t kDefaultPrSlots = 10;
inline constexpr std::uint32_t kDefaultPrBurnIn = 100;

/// Uniform integer in [0, n) from raw engine output.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

class PrSampler {
 public:
  /// `slots` = 0 selects max(10, 2 * #generators). Explicit slot counts below
  /// the number of generators are rejected.
  PrSampler(GroupRef group, std::uint64_t seed, std::uint32_t slots = 0,
            std::uint32_t burn_in = kDefaultPrBurnIn);

  /// One replacement step; returns the updated accumulator.
  Elem next();

  const GroupRef& group() const noexcept { return group_; }
  std::uint64_t steps_taken() const noexcept { return steps_; }
  std::size_t slot_count() const noexcept { return slots_.size(); }

 private:
  void step();

  GroupRef group_;
  std::vector<Elem> slots_;
  Elem accumulator_;
  std::mt19937_64 rng_;
  std::uint64_t steps_ = 0;
};

}  // namespace mbb
