#pragma once

// Involution-centralizer maps for black-box groups.
//
// For a fixed involution i and any g, let c = i * i^g. The involution i
// inverts c, so <i, c> is dihedral:
//   * order(c) even (2k): zeta0(g) = c^k, the unique involution of <c>;
//   * order(c) odd (2k+1, including c = 1): with x = c^(k+1) the square root
//     of c in <c>, i^x = i^g and zeta1(g) = g * x^-1 is the unique element of
//     g<c> that centralizes i.
// zeta1 is C(i)-covariant: zeta1(c g) = c zeta1(g) for c in C(i), so all its
// fibers over C(i) have the same size.

#include <cstdint>
#include <optional>
#include <vector>

#include "mbb/bbcore.hpp"
#include "mbb/sampler.hpp"

namespace mbb {

enum class ZetaBranch { z0, z1 };

std::string_view branch_name(ZetaBranch b) noexcept;

struct ZetaResult {
  ZetaBranch branch = ZetaBranch::z1;
  Elem value;
  Elem base;  // i * i^g
  FactoredInt base_order;
};

/// Throws PreconditionError unless `i` is an involution.
ZetaResult zeta(const Elem& i, const Elem& g);

struct DihedralResult {
  /// x in <ij> with i^x = j; present iff order(ij) is odd.
  std::optional<Elem> witness;
  /// The unique involution of <ij>; present iff order(ij) is even.
  std::optional<Elem> central_involution;
  FactoredInt product_order;
};

DihedralResult dihedral_conj(const Elem& i, const Elem& j);

struct BraySample {
  Elem value;
  ZetaBranch branch;
};

/// Draws n elements from `sampler` and maps each through zeta. Every output
/// is checked to centralize i (InternalError "bray-not-centralizing").
std::vector<BraySample> bray_sample(const Elem& i, PrSampler& sampler, std::size_t n);

struct FiberCensus {
  std::uint64_t group_order = 0;
  std::uint64_t centralizer_order = 0;
  std::uint64_t domain_size = 0;     // #{g : order(i i^g) odd}
  std::uint64_t z0_count = 0;
  /// Fiber size of zeta1 over each element of C(i), in C(i)'s index order.
  std::vector<std::uint64_t> fibers;
  std::optional<std::uint64_t> fiber_size;  // set when all fibers are equal
  bool uniform = false;
  bool image_is_centralizer = false;
};

/// Exhaustive zeta1 census over an enumerable group.
FiberCensus zeta1_fiber_census(const GroupRef& g, const Elem& i);

}  // namespace mbb
