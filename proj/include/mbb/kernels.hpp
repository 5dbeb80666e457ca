#pragma once

// Data-parallel scans over an enumerated group.
//
// Every kernel exists twice: `mbb::kernels::*` is the OpenMP version used by
// the library, `mbb::kernels::reference::*` is a plain serial loop kept as the
// test oracle. Both write per-element results into index-addressed arrays, so
// output is independent of the worker count.

#include <cstdint>
#include <span>
#include <vector>

#include "mbb/bbcore.hpp"

namespace mbb::kernels {

/// Per-element outcome of the zeta map for a fixed involution.
struct ZetaScan {
  static constexpr std::uint8_t kZ0 = 0;
  static constexpr std::uint8_t kZ1 = 1;
  std::vector<std::uint8_t> branch;       // kZ0 or kZ1
  std::vector<std::uint32_t> value;       // enumeration index of zeta(g)
  std::vector<std::uint64_t> base_order;  // order(i * i^g)
};

/// Number of OpenMP workers used by the parallel kernels (>= 1).
void set_workers(int n);
int workers();

/// mask[k] = 1 iff elems[k] commutes with every element of `with`, restricted
/// to indices where `within` is nonzero (empty `within` = no restriction).
std::vector<char> commuting_mask(const Enumeration& elems, std::span<const Elem> with,
                                 std::span<const char> within = {});
std::vector<std::uint64_t> element_orders(const Enumeration& elems);
/// zeta(i, g) for every g; `i` must be an involution.
ZetaScan zeta_scan(const Enumeration& elems, const Elem& i);

namespace reference {
std::vector<char> commuting_mask(const Enumeration& elems, std::span<const Elem> with,
                                 std::span<const char> within = {});
std::vector<std::uint64_t> element_orders(const Enumeration& elems);
ZetaScan zeta_scan(const Enumeration& elems, const Elem& i);
}  // namespace reference

}  // namespace mbb::kernels
