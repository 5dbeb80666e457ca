#include <omp.h>

#include <exception>

#include "mbb/invol.hpp"
#include "mbb/kernels.hpp"

namespace mbb::kernels {

namespace {

int g_workers = 0;  // 0 = OpenMP default

int effective_workers() { return g_workers > 0 ? g_workers : omp_get_max_threads(); }

/// Runs body(k) for k in [0, n) across workers, rethrowing the first
/// exception on the calling thread.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) num_threads(effective_workers())
  for (std::int64_t k = 0; k < count; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(mbb_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

void set_workers(int n) { g_workers = n < 1 ? 1 : n; }

int workers() { return effective_workers(); }

std::vector<char> commuting_mask(const Enumeration& elems, std::span<const Elem> with,
                                 std::span<const char> within) {
  std::vector<char> mask(elems.size(), 0);
  parallel_for(elems.size(), [&](std::size_t k) {
    if (!within.empty() && !within[k]) return;
    for (const Elem& w : with) {
      if (!commute(elems[k], w)) return;
    }
    mask[k] = 1;
  });
  return mask;
}

std::vector<std::uint64_t> element_orders(const Enumeration& elems) {
  std::vector<std::uint64_t> out(elems.size());
  parallel_for(elems.size(), [&](std::size_t k) { out[k] = order(elems[k]).value(); });
  return out;
}

ZetaScan zeta_scan(const Enumeration& elems, const Elem& i) {
  ZetaScan out;
  out.branch.resize(elems.size());
  out.value.resize(elems.size());
  out.base_order.resize(elems.size());
  parallel_for(elems.size(), [&](std::size_t k) {
    const ZetaResult z = zeta(i, elems[k]);
    out.branch[k] = z.branch == ZetaBranch::z0 ? ZetaScan::kZ0 : ZetaScan::kZ1;
    out.value[k] = elems.index_of(z.value);
    out.base_order[k] = z.base_order.value();
  });
  return out;
}

}  // namespace mbb::kernels
