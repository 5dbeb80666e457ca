#include "mbb/invol.hpp"
#include "mbb/kernels.hpp"

namespace mbb::kernels::reference {

std::vector<char> commuting_mask(const Enumeration& elems, std::span<const Elem> with,
                                 std::span<const char> within) {
  std::vector<char> mask(elems.size(), 0);
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (!within.empty() && !within[k]) continue;
    bool ok = true;
    for (const Elem& w : with) {
      if (!commute(elems[k], w)) {
        ok = false;
        break;
      }
    }
    mask[k] = ok ? 1 : 0;
  }
  return mask;
}

std::vector<std::uint64_t> element_orders(const Enumeration& elems) {
  std::vector<std::uint64_t> out(elems.size());
  for (std::size_t k = 0; k < elems.size(); ++k) out[k] = order(elems[k]).value();
  return out;
}

ZetaScan zeta_scan(const Enumeration& elems, const Elem& i) {
  ZetaScan out;
  out.branch.resize(elems.size());
  out.value.resize(elems.size());
  out.base_order.resize(elems.size());
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const ZetaResult z = zeta(i, elems[k]);
    out.branch[k] = z.branch == ZetaBranch::z0 ? ZetaScan::kZ0 : ZetaScan::kZ1;
    out.value[k] = elems.index_of(z.value);
    out.base_order[k] = z.base_order.value();
  }
  return out;
}

}  // namespace mbb::kernels::reference
