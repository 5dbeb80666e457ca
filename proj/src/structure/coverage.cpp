#include <algorithm>
#include <set>

#include "mbb/structure.hpp"

namespace mbb {

CoverageReport coverage(const GroupRef& g, const Elem& i) {
  if (!g->owns(i)) throw DomainError("coverage: element not in group");
  if (!is_involution(i)) throw PreconditionError("coverage: " + to_string(i) + " is not an involution");
  const Enumeration& el = g->elements();
  const SubgroupSet ci = centralizer(g, i);
  const SubgroupSet core = odd_core(ci);

  std::vector<std::uint32_t> x;
  for (std::uint32_t k : core.indices()) x.push_back(el.index_of(mul(i, el[k])));
  std::sort(x.begin(), x.end());

  std::set<std::vector<std::uint32_t>> conjugates;
  for (const Elem& c : el) {
    std::vector<std::uint32_t> xc;
    xc.reserve(x.size());
    for (std::uint32_t k : x) xc.push_back(el.index_of(conj(el[k], c)));
    std::sort(xc.begin(), xc.end());
    conjugates.insert(std::move(xc));
  }

  CoverageReport r;
  r.involution = i;
  r.group_order = el.size();
  r.centralizer_order = ci.size();
  r.core_order = core.size();
  r.coset_size = x.size();
  r.conjugate_count = conjugates.size();
  std::vector<char> hit(el.size(), 0);
  r.pairwise_disjoint = true;
  for (const auto& xc : conjugates) {
    for (std::uint32_t k : xc) {
      if (hit[k]) r.pairwise_disjoint = false;
      hit[k] = 1;
    }
  }
  r.union_size = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), 1));
  r.counting_identity = r.union_size == r.conjugate_count * r.coset_size;
  return r;
}

}  // namespace mbb
