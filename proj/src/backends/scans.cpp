#include <algorithm>

#include "mbb/backends.hpp"
#include "mbb/kernels.hpp"

namespace mbb {

namespace {

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

SubgroupSet centralizer(const GroupRef& g, const Elem& a) {
  if (!g->owns(a)) throw DomainError("centralizer: element not in group");
  const Elem with[] = {a};
  return SubgroupSet::from_mask(g, kernels::commuting_mask(g->elements(), with));
}

SubgroupSet centralizer(const SubgroupSet& h, const Elem& a) {
  if (!h.parent()->owns(a)) throw DomainError("centralizer: element not in group");
  const Elem with[] = {a};
  return SubgroupSet::from_mask(h.parent(),
                                kernels::commuting_mask(h.parent()->elements(), with, h.mask()));
}

SubgroupSet center(const GroupRef& g) {
  return SubgroupSet::from_mask(g, kernels::commuting_mask(g->elements(), g->generators()));
}

SubgroupSet center(const SubgroupSet& h) {
  return SubgroupSet::from_mask(
      h.parent(), kernels::commuting_mask(h.parent()->elements(), h.generators(), h.mask()));
}

std::vector<std::vector<std::uint32_t>> conjugacy_classes(const SubgroupSet& h) {
  const Enumeration& el = h.parent()->elements();
  std::vector<char> seen(el.size(), 0);
  std::vector<std::vector<std::uint32_t>> classes;
  for (std::uint32_t start : h.indices()) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> cls{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      for (const Elem& s : h.generators()) {
        const std::uint32_t y = el.index_of(conj(el[cls[head]], s));
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Elem> involution_class_representatives(const GroupRef& g) {
  const Enumeration& el = g->elements();
  std::vector<Elem> reps;
  for (const auto& cls : conjugacy_classes(SubgroupSet::whole(g))) {
    if (is_involution(el[cls.front()])) reps.push_back(el[cls.front()]);
  }
  return reps;
}

SubgroupSet sylow2(const GroupRef& g) {
  const Enumeration& el = g->elements();
  const std::uint64_t target = FactoredInt(g->order()).part(2);
  const auto orders = kernels::element_orders(el);

  std::size_t best = 0;
  for (std::size_t k = 0; k < el.size(); ++k) {
    if (is_power_of_two(orders[k]) && orders[k] > orders[best]) best = k;
  }
  std::vector<Elem> gens;
  if (!is_identity(el[best])) gens.push_back(el[best]);
  SubgroupSet p = SubgroupSet::generated(g, gens);

  while (p.size() < target) {
    bool grew = false;
    for (std::size_t k = 0; k < el.size(); ++k) {
      if (!is_power_of_two(orders[k]) || p.contains_index(static_cast<std::uint32_t>(k))) continue;
      if (!p.normalized_by(el[k])) continue;
      gens.push_back(el[k]);
      p = SubgroupSet::generated(g, gens);
      grew = true;
      break;
    }
    if (!grew) {
      throw InternalError("sylow2-extension", "no normalizing 2-element extends a 2-subgroup of order " +
                                                  std::to_string(p.size()));
    }
  }
  return p;
}

SubgroupSet odd_core(const SubgroupSet& h) {
  // An element lies in the odd core iff the normal closure of its class has
  // odd order; the core is generated by all such classes.
  const GroupRef& g = h.parent();
  const Enumeration& el = g->elements();
  std::vector<Elem> accepted;
  for (const auto& cls : conjugacy_classes(h)) {
    const Elem& rep = el[cls.front()];
    if (!order(rep).is_odd() || is_identity(rep)) continue;
    std::vector<Elem> members;
    for (std::uint32_t k : cls) members.push_back(el[k]);
    if (SubgroupSet::generated(g, members).size() % 2 == 1) {
      accepted.insert(accepted.end(), members.begin(), members.end());
    }
  }
  return SubgroupSet::from_mask(g, SubgroupSet::generated(g, accepted).mask());
}

SubgroupSet odd_core(const GroupRef& g) { return odd_core(SubgroupSet::whole(g)); }

}  // namespace mbb
