#include <set>

#include "mbb/structure.hpp"

namespace mbb {

std::string_view branch_name(ZstarReport::Branch b) noexcept {
  return b == ZstarReport::Branch::a_conjugate_in_sylow ? "A" : "B";
}

bool ZstarReport::consistent() const {
  if (branch == Branch::a_conjugate_in_sylow) {
    return witness && witness_conjugator && *witness != involution &&
           conj(involution, *witness_conjugator) == *witness;
  }
  return central_mod_odd_core.value_or(false) && no_order4_in_closures.value_or(false) &&
         no_involution_in_closures.value_or(false);
}

std::vector<ZstarReport> zstar_experiment(const GroupRef& g) {
  if ((g->order() % 2 == 1)) throw PreconditionError("zstar: group order " + std::to_string(g->order()) + " is odd");
  const Enumeration& el = g->elements();
  const SubgroupSet s = sylow2(g);
  const SubgroupSet core = odd_core(g);

  std::vector<ZstarReport> out;
  for (const Elem& r : involution_class_representatives(g)) {
    ZstarReport z;
    z.group = g->name();
    z.representative = r;
    z.sylow_order = s.size();
    z.sylow_generators = s.generators();
    z.odd_core_order = core.size();

    std::set<std::uint32_t> cls;
    bool placed = false;
    for (const Elem& c : el) {
      const Elem x = conj(r, c);
      cls.insert(el.index_of(x));
      if (!placed && s.contains(x)) {
        z.involution = x;
        z.into_sylow = c;
        placed = true;
      }
    }
    if (!placed) throw InternalError("sylow-misses-class", to_string(r) + " has no conjugate in the Sylow 2-subgroup");
    z.class_size = cls.size();
    const Elem& i = z.involution;

    for (const Elem& c : el) {
      const Elem x = conj(i, c);
      if (x != i && s.contains(x)) {
        z.branch = ZstarReport::Branch::a_conjugate_in_sylow;
        z.witness = x;
        z.witness_conjugator = c;
        break;
      }
    }

    if (!z.witness) {
      z.branch = ZstarReport::Branch::b_central_mod_odd_core;
      bool central = true;
      for (const Elem& c : el) {
        if (!core.contains(comm(i, c))) {
          central = false;
          break;
        }
      }
      z.central_mod_odd_core = central;
      bool no4 = true, noinv = true;
      for (std::uint32_t k : cls) {
        const std::uint64_t o = order(mul(i, el[k])).value();
        if (o % 4 == 0) no4 = false;
        if (o % 2 == 0) noinv = false;
      }
      z.no_order4_in_closures = no4;
      z.no_involution_in_closures = noinv;
    }
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace mbb
