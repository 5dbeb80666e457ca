#include "mbb/backends.hpp"

namespace mbb {

namespace {

/// Extends `members` (already a subgroup, closed under `gens` minus the last
/// entry) to the closure under all of `gens`. New indices are marked in `in`.
/// Returns false as soon as an element outside `allowed` appears.
bool extend_closure(const Group& g, const Enumeration& el, const std::vector<Elem>& gens,
                    std::vector<std::uint32_t>& members, std::vector<char>& in,
                    const std::vector<char>* allowed) {
  // Cosets of the old subgroup are reached by multiplying every current
  // element by the generators; BFS over the growing list suffices.
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const Elem& s : gens) {
      const std::uint32_t y = el.index_of(g.mul(el[members[head]], s));
      if (in[y]) continue;
      if (allowed && !(*allowed)[y]) return false;
      in[y] = 1;
      members.push_back(y);
    }
  }
  return true;
}

}  // namespace

SubgroupSet::SubgroupSet(GroupRef parent, std::vector<char> mask, std::vector<Elem> gens)
    : parent_(std::move(parent)), mask_(std::move(mask)), gens_(std::move(gens)) {
  for (std::uint32_t k = 0; k < mask_.size(); ++k) {
    if (mask_[k]) members_.push_back(k);
  }
}

SubgroupSet SubgroupSet::whole(GroupRef parent) {
  const std::size_t n = parent->elements().size();
  std::vector<Elem> gens = parent->generators();
  return SubgroupSet(std::move(parent), std::vector<char>(n, 1), std::move(gens));
}

SubgroupSet SubgroupSet::generated(GroupRef parent, std::span<const Elem> gens) {
  const Enumeration& el = parent->elements();
  std::vector<Elem> kept;
  for (const Elem& s : gens) {
    if (!parent->owns(s)) throw DomainError("generator does not belong to the parent group");
    if (!is_identity(s)) kept.push_back(s);
  }
  std::vector<char> in(el.size(), 0);
  std::vector<std::uint32_t> members{el.index_of(parent->identity())};
  in[members[0]] = 1;
  extend_closure(*parent, el, kept, members, in, nullptr);
  return SubgroupSet(std::move(parent), std::move(in), std::move(kept));
}

SubgroupSet SubgroupSet::from_mask(GroupRef parent, std::vector<char> mask) {
  const Enumeration& el = parent->elements();
  if (mask.size() != el.size()) throw ParameterError("subgroup mask has wrong size");
  const std::uint32_t id = el.index_of(parent->identity());
  if (!mask[id]) throw InternalError("subgroup-closure", "set does not contain the identity");

  std::vector<Elem> gens;
  std::vector<char> in(el.size(), 0);
  std::vector<std::uint32_t> members{id};
  in[id] = 1;
  for (std::uint32_t k = 0; k < mask.size(); ++k) {
    if (!mask[k] || in[k]) continue;
    gens.push_back(el[k]);
    if (!extend_closure(*parent, el, gens, members, in, &mask)) {
      throw InternalError("subgroup-closure", "set is not closed under multiplication");
    }
  }
  return SubgroupSet(std::move(parent), std::move(mask), std::move(gens));
}

bool SubgroupSet::contains(const Elem& e) const {
  auto k = parent_->elements().find(e);
  return k && mask_[*k];
}

std::vector<Elem> SubgroupSet::elements() const {
  const Enumeration& el = parent_->elements();
  std::vector<Elem> out;
  out.reserve(members_.size());
  for (std::uint32_t k : members_) out.push_back(el[k]);
  return out;
}

bool SubgroupSet::is_abelian() const {
  for (std::size_t a = 0; a < gens_.size(); ++a) {
    for (std::size_t b = a + 1; b < gens_.size(); ++b) {
      if (!commute(gens_[a], gens_[b])) return false;
    }
  }
  return true;
}

bool SubgroupSet::is_subset_of(const SubgroupSet& other) const {
  if (parent_ != other.parent_) return false;
  for (std::uint32_t k : members_) {
    if (!other.mask_[k]) return false;
  }
  return true;
}

bool SubgroupSet::normalized_by(const Elem& g) const {
  for (const Elem& s : gens_) {
    if (!contains(conj(s, g))) return false;
  }
  return true;
}

bool SubgroupSet::is_normalized_by(const SubgroupSet& by) const {
  for (const Elem& g : by.generators()) {
    if (!normalized_by(g)) return false;
  }
  return true;
}

}  // namespace mbb
