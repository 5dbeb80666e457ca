#pragma once

// Concrete group constructions and exact enumeration-based scans.
//
// Group-spec DSL:
//   sym:<n>  alt:<n>  cyc:<n>  dih:<n>  psl2:<p>
//   perm:<degree>:<cycles;cycles;...>     e.g. perm:5:(1 2);(1 2 3 4 5)
//   table:<path>   first line n, then n rows of n 0-based indices, identity 0
//   sd:<path>      semidirect product file (see load_semidirect)
//
// dih:n has order 2n. psl2:p is PSL(2,p) on the p+1 points of the projective
// line (point x is labelled x+1, infinity is p+1), generated by x -> x+1 and
// x -> -1/x.

#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mbb/bbcore.hpp"

namespace mbb {

// ---------------------------------------------------------------------------
// Permutation groups

/// 0-based image array from cycle notation. `offset` shifts ParseError
/// positions so errors point into an enclosing string.
std::vector<std::uint32_t> parse_cycles(std::string_view text, std::uint32_t degree,
                                        std::size_t offset = 0);
/// Disjoint cycle notation with 1-based points, fixed points omitted, "()"
/// for the identity.
std::string format_cycles(std::span<const std::uint32_t> images);

class PermGroup final : public Group {
 public:
  /// `generators` are 0-based image arrays. When `known_order` is absent the
  /// order is found by closure, which must stay within `cap`.
  static std::shared_ptr<const PermGroup> create(std::string name, std::uint32_t degree,
                                                 std::vector<std::vector<std::uint32_t>> generators,
                                                 std::optional<std::uint64_t> known_order,
                                                 std::uint64_t cap = kDefaultCap);

  std::uint32_t degree() const noexcept { return degree_; }
  Elem from_images(std::vector<std::uint32_t> images) const;

  /// lcm of cycle lengths.
  FactoredInt order_of(const Elem& g) const override;
  std::string format(const Elem& g) const override;
  Elem parse(std::string_view text) const override;

 protected:
  Payload mul_payload(const Payload& a, const Payload& b) const override;
  Payload inv_payload(const Payload& a) const override;

 private:
  PermGroup(std::string name, std::uint32_t degree, std::uint64_t cap);
  std::uint32_t degree_;
};

// ---------------------------------------------------------------------------
// Cayley-table groups

class TableGroup final : public Group {
 public:
  /// Validates the Latin-square property, identity at index 0, and
  /// associativity (exhaustive for n <= 256, 200000 seeded triples above).
  static std::shared_ptr<const TableGroup> create(std::string name,
                                                  std::vector<std::vector<std::uint32_t>> table,
                                                  std::uint64_t cap = kDefaultCap);
  static std::shared_ptr<const TableGroup> load(const std::filesystem::path& path,
                                                std::string name, std::uint64_t cap = kDefaultCap);

  std::uint32_t index(const Elem& g) const;
  Elem at(std::uint32_t k) const;

  std::string format(const Elem& g) const override;
  Elem parse(std::string_view text) const override;

 protected:
  Payload mul_payload(const Payload& a, const Payload& b) const override;
  Payload inv_payload(const Payload& a) const override;

 private:
  TableGroup(std::string name, std::vector<std::vector<std::uint32_t>> table, std::uint64_t cap);
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::uint32_t> inverse_;
};

// ---------------------------------------------------------------------------
// Semidirect products H x| V

/// Elements are pairs (h, v) with (h1, v1)(h2, v2) = (h1 * act(v1, h2), v1 v2),
/// so v h v^-1 = act(v, h). Both factors must be enumerable.
class SemidirectGroup final : public Group {
 public:
  /// `action[k]` lists the images of H's generators under V's k-th generator.
  static std::shared_ptr<const SemidirectGroup> create(std::string name, GroupRef normal,
                                                       GroupRef acting,
                                                       std::vector<std::vector<Elem>> action,
                                                       std::uint64_t cap = kDefaultCap);

  const GroupRef& normal_part() const noexcept { return normal_; }
  const GroupRef& acting_part() const noexcept { return acting_; }

  Elem embed_normal(const Elem& h) const;
  Elem embed_acting(const Elem& v) const;
  Elem normal_component(const Elem& g) const;
  /// The quotient map G -> V.
  Elem acting_component(const Elem& g) const;
  /// The automorphism attached to v, applied to h.
  Elem act(const Elem& v, const Elem& h) const;

  std::string format(const Elem& g) const override;
  /// "[<h literal> | <v literal>]"
  Elem parse(std::string_view text) const override;

 protected:
  Payload mul_payload(const Payload& a, const Payload& b) const override;
  Payload inv_payload(const Payload& a) const override;

 private:
  SemidirectGroup(std::string name, GroupRef normal, GroupRef acting, std::uint64_t cap);
  std::uint32_t h_mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t v_mul(std::uint32_t a, std::uint32_t b) const;

  GroupRef normal_;
  GroupRef acting_;
  // alpha_[v][h] = index of act(v, h) in H's enumeration
  std::vector<std::vector<std::uint32_t>> alpha_;
  std::vector<std::uint32_t> h_inv_;
  std::vector<std::uint32_t> v_inv_;
};

/// Semidirect spec file, one directive per line, '#' starts a comment:
///   normal: <group-spec>
///   acting: <group-spec>
///   action: <img>;<img>;...      one line per generator of the acting group,
///                                 listing images of the normal part's generators
/// Relative table:/sd: paths resolve against the file's directory.
std::shared_ptr<const SemidirectGroup> load_semidirect(const std::filesystem::path& path,
                                                       std::string name,
                                                       std::uint64_t cap = kDefaultCap);

// ---------------------------------------------------------------------------
// Group-spec DSL

struct GroupPlan {
  enum class Kind { sym, alt, cyc, dih, psl2, perm, table, sd };
  Kind kind = Kind::sym;
  std::string text;
  std::uint64_t n = 0;                   // sym/alt/cyc/dih parameter, psl2 prime, perm degree
  std::vector<std::string> generators;   // perm: one cycle-notation string per generator
  std::string path;                      // table/sd
};

/// Grammar and semantic validation (primality, ranges). No files are read.
GroupPlan parse_group_spec(std::string_view spec);
GroupRef build_group(const GroupPlan& plan, std::uint64_t cap = kDefaultCap,
                     const std::filesystem::path& base_dir = {});
GroupRef make_named(std::string_view spec, std::uint64_t cap = kDefaultCap,
                    const std::filesystem::path& base_dir = {});
std::shared_ptr<const SemidirectGroup> make_semidirect(GroupRef normal, GroupRef acting,
                                                       std::vector<std::vector<Elem>> action,
                                                       std::uint64_t cap = kDefaultCap);

// ---------------------------------------------------------------------------
// Explicit subgroups of enumerable groups

class SubgroupSet {
 public:
  /// The whole group.
  static SubgroupSet whole(GroupRef parent);
  /// Closure of `gens`.
  static SubgroupSet generated(GroupRef parent, std::span<const Elem> gens);
  /// Membership mask over parent().elements(); verified to be a subgroup
  /// (throws InternalError "subgroup-closure" otherwise).
  static SubgroupSet from_mask(GroupRef parent, std::vector<char> mask);

  const GroupRef& parent() const noexcept { return parent_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const Elem& e) const;
  bool contains_index(std::uint32_t k) const noexcept { return mask_[k] != 0; }
  const std::vector<char>& mask() const noexcept { return mask_; }
  /// Ascending indices into parent().elements().
  const std::vector<std::uint32_t>& indices() const noexcept { return members_; }
  std::vector<Elem> elements() const;
  const std::vector<Elem>& generators() const noexcept { return gens_; }

  bool is_abelian() const;
  bool is_subset_of(const SubgroupSet& other) const;
  /// Closed under conjugation by `by`'s generators.
  bool is_normalized_by(const SubgroupSet& by) const;
  bool normalized_by(const Elem& g) const;

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.parent_ == b.parent_ && a.mask_ == b.mask_;
  }

 private:
  SubgroupSet(GroupRef parent, std::vector<char> mask, std::vector<Elem> gens);

  GroupRef parent_;
  std::vector<char> mask_;
  std::vector<std::uint32_t> members_;
  std::vector<Elem> gens_;
};

/// C_G(a).
SubgroupSet centralizer(const GroupRef& g, const Elem& a);
/// C_H(a) for a subgroup H (a need not lie in H).
SubgroupSet centralizer(const SubgroupSet& h, const Elem& a);
SubgroupSet center(const GroupRef& g);
SubgroupSet center(const SubgroupSet& h);
/// One Sylow 2-subgroup, grown greedily from a 2-element of maximal order
/// by adjoining 2-elements that normalize the current 2-subgroup.
SubgroupSet sylow2(const GroupRef& g);
/// Largest normal subgroup of odd order.
SubgroupSet odd_core(const GroupRef& g);
SubgroupSet odd_core(const SubgroupSet& h);
/// Conjugacy classes of H (orbits under conjugation by H's generators), as
/// ascending parent indices; classes ordered by smallest member.
std::vector<std::vector<std::uint32_t>> conjugacy_classes(const SubgroupSet& h);
/// One representative (smallest index) per class of involutions of G.
std::vector<Elem> involution_class_representatives(const GroupRef& g);

}  // namespace mbb
