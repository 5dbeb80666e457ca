#pragma once

// Structural maps and experiments on enumerable groups. These are finite
// analogs: cyclic closures <g> stand in for definable closures, the odd core
// for the connected component of an involution centralizer, and cardinality
// fractions for rank/genericity. Every report carries that label.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbb/backends.hpp"
#include "mbb/bbcore.hpp"

namespace mbb {

inline constexpr std::string_view kFiniteAnalogLabel = "finite analog";

// ---------------------------------------------------------------------------
// dhat: abelian, conjugation-covariant hull of <a>

/// Largest order of a p-element of g (the p-torsion exponent).
std::uint64_t p_torsion_exponent(const GroupRef& g, std::uint64_t p);

struct DhatResult {
  Elem base;
  SubgroupSet d1;  // Z(C(a))
  SubgroupSet d2;  // d1^q <a>
  SubgroupSet d3;  // elements of d2 inverted by every inverter of a
  FactoredInt q;
};

DhatResult dhat(const GroupRef& g, const Elem& a, std::uint64_t p);
/// Same construction with an explicit exponent q (any multiple of the
/// p-torsion exponent is admissible).
DhatResult dhat_with_exponent(const GroupRef& g, const Elem& a, std::uint64_t q);

struct PropertyTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  bool passed() const noexcept { return failures == 0; }
};

struct DhatPropertyReport {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t elements = 0;
  // (1) <a> <= dhat(a); (2) <a> = <b> => equal; (3) dhat(a^g) = dhat(a)^g;
  // (4) abelian; (5) same p-elements as <a>; (6) inverters of a invert dhat(a).
  std::vector<PropertyTally> properties;
  bool all_passed() const;
};

/// Exhaustive over a; conjugation covariance against every generator of g
/// plus `conjugacy_samples` seeded random conjugators per element.
DhatPropertyReport dhat_property_check(const GroupRef& g, std::uint64_t p,
                                       std::size_t conjugacy_samples, std::uint64_t seed);

// ---------------------------------------------------------------------------
// eta: p-part projection into the centre

/// The p-part of x when it is central, otherwise empty.
std::optional<Elem> eta(const GroupRef& g, const Elem& x, std::uint64_t p);

struct EtaCensus {
  std::uint64_t p = 0;
  std::uint64_t group_order = 0;
  std::uint64_t defined = 0;
  bool total = false;
  /// (image element, fiber size), in enumeration order of the image.
  std::vector<std::pair<Elem, std::uint64_t>> fibers;
  bool equinumerous = false;
  std::uint64_t covariance_checked = 0;
  std::uint64_t covariance_failures = 0;
};

EtaCensus eta_census(const GroupRef& g, std::uint64_t p);

// ---------------------------------------------------------------------------
// Coverage by conjugates of i * O(C(i))

struct CoverageReport {
  Elem involution;
  std::uint64_t group_order = 0;
  std::uint64_t centralizer_order = 0;
  std::uint64_t core_order = 0;        // |O(C(i))|
  std::uint64_t coset_size = 0;        // |X| = |i O(C(i))|
  std::uint64_t conjugate_count = 0;   // distinct X^g
  std::uint64_t union_size = 0;
  bool pairwise_disjoint = false;
  bool counting_identity = false;      // union_size == conjugate_count * coset_size
  double fraction() const { return group_order ? double(union_size) / double(group_order) : 0.0; }
};

CoverageReport coverage(const GroupRef& g, const Elem& i);

// ---------------------------------------------------------------------------
// Involution pairs whose product has even order

struct Sec6Counterexample {
  Elem i, j, k, u;
};

struct Sec6Report {
  enum class Status { checked, skipped_precondition };
  Status status = Status::checked;
  std::string reason;
  std::uint64_t involutions = 0;
  std::uint64_t qualifying_pairs = 0;  // ordered (i, j) with an involution in <ij>
  std::uint64_t pairs_checked = 0;
  bool exhaustive = false;
  std::vector<Sec6Counterexample> counterexamples;
};

/// For pairs of involutions (i, j) with an involution k in <ij>, verifies that
/// no u in C(k) conjugates i to j. Requires elementary abelian Sylow
/// 2-subgroups (otherwise status = skipped_precondition). `samples` empty
/// means every qualifying pair.
Sec6Report sec6_check(const GroupRef& g, std::optional<std::size_t> samples, std::uint64_t seed);

bool has_elementary_abelian_sylow2(const GroupRef& g);

// ---------------------------------------------------------------------------
// Isolated-involution dichotomy

struct ZstarReport {
  enum class Branch { a_conjugate_in_sylow, b_central_mod_odd_core };
  std::string group;
  Elem representative;        // class representative as enumerated
  Elem involution;            // conjugate of the representative lying in S
  Elem into_sylow;            // g with representative^g = involution
  std::uint64_t class_size = 0;
  std::uint64_t sylow_order = 0;
  std::vector<Elem> sylow_generators;
  std::uint64_t odd_core_order = 0;
  Branch branch = Branch::a_conjugate_in_sylow;
  // Branch A: involution^witness_conjugator = witness, witness in S, != involution.
  std::optional<Elem> witness;
  std::optional<Elem> witness_conjugator;
  // Branch B checks.
  std::optional<bool> central_mod_odd_core;  // [i, g] in O(G) for all g
  std::optional<bool> no_order4_in_closures;
  std::optional<bool> no_involution_in_closures;

  bool consistent() const;
};

std::string_view branch_name(ZstarReport::Branch b) noexcept;

/// One report per conjugacy class of involutions. Requires |G| even.
std::vector<ZstarReport> zstar_experiment(const GroupRef& g);

}  // namespace mbb
