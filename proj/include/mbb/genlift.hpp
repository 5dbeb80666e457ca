#pragma once

// Constructive lifts into involution centralizers for groups H x| V with H of
// odd order: the C-lift g -> g * sqrt([i, g])^-1 and the factorization of an
// element of H through the centralizers of the three involutions of a Klein
// four-group V.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mbb/backends.hpp"
#include "mbb/bbcore.hpp"

namespace mbb {

/// For H normal of odd order and i an involution with [i, g] in H: the element
/// g * h1^-1 of C(i), where h1 = odd_sqrt([i, g]).
Elem c_lift(const GroupRef& g, const SubgroupSet& h, const Elem& i, const Elem& x);

struct DecompFactor {
  Elem factor;
  Elem involution;  // element of V^# the factor commutes with
};

struct DecompTrace {
  Elem u;   // the involution of <i j^h>
  Elem h0;  // odd_sqrt of u's H-component
  Elem h1;  // odd_sqrt of the H-component of j^(h h0)
  Elem v;   // V-component of u
  Elem w;   // j^(h h0)
};

struct DecompCert {
  Elem target;
  std::vector<DecompFactor> factors;  // product in listed order is target
  DecompTrace trace;
};

/// The two involutions of V used as i and j: V's first two distinct
/// non-identity generators (topped up from V's enumeration if needed), as
/// elements of the semidirect product.
std::pair<Elem, Elem> four_group_basis(const SemidirectGroup& g);

/// `h` may be an element of the normal part or of g with trivial V-component.
/// Step assertions raise InternalError "u-not-commuting",
/// "a-not-centralizing-i" or "vprime-not-j".
DecompCert four_group_decompose(const SemidirectGroup& g, const Elem& h);

struct CertCheck {
  bool product_ok = false;
  bool commute_ok = false;
  bool involutions_ok = false;
  std::vector<std::string> problems;
  bool ok() const noexcept { return product_ok && commute_ok && involutions_ok; }
};

CertCheck validate(const SemidirectGroup& g, const DecompCert& cert);

struct GenerationReport {
  std::uint64_t normal_order = 0;
  std::uint64_t group_order = 0;
  bool exhaustive = false;
  std::uint64_t certificates_checked = 0;
  std::uint64_t certificate_failures = 0;
  std::string first_failure;
  std::vector<std::uint64_t> centralizer_orders;  // |C_H(v)| for v = i, j, ij
  std::uint64_t closure_order = 0;
  bool closure_is_normal_part = false;
  std::uint64_t clift_checked = 0;
  std::uint64_t clift_failures = 0;
  bool passed() const noexcept {
    return certificate_failures == 0 && closure_is_normal_part && clift_failures == 0;
  }
};

/// Decomposes every h in H (or `sample` seeded draws), checks that the
/// centralizers C_H(v), v in V^#, generate H, and checks c_lift(i, g) for
/// every g in G and every v in V^#.
GenerationReport generation_check(const std::shared_ptr<const SemidirectGroup>& g,
                                  std::optional<std::size_t> sample, std::uint64_t seed);

}  // namespace mbb
