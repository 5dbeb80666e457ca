#pragma once

// Arithmetic inside the cyclic closure <g>: p-part splitting, square roots of
// odd-order elements, and p-elements of cosets.

#include <cstdint>

#include "mbb/backends.hpp"
#include "mbb/bbcore.hpp"

namespace mbb {

struct PSplit {
  Elem p_part;        // order a power of p
  Elem coprime_part;  // order coprime to p
};

/// The unique commuting factorization g = p_part * coprime_part inside <g>.
/// With order(g) = p^a * m: coprime_part = g^(p^a * (p^a)^-1 mod m) and
/// p_part = g^(m * m^-1 mod p^a).
PSplit p_split(const Elem& g, std::uint64_t p);

/// x = g^((o+1)/2), the unique square root of g inside <g>.
/// Throws PreconditionError when order(g) is even.
Elem odd_sqrt(const Elem& g);

/// The p-part s of `a`: s lies in <a>, is a p-element, and a*s^-1 lies in H.
/// Requires that `a` normalizes H and a^p lies in H.
Elem coset_p_element(const Elem& a, const SubgroupSet& h, std::uint64_t p);

/// x^-1 mod m for gcd(x, m) = 1; returns 0 when m == 1.
std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t m);

}  // namespace mbb
