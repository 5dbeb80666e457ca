#include "mbb/elemarith.hpp"

namespace mbb {

namespace {
__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t m) {
  if (m == 1) return 0;
  i128 old_r = static_cast<i128>(x % m), r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    const i128 nr = old_r - q * r;
    old_r = r;
    r = nr;
    const i128 ns = old_s - q * s;
    old_s = s;
    s = ns;
  }
  if (old_r != 1) throw ParameterError("inverse_mod: arguments are not coprime");
  i128 v = old_s % static_cast<i128>(m);
  if (v < 0) v += m;
  return static_cast<std::uint64_t>(v);
}

namespace {

std::int64_t mulmod_exponent(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::int64_t>(static_cast<u128>(a) * b % mod);
}

}  // namespace

PSplit p_split(const Elem& g, std::uint64_t p) {
  if (!is_prime(p)) throw ParameterError("p_split: " + std::to_string(p) + " is not prime");
  const FactoredInt o = order(g);
  const std::uint64_t pa = o.part(p);
  const std::uint64_t m = o.value() / pa;
  const Elem& id = g.group()->identity();
  if (pa == 1) return {id, g};
  if (m == 1) return {g, id};
  // Exponents are reduced mod o; both are idempotents of Z/o.
  const std::int64_t e_coprime = mulmod_exponent(pa, inverse_mod(pa % m, m), o.value());
  const std::int64_t e_p = mulmod_exponent(m, inverse_mod(m % pa, pa), o.value());
  return {pow(g, e_p), pow(g, e_coprime)};
}

Elem odd_sqrt(const Elem& g) {
  const FactoredInt o = order(g);
  if (!o.is_odd()) {
    throw PreconditionError("odd_sqrt: element of even order " + std::to_string(o.value()));
  }
  return pow(g, static_cast<std::int64_t>((o.value() + 1) / 2));
}

Elem coset_p_element(const Elem& a, const SubgroupSet& h, std::uint64_t p) {
  if (!h.parent()->owns(a)) throw DomainError("coset_p_element: element not in the subgroup's parent");
  if (!h.normalized_by(a)) throw PreconditionError("coset_p_element: a does not normalize H");
  if (!h.contains(pow(a, static_cast<std::int64_t>(p)))) {
    throw PreconditionError("coset_p_element: a^p is not in H");
  }
  const Elem s = p_split(a, p).p_part;
  if (!h.contains(mul(a, inv(s)))) {
    throw InternalError("coset-membership", "a * s^-1 escaped H");
  }
  return s;
}

}  // namespace mbb
