#include "mbb/elemarith.hpp"
#include "mbb/structure.hpp"

namespace mbb {

namespace {

std::optional<Elem> eta_given_center(const SubgroupSet& z, const Elem& x, std::uint64_t p) {
  Elem xp = p_split(x, p).p_part;
  if (!z.contains(xp)) return std::nullopt;
  return xp;
}

}  // namespace

std::optional<Elem> eta(const GroupRef& g, const Elem& x, std::uint64_t p) {
  if (!g->owns(x)) throw DomainError("eta: element not in group");
  return eta_given_center(center(g), x, p);
}

EtaCensus eta_census(const GroupRef& g, std::uint64_t p) {
  if (!is_prime(p)) throw ParameterError(std::to_string(p) + " is not prime");
  const Enumeration& el = g->elements();
  const SubgroupSet z = center(g);

  EtaCensus c;
  c.p = p;
  c.group_order = el.size();
  std::vector<std::optional<std::uint32_t>> image(el.size());
  std::vector<std::uint64_t> count(el.size(), 0);
  for (std::uint32_t k = 0; k < el.size(); ++k) {
    if (auto v = eta_given_center(z, el[k], p)) {
      image[k] = el.index_of(*v);
      ++count[*image[k]];
      ++c.defined;
    }
  }
  c.total = c.defined == el.size();
  for (std::uint32_t k = 0; k < el.size(); ++k) {
    if (count[k] > 0) c.fibers.emplace_back(el[k], count[k]);
  }
  c.equinumerous = true;
  for (const auto& f : c.fibers) {
    if (f.second != c.fibers.front().second) c.equinumerous = false;
  }

  // Covariance under the central p-elements.
  std::vector<Elem> central_p;
  for (std::uint32_t k : z.indices()) {
    if (is_identity(p_split(el[k], p).coprime_part)) central_p.push_back(el[k]);
  }
  for (std::uint32_t k = 0; k < el.size(); ++k) {
    if (!image[k]) continue;
    for (const Elem& zp : central_p) {
      ++c.covariance_checked;
      const std::uint32_t zg = el.index_of(mul(zp, el[k]));
      if (!image[zg] || el[*image[zg]] != mul(zp, el[*image[k]])) ++c.covariance_failures;
    }
  }
  return c;
}

}  // namespace mbb
