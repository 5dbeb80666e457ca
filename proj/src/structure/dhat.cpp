#include <algorithm>
#include <random>

#include "mbb/kernels.hpp"
#include "mbb/sampler.hpp"
#include "mbb/structure.hpp"

namespace mbb {

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t exponent_from_orders(const std::vector<std::uint64_t>& orders, std::uint64_t p) {
  std::uint64_t q = 1;
  for (std::uint64_t o : orders) {
    if (is_power_of(o, p)) q = std::max(q, o);
  }
  return q;
}

/// Inverters of a: {w : a^w = a^-1}.
std::vector<std::uint32_t> inverters(const Enumeration& el, const Elem& a) {
  const Elem a_inv = inv(a);
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 0; k < el.size(); ++k) {
    if (conj(a, el[k]) == a_inv) out.push_back(k);
  }
  return out;
}

std::vector<char> cyclic_mask(const Enumeration& el, const Elem& a) {
  std::vector<char> m(el.size(), 0);
  Elem x = a.group()->identity();
  do {
    m[el.index_of(x)] = 1;
    x = mul(x, a);
  } while (!is_identity(x));
  return m;
}

void tally(PropertyTally& t, bool ok, const std::string& what) {
  ++t.checked;
  if (!ok) {
    if (t.failures == 0) t.first_failure = what;
    ++t.failures;
  }
}

}  // namespace

std::uint64_t p_torsion_exponent(const GroupRef& g, std::uint64_t p) {
  if (!is_prime(p)) throw ParameterError(std::to_string(p) + " is not prime");
  return exponent_from_orders(kernels::element_orders(g->elements()), p);
}

DhatResult dhat_with_exponent(const GroupRef& g, const Elem& a, std::uint64_t q) {
  if (!g->owns(a)) throw DomainError("dhat: element not in group");
  const Enumeration& el = g->elements();
  SubgroupSet d1 = center(centralizer(g, a));

  std::vector<Elem> gens2{a};
  for (const Elem& x : d1.generators()) gens2.push_back(pow(x, static_cast<std::int64_t>(q)));
  SubgroupSet d2 = SubgroupSet::generated(g, gens2);

  const auto w = inverters(el, a);
  std::vector<char> mask3(el.size(), 0);
  for (std::uint32_t k : d2.indices()) {
    const Elem x_inv = inv(el[k]);
    bool keep = true;
    for (std::uint32_t wk : w) {
      if (conj(el[k], el[wk]) != x_inv) {
        keep = false;
        break;
      }
    }
    mask3[k] = keep ? 1 : 0;
  }
  SubgroupSet d3 = SubgroupSet::from_mask(g, std::move(mask3));
  return DhatResult{a, std::move(d1), std::move(d2), std::move(d3), FactoredInt(q)};
}

DhatResult dhat(const GroupRef& g, const Elem& a, std::uint64_t p) {
  return dhat_with_exponent(g, a, p_torsion_exponent(g, p));
}

bool DhatPropertyReport::all_passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyTally& t) { return t.passed(); });
}

DhatPropertyReport dhat_property_check(const GroupRef& g, std::uint64_t p,
                                       std::size_t conjugacy_samples, std::uint64_t seed) {
  if (!is_prime(p)) throw ParameterError(std::to_string(p) + " is not prime");
  const Enumeration& el = g->elements();
  const auto orders = kernels::element_orders(el);
  const std::uint64_t q = exponent_from_orders(orders, p);

  DhatPropertyReport rep;
  rep.p = p;
  rep.q = q;
  rep.elements = el.size();
  rep.properties = {{"contains_cyclic_closure", 0, 0, {}}, {"equal_closures_equal_hulls", 0, 0, {}},
                    {"conjugation_covariant", 0, 0, {}},   {"abelian", 0, 0, {}},
                    {"same_p_elements", 0, 0, {}},         {"inverters_invert", 0, 0, {}}};
  PropertyTally& p1 = rep.properties[0];
  PropertyTally& p2 = rep.properties[1];
  PropertyTally& p3 = rep.properties[2];
  PropertyTally& p4 = rep.properties[3];
  PropertyTally& p5 = rep.properties[4];
  PropertyTally& p6 = rep.properties[5];

  std::vector<std::vector<char>> hull(el.size());
  for (std::size_t k = 0; k < el.size(); ++k) hull[k] = dhat_with_exponent(g, el[k], q).d3.mask();

  std::mt19937_64 rng(seed);
  for (std::uint32_t k = 0; k < el.size(); ++k) {
    const Elem& a = el[k];
    const std::string label = to_string(a);
    const auto cyc = cyclic_mask(el, a);
    const auto& h = hull[k];

    tally(p1, std::equal(cyc.begin(), cyc.end(), h.begin(), [](char c, char d) { return !c || d; }),
          "<a> not inside dhat(a) for a = " + label);

    const std::uint64_t o = orders[k];
    for (std::uint64_t e = 2; e < o; ++e) {
      if (gcd_u64(e, o) != 1) continue;
      const std::uint32_t b = el.index_of(pow(a, static_cast<std::int64_t>(e)));
      tally(p2, hull[b] == h, "dhat(a^" + std::to_string(e) + ") != dhat(a) for a = " + label);
    }

    std::vector<Elem> conjugators = g->generators();
    for (std::size_t s = 0; s < conjugacy_samples; ++s) conjugators.push_back(el[uniform_below(rng, el.size())]);
    for (const Elem& c : conjugators) {
      std::vector<char> image(el.size(), 0);
      for (std::uint32_t m = 0; m < el.size(); ++m) {
        if (h[m]) image[el.index_of(conj(el[m], c))] = 1;
      }
      const std::uint32_t ac = el.index_of(conj(a, c));
      tally(p3, hull[ac] == image, "dhat(a^g) != dhat(a)^g for a = " + label + ", g = " + to_string(c));
    }

    std::vector<Elem> members;
    for (std::uint32_t m = 0; m < el.size(); ++m)
      if (h[m]) members.push_back(el[m]);
    bool abelian = true;
    for (std::size_t x = 0; x < members.size() && abelian; ++x)
      for (std::size_t y = x + 1; y < members.size() && abelian; ++y)
        abelian = commute(members[x], members[y]);
    tally(p4, abelian, "dhat(a) not abelian for a = " + label);

    bool same_p = true;
    for (std::uint32_t m = 0; m < el.size(); ++m) {
      if (!is_power_of(orders[m], p)) continue;
      if (static_cast<bool>(h[m]) != static_cast<bool>(cyc[m])) same_p = false;
    }
    tally(p5, same_p, "p-elements of dhat(a) differ from those of <a> for a = " + label);

    bool inverted = true;
    for (std::uint32_t wk : inverters(el, a)) {
      for (const Elem& x : members) {
        if (conj(x, el[wk]) != inv(x)) inverted = false;
      }
    }
    tally(p6, inverted, "an inverter of a does not invert dhat(a) for a = " + label);
  }
  return rep;
}

}  // namespace mbb
