#include "mbb/invol.hpp"

#include <algorithm>

#include "mbb/backends.hpp"
#include "mbb/elemarith.hpp"
#include "mbb/kernels.hpp"

namespace mbb {

std::string_view branch_name(ZetaBranch b) noexcept { return b == ZetaBranch::z0 ? "Z0" : "Z1"; }

namespace {

void require_involution(const Elem& i, const char* op) {
  if (!is_involution(i)) {
    throw PreconditionError(std::string(op) + ": " + to_string(i) + " is not an involution");
  }
}

}  // namespace

ZetaResult zeta(const Elem& i, const Elem& g) {
  require_involution(i, "zeta");
  ZetaResult r;
  r.base = mul(i, conj(i, g));
  r.base_order = order(r.base);
  const std::uint64_t o = r.base_order.value();
  if (o % 2 == 0) {
    r.branch = ZetaBranch::z0;
    r.value = pow(r.base, static_cast<std::int64_t>(o / 2));
  } else {
    r.branch = ZetaBranch::z1;
    r.value = mul(g, inv(odd_sqrt(r.base)));
  }
  return r;
}

DihedralResult dihedral_conj(const Elem& i, const Elem& j) {
  require_involution(i, "dihedral_conj");
  require_involution(j, "dihedral_conj");
  DihedralResult r;
  const Elem c = mul(i, j);
  r.product_order = order(c);
  const std::uint64_t o = r.product_order.value();
  if (o % 2 == 1) {
    r.witness = odd_sqrt(c);
  } else {
    r.central_involution = pow(c, static_cast<std::int64_t>(o / 2));
  }
  return r;
}

std::vector<BraySample> bray_sample(const Elem& i, PrSampler& sampler, std::size_t n) {
  require_involution(i, "bray_sample");
  if (n == 0) throw ParameterError("bray_sample: n must be at least 1");
  if (sampler.group().get() != i.group()) throw DomainError("bray_sample: sampler draws from another group");
  std::vector<BraySample> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const ZetaResult z = zeta(i, sampler.next());
    if (!commute(z.value, i)) {
      throw InternalError("bray-not-centralizing", to_string(z.value) + " does not commute with " + to_string(i));
    }
    out.push_back({z.value, z.branch});
  }
  return out;
}

FiberCensus zeta1_fiber_census(const GroupRef& g, const Elem& i) {
  require_involution(i, "zeta1_fiber_census");
  const Enumeration& el = g->elements();
  const SubgroupSet ci = centralizer(g, i);
  const kernels::ZetaScan scan = kernels::zeta_scan(el, i);

  FiberCensus c;
  c.group_order = el.size();
  c.centralizer_order = ci.size();
  std::vector<std::uint64_t> count(el.size(), 0);
  for (std::size_t k = 0; k < el.size(); ++k) {
    if (scan.branch[k] == kernels::ZetaScan::kZ1) {
      ++c.domain_size;
      ++count[scan.value[k]];
    } else {
      ++c.z0_count;
    }
  }
  bool outside = false;
  for (std::size_t k = 0; k < el.size(); ++k) {
    if (count[k] > 0 && !ci.contains_index(static_cast<std::uint32_t>(k))) outside = true;
  }
  bool all_hit = true;
  for (std::uint32_t k : ci.indices()) {
    c.fibers.push_back(count[k]);
    if (count[k] == 0) all_hit = false;
  }
  c.uniform = !outside && std::all_of(c.fibers.begin(), c.fibers.end(),
                                      [&](std::uint64_t f) { return f == c.fibers.front(); });
  if (c.uniform) c.fiber_size = c.fibers.front();
  c.image_is_centralizer = !outside && (c.domain_size == 0 || all_hit);
  return c;
}

}  // namespace mbb
