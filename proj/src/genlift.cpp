#include "mbb/genlift.hpp"

#include <random>

#include "mbb/elemarith.hpp"
#include "mbb/sampler.hpp"

namespace mbb {

namespace {

Elem c_lift_unchecked(const Elem& i, const Elem& x) {
  const Elem h = comm(i, x);
  if (order(h).value() % 2 == 0) {
    throw InternalError("clift-even-commutator", "[i, g] = " + to_string(h) + " has even order");
  }
  return mul(x, inv(odd_sqrt(h)));
}

void require_odd(const SubgroupSet& h) {
  if (h.size() % 2 == 0) {
    throw PreconditionError("normal subgroup of order " + std::to_string(h.size()) + " contains involutions");
  }
}

void require_klein(const SemidirectGroup& g) {
  const GroupRef& v = g.acting_part();
  if (v->order() != 4) throw PreconditionError("acting group has order " + std::to_string(v->order()) + ", not 4");
  for (const Elem& x : v->elements()) {
    if (!is_identity(x) && !is_involution(x)) throw PreconditionError("acting group is cyclic of order 4");
  }
  if (g.normal_part()->order() % 2 == 0) {
    throw PreconditionError("normal part has even order " + std::to_string(g.normal_part()->order()));
  }
}

}  // namespace

Elem c_lift(const GroupRef& g, const SubgroupSet& h, const Elem& i, const Elem& x) {
  if (!g->owns(i) || !g->owns(x)) throw DomainError("c_lift: element not in group");
  if (!is_involution(i)) throw PreconditionError("c_lift: " + to_string(i) + " is not an involution");
  require_odd(h);
  if (!h.is_normalized_by(SubgroupSet::whole(g))) throw PreconditionError("c_lift: subgroup is not normal");
  if (!h.contains(comm(i, x))) throw PreconditionError("c_lift: [i, g] is not in the subgroup");
  return c_lift_unchecked(i, x);
}

std::pair<Elem, Elem> four_group_basis(const SemidirectGroup& g) {
  require_klein(g);
  std::vector<Elem> picked;
  auto take = [&](const Elem& v) {
    if (picked.size() < 2 && !is_identity(v) && (picked.empty() || picked[0] != v)) picked.push_back(v);
  };
  for (const Elem& v : g.acting_part()->generators()) take(v);
  for (const Elem& v : g.acting_part()->elements()) take(v);
  return {g.embed_acting(picked[0]), g.embed_acting(picked[1])};
}

DecompCert four_group_decompose(const SemidirectGroup& g, const Elem& target) {
  Elem h = target;
  if (g.normal_part()->owns(target)) {
    h = g.embed_normal(target);
  } else if (!g.owns(target)) {
    throw DomainError("four_group_decompose: element not in group");
  } else if (!is_identity(g.acting_component(target))) {
    throw PreconditionError("four_group_decompose: " + to_string(target) + " is not in the normal part");
  }
  const auto [i, j] = four_group_basis(g);

  const Elem jh = conj(j, h);
  const Elem c = mul(i, jh);
  const std::uint64_t o = order(c).value();
  if (o % 2 != 0) throw InternalError("u-not-commuting", "i j^h has odd order " + std::to_string(o));
  const Elem u = pow(c, static_cast<std::int64_t>(o / 2));
  if (!commute(u, i) || !commute(u, jh)) {
    throw InternalError("u-not-commuting", to_string(u) + " does not commute with i and j^h");
  }

  const Elem a = g.embed_normal(g.normal_component(u));
  const Elem v = g.embed_acting(g.acting_component(u));
  if (!commute(a, i)) throw InternalError("a-not-centralizing-i", to_string(a) + " does not commute with i");
  const Elem h0 = odd_sqrt(a);

  const Elem w = conj(j, mul(h, h0));
  const Elem a2 = g.embed_normal(g.normal_component(w));
  if (g.embed_acting(g.acting_component(w)) != j) {
    throw InternalError("vprime-not-j", "V-component of " + to_string(w) + " is not j");
  }
  const Elem h1 = odd_sqrt(a2);

  DecompCert cert;
  cert.target = h;
  cert.factors = {{mul(mul(h, h0), h1), j}, {inv(h1), v}, {inv(h0), i}};
  cert.trace = {u, h0, h1, v, w};
  return cert;
}

CertCheck validate(const SemidirectGroup& g, const DecompCert& cert) {
  CertCheck r;
  Elem prod = g.identity();
  for (const auto& f : cert.factors) prod = mul(prod, f.factor);
  r.product_ok = prod == cert.target;
  if (!r.product_ok) r.problems.push_back("product " + to_string(prod) + " != " + to_string(cert.target));

  r.commute_ok = true;
  r.involutions_ok = true;
  for (const auto& f : cert.factors) {
    if (!commute(f.factor, f.involution)) {
      r.commute_ok = false;
      r.problems.push_back(to_string(f.factor) + " does not commute with " + to_string(f.involution));
    }
    if (!is_involution(f.involution) || !is_identity(g.normal_component(f.involution))) {
      r.involutions_ok = false;
      r.problems.push_back(to_string(f.involution) + " is not an involution of V");
    }
  }
  return r;
}

GenerationReport generation_check(const std::shared_ptr<const SemidirectGroup>& g,
                                  std::optional<std::size_t> sample, std::uint64_t seed) {
  const auto [i, j] = four_group_basis(*g);
  const std::vector<Elem> vsharp{i, j, mul(i, j)};

  std::vector<Elem> hgens;
  for (const Elem& x : g->normal_part()->generators()) hgens.push_back(g->embed_normal(x));
  const SubgroupSet hsub = SubgroupSet::generated(g, hgens);
  require_odd(hsub);

  GenerationReport rep;
  rep.normal_order = hsub.size();
  rep.group_order = g->order();

  auto record = [&](const std::string& what) {
    if (rep.certificate_failures++ == 0) rep.first_failure = what;
  };
  auto decompose_one = [&](const Elem& h) {
    ++rep.certificates_checked;
    try {
      const CertCheck chk = validate(*g, four_group_decompose(*g, h));
      if (!chk.ok()) record(to_string(h) + ": " + chk.problems.front());
    } catch (const InternalError& e) {
      record(to_string(h) + ": " + e.what());
    }
  };

  const std::vector<Elem> hel = hsub.elements();
  rep.exhaustive = !sample || *sample >= hel.size();
  if (rep.exhaustive) {
    for (const Elem& h : hel) decompose_one(h);
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < *sample; ++s) decompose_one(hel[uniform_below(rng, hel.size())]);
  }

  std::vector<Elem> cgens;
  for (const Elem& v : vsharp) {
    const SubgroupSet c = centralizer(hsub, v);
    rep.centralizer_orders.push_back(c.size());
    cgens.insert(cgens.end(), c.generators().begin(), c.generators().end());
  }
  const SubgroupSet closure = SubgroupSet::generated(g, cgens);
  rep.closure_order = closure.size();
  rep.closure_is_normal_part = closure == hsub;

  for (const Elem& v : vsharp) {
    for (const Elem& x : g->elements()) {
      ++rep.clift_checked;
      bool ok = false;
      if (hsub.contains(comm(v, x))) {
        try {
          const Elem y = c_lift_unchecked(v, x);
          ok = commute(y, v) && hsub.contains(mul(inv(y), x));
        } catch (const InternalError&) {
          ok = false;
        }
      }
      if (!ok) ++rep.clift_failures;
    }
  }
  return rep;
}

}  // namespace mbb
