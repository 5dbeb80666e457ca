#include <random>
#include <unordered_map>

#include "mbb/sampler.hpp"
#include "mbb/structure.hpp"

namespace mbb {

bool has_elementary_abelian_sylow2(const GroupRef& g) {
  const SubgroupSet s = sylow2(g);
  if (!s.is_abelian()) return false;
  for (const Elem& x : s.elements()) {
    if (!is_identity(x) && !is_involution(x)) return false;
  }
  return true;
}

namespace {

struct Pair {
  std::uint32_t i, j, k;
};

}  // namespace

Sec6Report sec6_check(const GroupRef& g, std::optional<std::size_t> samples, std::uint64_t seed) {
  Sec6Report rep;
  const Enumeration& el = g->elements();
  if (!has_elementary_abelian_sylow2(g)) {
    rep.status = Sec6Report::Status::skipped_precondition;
    rep.reason = "Sylow 2-subgroup is not elementary abelian";
    return rep;
  }

  std::vector<std::uint32_t> invols;
  for (std::uint32_t k = 0; k < el.size(); ++k) {
    if (is_involution(el[k])) invols.push_back(k);
  }
  rep.involutions = invols.size();

  std::vector<Pair> pairs;
  for (std::uint32_t a : invols) {
    for (std::uint32_t b : invols) {
      if (a == b) continue;
      const Elem c = mul(el[a], el[b]);
      const std::uint64_t o = order(c).value();
      if (o % 2 != 0) continue;
      pairs.push_back({a, b, el.index_of(pow(c, static_cast<std::int64_t>(o / 2)))});
    }
  }
  rep.qualifying_pairs = pairs.size();

  rep.exhaustive = !samples || *samples >= pairs.size();
  if (!rep.exhaustive) {
    // Partial Fisher-Yates: the first n slots become a uniform sample.
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < *samples; ++s) {
      const std::size_t t = s + uniform_below(rng, pairs.size() - s);
      std::swap(pairs[s], pairs[t]);
    }
    pairs.resize(*samples);
  }

  std::unordered_map<std::uint32_t, std::vector<Elem>> cache;
  for (const Pair& pr : pairs) {
    auto it = cache.find(pr.k);
    if (it == cache.end()) it = cache.emplace(pr.k, centralizer(g, el[pr.k]).elements()).first;
    const Elem& i = el[pr.i];
    const Elem& j = el[pr.j];
    for (const Elem& u : it->second) {
      if (conj(i, u) == j) {
        rep.counterexamples.push_back({i, j, el[pr.k], u});
        break;
      }
    }
    ++rep.pairs_checked;
  }
  return rep;
}

}  // namespace mbb
