#pragma once

// Independent oracles shared by the unit tests. Nothing here calls the
// library's scans; everything is recomputed from raw multiplication.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "mbb/backends.hpp"
#include "mbb/bbcore.hpp"

namespace testing {

inline mbb::GroupRef named(const std::string& spec, std::uint64_t cap = mbb::kDefaultCap) {
  return mbb::make_named(spec, cap, MBB_TEST_FIXTURES);
}

inline mbb::Elem el(const mbb::GroupRef& g, const std::string& literal) { return g->parse_member(literal); }

/// Product of permutations by following points: left factor first.
inline std::vector<std::uint32_t> point_product(const std::vector<std::uint32_t>& a,
                                                const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

inline std::uint64_t brute_order(const mbb::Elem& g) {
  std::uint64_t n = 1;
  for (mbb::Elem x = g; !mbb::is_identity(x); x = mbb::mul(x, g)) ++n;
  return n;
}

/// <g> listed as g^0, g^1, ..., g^(o-1).
inline std::vector<mbb::Elem> powers(const mbb::Elem& g) {
  std::vector<mbb::Elem> out{g.group()->identity()};
  for (mbb::Elem x = g; !mbb::is_identity(x); x = mbb::mul(x, g)) out.push_back(x);
  return out;
}

inline bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

/// Conjugacy classes by orbit computation over every element.
inline std::vector<std::vector<std::uint32_t>> brute_classes(const mbb::GroupRef& g) {
  const auto& e = g->elements();
  std::vector<char> seen(e.size(), 0);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t k = 0; k < e.size(); ++k) {
    if (seen[k]) continue;
    std::set<std::uint32_t> orbit;
    for (const auto& c : e) orbit.insert(e.index_of(mbb::conj(e[k], c)));
    for (auto m : orbit) seen[m] = 1;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

inline bool is_subgroup_mask(const mbb::GroupRef& g, const std::vector<char>& mask) {
  const auto& e = g->elements();
  for (std::uint32_t a = 0; a < e.size(); ++a) {
    if (!mask[a]) continue;
    for (std::uint32_t b = 0; b < e.size(); ++b) {
      if (mask[b] && !mask[e.index_of(mbb::mul(e[a], e[b]))]) return false;
    }
  }
  return true;
}

/// Largest odd-order normal subgroup by trying every union of conjugacy
/// classes that contains the identity. Exponential in the class count.
inline std::vector<char> brute_odd_core(const mbb::GroupRef& g) {
  const auto& e = g->elements();
  const auto classes = brute_classes(g);
  std::vector<std::size_t> odd;  // classes of odd-order elements, identity excluded
  std::size_t id_class = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& x = e[classes[c][0]];
    if (mbb::is_identity(x)) id_class = c;
    else if (brute_order(x) % 2 == 1) odd.push_back(c);
  }
  std::vector<char> best(e.size(), 0);
  best[classes[id_class][0]] = 1;
  std::size_t best_size = 1;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << odd.size()); ++bits) {
    std::vector<char> mask(e.size(), 0);
    mask[classes[id_class][0]] = 1;
    std::size_t size = 1;
    for (std::size_t k = 0; k < odd.size(); ++k) {
      if (!(bits >> k & 1)) continue;
      for (auto m : classes[odd[k]]) mask[m] = 1;
      size += classes[odd[k]].size();
    }
    if (size % 2 == 0 || size <= best_size) continue;
    if (is_subgroup_mask(g, mask)) {
      best = mask;
      best_size = size;
    }
  }
  return best;
}

inline const std::vector<std::string>& small_corpus() {
  static const std::vector<std::string> c{
      "sym:3", "sym:4", "sym:5", "alt:4", "alt:5", "dih:4", "dih:5", "dih:6", "dih:12", "cyc:2", "cyc:12",
      "cyc:15", "psl2:7", "table:sl23.table", "perm:9:(1 2);(3 4 5 6 7 8 9);(4 5 7)(6 9 8)",
      "perm:7:(1 2 3);(2 3)(4 5 6 7)", "sd:c5_c2.sd", std::string("sd:") + MBB_DATA_DIR + "/fixtures/c3c3_diag.sd"};
  return c;
}

}  // namespace testing
