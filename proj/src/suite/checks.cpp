#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "mbb/elemarith.hpp"
#include "mbb/genlift.hpp"
#include "mbb/invol.hpp"
#include "mbb/kernels.hpp"
#include "mbb/sampler.hpp"
#include "mbb/structure.hpp"
#include "mbb/suite.hpp"

namespace mbb::suite {

using nlohmann::json;

namespace {

// Size limits above which a check samples or skips.
constexpr std::uint64_t kZetaExhaustive = 2000;
constexpr std::uint64_t kFiberLimit = 2000;
constexpr std::uint64_t kDihedralLimit = 1000;
constexpr std::uint64_t kDhatLimit = 500;
constexpr std::uint64_t kSec6Exhaustive = 500;
constexpr std::uint64_t kGencheckExhaustive = 2000;
constexpr std::uint64_t kSamplerLimit = 120;
// TV distance is recorded against this bound but not asserted: 100|G| uniform
// draws already give an expected TV near 0.04. The asserted test is a
// chi-square goodness of fit at upper-tail probability 1e-4.
constexpr double kSamplerTvBound = 0.05;
constexpr double kSamplerZBound = 3.719;

/// Counts checks and remembers the first failing one.
struct Asserter {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first;
  void operator()(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (!ok && failures++ == 0) first = what();
  }
  void apply(CheckOutcome& o) const {
    o.result["assertions_checked"] = checked;
    o.result["assertions_failed"] = failures;
    if (failures > 0) {
      o.status = Status::fail;
      o.assertion = first;
    }
  }
};

CheckOutcome skipped(std::string reason) {
  CheckOutcome o;
  o.status = Status::skipped;
  o.reason = std::move(reason);
  return o;
}

std::uint64_t group_size(const CheckContext& ctx) { return ctx.group->order(); }

std::vector<Elem> powers(const Elem& g) {
  std::vector<Elem> out{g.group()->identity()};
  for (Elem x = g; !is_identity(x); x = mul(x, g)) out.push_back(x);
  return out;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// ---------------------------------------------------------------------------

CheckOutcome check_order(const CheckContext& ctx) {
  const GroupRef& g = ctx.group;
  const Enumeration& el = g->elements();
  const auto orders = kernels::element_orders(el);
  const std::uint64_t n = g->order();
  Asserter check;
  check(el.size() == n, [&] { return "enumeration has " + std::to_string(el.size()) + " elements"; });
  for (std::size_t k = 0; k < el.size(); ++k) {
    std::uint64_t brute = 1;
    for (Elem x = el[k]; !is_identity(x); x = mul(x, el[k])) ++brute;
    check(brute == orders[k], [&] { return "order(" + to_string(el[k]) + ") mismatch"; });
    check(n % orders[k] == 0, [&] { return "order of " + to_string(el[k]) + " does not divide |G|"; });
  }
  CheckOutcome o;
  o.result = json{{"order", g->order()}, {"generators", g->generators()},
                  {"exponent", std::accumulate(orders.begin(), orders.end(), std::uint64_t{1}, lcm_u64)}};
  check.apply(o);
  o.table = order_table(orders);
  return o;
}

CheckOutcome check_psplit(const CheckContext& ctx) {
  const Enumeration& el = ctx.group->elements();
  Asserter check;
  std::uint64_t sqrt_checked = 0;
  for (const Elem& g : el) {
    const auto pw = powers(g);
    const std::uint64_t o = pw.size();
    auto in_closure = [&](const Elem& x) { return std::find(pw.begin(), pw.end(), x) != pw.end(); };
    for (std::uint64_t p : {2, 3, 5, 7}) {
      const PSplit s = p_split(g, p);
      const std::uint64_t op = order(s.p_part).value();
      const std::uint64_t oc = order(s.coprime_part).value();
      check(mul(s.p_part, s.coprime_part) == g && commute(s.p_part, s.coprime_part) && in_closure(s.p_part) &&
                in_closure(s.coprime_part) && is_p_power(op, p) && oc % p != 0,
            [&] { return "p_split(" + to_string(g) + ", " + std::to_string(p) + ")"; });
    }
    if (o % 2 == 1) {
      ++sqrt_checked;
      const Elem x = odd_sqrt(g);
      const auto roots = std::count_if(pw.begin(), pw.end(), [&](const Elem& y) { return mul(y, y) == g; });
      check(mul(x, x) == g && in_closure(x) && roots == 1, [&] { return "odd_sqrt(" + to_string(g) + ")"; });
    }
  }
  CheckOutcome o;
  o.result = json{{"elements", el.size()}, {"primes", {2, 3, 5, 7}}, {"odd_sqrt_checked", sqrt_checked}};
  check.apply(o);
  return o;
}

CheckOutcome check_zeta(const CheckContext& ctx) {
  const GroupRef& g = ctx.group;
  const auto reps = involution_class_representatives(g);
  if (reps.empty()) return skipped("no involutions");
  const bool exhaustive = group_size(ctx) <= kZetaExhaustive;
  const std::uint64_t n_samples = ctx.sample_size("zeta", 10000);
  Asserter check;
  json per = json::array();
  for (const Elem& i : reps) {
    std::uint64_t z0 = 0, z1 = 0;
    auto one = [&](const Elem& x) {
      const ZetaResult z = zeta(i, x);
      const bool even = z.base_order.value() % 2 == 0;
      check(even == (z.branch == ZetaBranch::z0), [&] { return "branch mismatch at g = " + to_string(x); });
      if (z.branch == ZetaBranch::z0) {
        ++z0;
        check(is_involution(z.value) && commute(z.value, i),
              [&] { return "zeta0 output not a commuting involution at g = " + to_string(x); });
      } else {
        ++z1;
        check(commute(z.value, i) && conj(i, odd_sqrt(z.base)) == conj(i, x),
              [&] { return "zeta1 output fails at g = " + to_string(x); });
      }
    };
    if (exhaustive) {
      for (const Elem& x : g->elements()) one(x);
    } else {
      PrSampler pr(g, ctx.config->seed, ctx.config->pr_slots, ctx.config->pr_burnin);
      for (std::uint64_t s = 0; s < n_samples; ++s) one(pr.next());
    }
    per.push_back(json{{"involution", i}, {"z0", z0}, {"z1", z1}});
  }
  CheckOutcome o;
  o.result = json{{"exhaustive", exhaustive}, {"classes", per}};
  check.apply(o);
  return o;
}

CheckOutcome check_fibers(const CheckContext& ctx) {
  const GroupRef& g = ctx.group;
  if (group_size(ctx) > kFiberLimit) return skipped("order above exhaustive limit " + std::to_string(kFiberLimit));
  const auto reps = involution_class_representatives(g);
  if (reps.empty()) return skipped("no involutions");
  const Enumeration& el = g->elements();
  Asserter check;
  json per = json::array();
  Table table;
  for (const Elem& i : reps) {
    const FiberCensus c = zeta1_fiber_census(g, i);
    check(c.uniform && c.image_is_centralizer, [&] { return "zeta1 fibers not uniform over C(" + to_string(i) + ")"; });
    const auto scan = kernels::zeta_scan(el, i);
    const SubgroupSet ci = centralizer(g, i);
    for (std::uint32_t ck : ci.indices()) {
      for (std::uint32_t k = 0; k < el.size(); ++k) {
        if (scan.branch[k] != kernels::ZetaScan::kZ1) continue;
        const std::uint32_t cg = el.index_of(mul(el[ck], el[k]));
        check(scan.branch[cg] == kernels::ZetaScan::kZ1 && el[scan.value[cg]] == mul(el[ck], el[scan.value[k]]),
              [&] { return "zeta1(cg) != c zeta1(g) for c = " + to_string(el[ck]) + ", g = " + to_string(el[k]); });
      }
    }
    json cj = c;
    cj["involution"] = i;
    per.push_back(cj);
    Table t = fiber_table(g, c, i);
    table.columns = t.columns;
    table.rows.insert(table.rows.end(), t.rows.begin(), t.rows.end());
  }
  CheckOutcome o;
  o.result = json{{"classes", per}};
  check.apply(o);
  o.table = std::move(table);
  return o;
}

CheckOutcome check_dihedral(const CheckContext& ctx) {
  const GroupRef& g = ctx.group;
  if (group_size(ctx) > kDihedralLimit) return skipped("order above exhaustive limit " + std::to_string(kDihedralLimit));
  std::vector<Elem> invols;
  for (const Elem& x : g->elements())
    if (is_involution(x)) invols.push_back(x);
  if (invols.empty()) return skipped("no involutions");
  Asserter check;
  std::uint64_t odd = 0, even = 0;
  for (const Elem& i : invols) {
    for (const Elem& j : invols) {
      const DihedralResult r = dihedral_conj(i, j);
      const bool is_odd = r.product_order.is_odd();
      check(r.witness.has_value() == is_odd && r.central_involution.has_value() != is_odd,
            [&] { return "wrong branch for i = " + to_string(i) + ", j = " + to_string(j); });
      if (is_odd) {
        ++odd;
        if (r.witness) check(conj(i, *r.witness) == j, [&] { return "witness fails for i = " + to_string(i) + ", j = " + to_string(j); });
      } else {
        ++even;
        if (!r.central_involution) continue;
        const auto pw = powers(mul(i, j));
        const auto count = std::count_if(pw.begin(), pw.end(), [](const Elem& y) { return is_involution(y); });
        const bool inside = std::find(pw.begin(), pw.end(), *r.central_involution) != pw.end();
        check(count == 1 && inside && is_involution(*r.central_involution),
              [&] { return "k is not the involution of <ij> for i = " + to_string(i) + ", j = " + to_string(j); });
      }
    }
  }
  CheckOutcome o;
  o.result = json{{"involutions", invols.size()}, {"odd_pairs", odd}, {"even_pairs", even}};
  check.apply(o);
  return o;
}

CheckOutcome check_eta(const CheckContext& ctx) {
  Asserter check;
  json per = json::array();
  Table table;
  for (std::uint64_t p : {2, 3}) {
    const EtaCensus c = eta_census(ctx.group, p);
    check(c.covariance_failures == 0, [&] { return "eta covariance fails for p = " + std::to_string(p); });
    check(c.equinumerous, [&] { return "eta fibers not equinumerous for p = " + std::to_string(p); });
    per.push_back(c);
    Table t = eta_table(c);
    table.columns = t.columns;
    table.rows.insert(table.rows.end(), t.rows.begin(), t.rows.end());
  }
  CheckOutcome o;
  o.result = json{{"censuses", per}};
  check.apply(o);
  o.table = std::move(table);
  return o;
}

CheckOutcome check_coverage(const CheckContext& ctx) {
  const auto reps = involution_class_representatives(ctx.group);
  if (reps.empty()) return skipped("no involutions");
  Asserter check;
  std::vector<CoverageReport> rs;
  for (const Elem& i : reps) {
    rs.push_back(coverage(ctx.group, i));
    check(rs.back().pairwise_disjoint, [&] { return "conjugates of i O(C(i)) overlap for i = " + to_string(i); });
    check(rs.back().counting_identity, [&] { return "counting identity fails for i = " + to_string(i); });
  }
  CheckOutcome o;
  o.result = json{{"classes", rs}};
  check.apply(o);
  o.table = coverage_table(rs);
  return o;
}

CheckOutcome check_dhat(const CheckContext& ctx) {
  if (group_size(ctx) > kDhatLimit) return skipped("order above exhaustive limit " + std::to_string(kDhatLimit));
  const DhatPropertyReport r =
      dhat_property_check(ctx.group, 2, ctx.sample_size("dhat", 4), ctx.config->seed);
  CheckOutcome o;
  o.result = r;
  for (const auto& t : r.properties) {
    if (!t.passed()) {
      o.status = Status::fail;
      o.assertion = t.name + ": " + t.first_failure;
      break;
    }
  }
  return o;
}

CheckOutcome check_zstar(const CheckContext& ctx) {
  if (ctx.group->order() % 2 == 1) return skipped("group order is odd");
  const auto rs = zstar_experiment(ctx.group);
  Asserter check;
  for (const auto& r : rs) {
    check(r.consistent(), [&] { return "dichotomy fails for " + to_string(r.involution); });
  }
  CheckOutcome o;
  o.result = json{{"classes", rs}};
  check.apply(o);
  return o;
}

CheckOutcome check_sec6(const CheckContext& ctx) {
  if (ctx.group->order() % 2 == 1) return skipped("group order is odd");
  std::optional<std::size_t> samples;
  if (group_size(ctx) > kSec6Exhaustive) samples = ctx.sample_size("sec6", 200);
  const Sec6Report r = sec6_check(ctx.group, samples, ctx.config->seed);
  if (r.status == Sec6Report::Status::skipped_precondition) return skipped(r.reason);
  CheckOutcome o;
  o.result = r;
  if (!r.counterexamples.empty()) {
    o.status = Status::fail;
    o.assertion = "i = " + to_string(r.counterexamples.front().i) + " conjugate to j = " +
                  to_string(r.counterexamples.front().j) + " under C(k)";
  }
  return o;
}

CheckOutcome check_gencheck(const CheckContext& ctx) {
  auto sd = std::dynamic_pointer_cast<const SemidirectGroup>(ctx.group);
  if (!sd) return skipped("not a semidirect product");
  std::optional<std::size_t> sample;
  if (sd->normal_part()->order() > kGencheckExhaustive) sample = ctx.sample_size("gencheck", 500);
  const GenerationReport r = generation_check(sd, sample, ctx.config->seed);
  CheckOutcome o;
  o.result = r;
  if (!r.passed()) {
    o.status = Status::fail;
    o.assertion = r.certificate_failures ? r.first_failure
                  : !r.closure_is_normal_part ? "centralizers do not generate H"
                                              : "c_lift output fails to centralize";
  }
  return o;
}

/// Upper-tail z-score of a chi-square statistic with k degrees of freedom
/// (Wilson-Hilferty normal approximation).
double chi_square_z(double x, double k) {
  const double a = 2.0 / (9.0 * k);
  return (std::cbrt(x / k) - (1.0 - a)) / std::sqrt(a);
}

CheckOutcome check_sampler(const CheckContext& ctx) {
  const GroupRef& g = ctx.group;
  const std::uint64_t n = group_size(ctx);
  if (n > kSamplerLimit) return skipped("order above sampler limit " + std::to_string(kSamplerLimit));
  if (n < 2) return skipped("trivial group");
  const Enumeration& el = g->elements();
  const std::uint64_t draws = 100 * n;
  const std::uint32_t slots = ctx.config->pr_slots ? ctx.config->pr_slots : kDefaultPrSlots;
  PrSampler a(g, ctx.config->seed, slots, ctx.config->pr_burnin);
  PrSampler b(g, ctx.config->seed, slots, ctx.config->pr_burnin);
  std::vector<std::uint64_t> count(n, 0);
  bool repeatable = true;
  for (std::uint64_t s = 0; s < draws; ++s) {
    const Elem x = a.next();
    if (b.next() != x) repeatable = false;
    ++count[el.index_of(x)];
  }
  const double expected = double(draws) / double(n);
  double tv = 0, chi2 = 0;
  for (std::uint64_t c : count) {
    tv += std::abs(double(c) / double(draws) - 1.0 / double(n));
    chi2 += (double(c) - expected) * (double(c) - expected) / expected;
  }
  tv /= 2;
  const double z = chi_square_z(chi2, double(n - 1));
  CheckOutcome o;
  o.result = json{{"draws", draws},
                  {"slots", slots},
                  {"burn_in", ctx.config->pr_burnin},
                  {"tv_distance", tv},
                  {"tv_bound", kSamplerTvBound},
                  {"tv_below_bound", tv < kSamplerTvBound},
                  {"chi_square", chi2},
                  {"chi_square_z", z},
                  {"chi_square_z_bound", kSamplerZBound},
                  {"repeatable", repeatable}};
  if (!repeatable) {
    o.status = Status::fail;
    o.assertion = "two samplers with the same seed diverged";
  } else if (!(z < kSamplerZBound)) {
    o.status = Status::fail;
    o.assertion = "chi-square z-score " + std::to_string(z) + " >= " + std::to_string(kSamplerZBound);
  }
  return o;
}

using CheckFn = CheckOutcome (*)(const CheckContext&);

CheckFn lookup(const std::string& id) {
  static const std::map<std::string, CheckFn> table{
      {"order", check_order},       {"psplit", check_psplit}, {"zeta", check_zeta},   {"fibers", check_fibers},
      {"dihedral", check_dihedral}, {"eta", check_eta},       {"coverage", check_coverage},
      {"dhat", check_dhat},         {"zstar", check_zstar},   {"sec6", check_sec6},   {"gencheck", check_gencheck},
      {"sampler", check_sampler}};
  auto it = table.find(id);
  if (it == table.end()) throw ParameterError("unknown check '" + id + "'");
  return it->second;
}

}  // namespace

std::uint64_t CheckContext::sample_size(const std::string& check, std::uint64_t fallback) const {
  if (!config) return fallback;
  auto it = config->samples.find(check);
  return it == config->samples.end() ? fallback : it->second;
}

std::string_view status_name(Status s) noexcept {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped: precondition";
  }
  return "fail";
}

CheckOutcome run_check(const std::string& check, const CheckContext& ctx) {
  const CheckFn fn = lookup(check);
  try {
    return fn(ctx);
  } catch (const PreconditionError& e) {
    return skipped(e.what());
  } catch (const CapExceeded& e) {
    return skipped(e.what());
  } catch (const InternalError& e) {
    CheckOutcome o;
    o.status = Status::fail;
    o.assertion = e.assertion() + ": " + e.what();
    return o;
  }
}

json report_document(const std::string& check, const std::string& group_id, const CheckOutcome& o) {
  json doc{{"schema", kSchema},
           {"check", check},
           {"group", group_id},
           {"label", kFiniteAnalogLabel},
           {"status", status_name(o.status)},
           {"result", o.result}};
  if (o.status == Status::fail) doc["failing_assertion"] = o.assertion;
  if (o.status == Status::skipped) doc["reason"] = o.reason;
  return doc;
}

}  // namespace mbb::suite
