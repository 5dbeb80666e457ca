#include "mbb/report.hpp"

#include <map>
#include <sstream>

namespace mbb {

using nlohmann::json;

namespace {

// Sets with at most this many members are listed in full.
constexpr std::size_t kListLimit = 200;

json elems(const std::vector<Elem>& v) {
  json a = json::array();
  for (const Elem& e : v) a.push_back(to_string(e));
  return a;
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void to_json(json& j, const Elem& e) { j = to_string(e); }

void to_json(json& j, const FactoredInt& n) {
  j = json{{"value", n.value()}, {"factored", n.to_string()}};
}

void to_json(json& j, const SubgroupSet& s) {
  j = json{{"order", s.size()}, {"generators", elems(s.generators())}};
  if (s.size() <= kListLimit) j["elements"] = elems(s.elements());
}

void to_json(json& j, const ZetaResult& r) {
  j = json{{"branch", branch_name(r.branch)}, {"value", r.value}, {"base", r.base}, {"base_order", r.base_order}};
}

void to_json(json& j, const DihedralResult& r) {
  j = json{{"product_order", r.product_order},
           {"witness", opt(r.witness)},
           {"central_involution", opt(r.central_involution)}};
}

void to_json(json& j, const FiberCensus& c) {
  j = json{{"group_order", c.group_order},   {"centralizer_order", c.centralizer_order},
           {"domain_size", c.domain_size},   {"z0_count", c.z0_count},
           {"fiber_size", opt(c.fiber_size)}, {"uniform", c.uniform},
           {"image_is_centralizer", c.image_is_centralizer}};
}

void to_json(json& j, const DhatResult& r) {
  j = json{{"a", r.base}, {"q", r.q}, {"d1", r.d1}, {"d2", r.d2}, {"d3", r.d3}};
}

void to_json(json& j, const PropertyTally& t) {
  j = json{{"name", t.name}, {"checked", t.checked}, {"failures", t.failures}, {"passed", t.passed()}};
  if (!t.first_failure.empty()) j["first_failure"] = t.first_failure;
}

void to_json(json& j, const DhatPropertyReport& r) {
  j = json{{"p", r.p}, {"q", r.q}, {"elements", r.elements}, {"properties", r.properties},
           {"all_passed", r.all_passed()}};
}

void to_json(json& j, const EtaCensus& c) {
  json fibers = json::array();
  for (const auto& [e, n] : c.fibers) fibers.push_back(json{{"image", e}, {"size", n}});
  j = json{{"p", c.p},
           {"group_order", c.group_order},
           {"defined", c.defined},
           {"total", c.total},
           {"fibers", fibers},
           {"equinumerous", c.equinumerous},
           {"covariance_checked", c.covariance_checked},
           {"covariance_failures", c.covariance_failures}};
}

void to_json(json& j, const CoverageReport& r) {
  j = json{{"involution", r.involution},
           {"group_order", r.group_order},
           {"centralizer_order", r.centralizer_order},
           {"core_order", r.core_order},
           {"coset_size", r.coset_size},
           {"conjugate_count", r.conjugate_count},
           {"union_size", r.union_size},
           {"pairwise_disjoint", r.pairwise_disjoint},
           {"counting_identity", r.counting_identity},
           {"fraction", r.fraction()}};
}

void to_json(json& j, const Sec6Report& r) {
  json ce = json::array();
  for (const auto& c : r.counterexamples) ce.push_back(json{{"i", c.i}, {"j", c.j}, {"k", c.k}, {"u", c.u}});
  j = json{{"status", r.status == Sec6Report::Status::checked ? "checked" : "skipped: precondition"},
           {"involutions", r.involutions},
           {"qualifying_pairs", r.qualifying_pairs},
           {"pairs_checked", r.pairs_checked},
           {"exhaustive", r.exhaustive},
           {"counterexamples", ce}};
  if (!r.reason.empty()) j["reason"] = r.reason;
}

void to_json(json& j, const ZstarReport& r) {
  j = json{{"group", r.group},
           {"representative", r.representative},
           {"involution", r.involution},
           {"into_sylow", r.into_sylow},
           {"class_size", r.class_size},
           {"sylow_order", r.sylow_order},
           {"sylow_generators", elems(r.sylow_generators)},
           {"odd_core_order", r.odd_core_order},
           {"branch", branch_name(r.branch)},
           {"witness", opt(r.witness)},
           {"witness_conjugator", opt(r.witness_conjugator)},
           {"central_mod_odd_core", opt(r.central_mod_odd_core)},
           {"no_order4_in_closures", opt(r.no_order4_in_closures)},
           {"no_involution_in_closures", opt(r.no_involution_in_closures)},
           {"consistent", r.consistent()}};
}

void to_json(json& j, const DecompCert& c) {
  json f = json::array();
  for (const auto& x : c.factors) f.push_back(json{{"factor", x.factor}, {"involution", x.involution}});
  j = json{{"target", c.target},
           {"factors", f},
           {"trace", json{{"u", c.trace.u}, {"h0", c.trace.h0}, {"h1", c.trace.h1}, {"v", c.trace.v}, {"w", c.trace.w}}}};
}

void to_json(json& j, const CertCheck& c) {
  j = json{{"product_ok", c.product_ok},
           {"commute_ok", c.commute_ok},
           {"involutions_ok", c.involutions_ok},
           {"ok", c.ok()},
           {"problems", c.problems}};
}

void to_json(json& j, const GenerationReport& r) {
  j = json{{"normal_order", r.normal_order},
           {"group_order", r.group_order},
           {"exhaustive", r.exhaustive},
           {"certificates_checked", r.certificates_checked},
           {"certificate_failures", r.certificate_failures},
           {"centralizer_orders", r.centralizer_orders},
           {"closure_order", r.closure_order},
           {"closure_is_normal_part", r.closure_is_normal_part},
           {"clift_checked", r.clift_checked},
           {"clift_failures", r.clift_failures},
           {"passed", r.passed()}};
  if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) os << (k ? "," : "") << csv_cell(cells[k]);
    os << '\n';
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

Table fiber_table(const GroupRef& g, const FiberCensus& c, const Elem& i) {
  Table t{{"involution", "centralizer_element", "fiber_size"}, {}};
  const auto members = centralizer(g, i).elements();
  for (std::size_t k = 0; k < members.size() && k < c.fibers.size(); ++k) {
    t.rows.push_back({to_string(i), to_string(members[k]), std::to_string(c.fibers[k])});
  }
  return t;
}

Table eta_table(const EtaCensus& c) {
  Table t{{"p", "image", "fiber_size"}, {}};
  for (const auto& [e, n] : c.fibers) t.rows.push_back({std::to_string(c.p), to_string(e), std::to_string(n)});
  return t;
}

Table coverage_table(const std::vector<CoverageReport>& rs) {
  Table t{{"involution", "group_order", "centralizer_order", "core_order", "coset_size", "conjugate_count",
           "union_size", "pairwise_disjoint", "counting_identity"},
          {}};
  for (const auto& r : rs) {
    t.rows.push_back({to_string(r.involution), std::to_string(r.group_order), std::to_string(r.centralizer_order),
                      std::to_string(r.core_order), std::to_string(r.coset_size), std::to_string(r.conjugate_count),
                      std::to_string(r.union_size), r.pairwise_disjoint ? "true" : "false",
                      r.counting_identity ? "true" : "false"});
  }
  return t;
}

Table order_table(const std::vector<std::uint64_t>& element_orders) {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (auto o : element_orders) ++hist[o];
  Table t{{"element_order", "count"}, {}};
  for (const auto& [o, n] : hist) t.rows.push_back({std::to_string(o), std::to_string(n)});
  return t;
}

}  // namespace mbb
