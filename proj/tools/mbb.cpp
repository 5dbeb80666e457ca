// mbb: command-line front end for the black-box group toolkit.
//
// Every subcommand prints one JSON document (or CSV for tabular censuses with
// --format csv) to stdout, or to the file named by --out. `suite` writes a
// report directory instead. Exit status: 0 ok, 1 a check failed, 2 usage or
// parse error, 3 any other error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "mbb/elemarith.hpp"
#include "mbb/genlift.hpp"
#include "mbb/invol.hpp"
#include "mbb/kernels.hpp"
#include "mbb/report.hpp"
#include "mbb/sampler.hpp"
#include "mbb/structure.hpp"
#include "mbb/suite.hpp"

namespace {

using nlohmann::json;

struct Globals {
  std::uint64_t seed = 1;
  int workers = 1;
  std::string format = "json";
  std::string out;
  std::uint64_t cap = mbb::kDefaultCap;
  std::uint32_t pr_slots = 0;
  std::uint32_t pr_burnin = mbb::kDefaultPrBurnIn;
};

struct Emitter {
  const Globals& g;
  int status = 0;

  void text(const std::string& s) const {
    if (g.out.empty()) {
      std::cout << s;
      return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw mbb::Error("cannot write " + g.out);
    f << s;
  }
  void document(const std::string& command, const json& result) const {
    json doc{{"schema", mbb::kSchema}, {"command", command}, {"label", mbb::kFiniteAnalogLabel}, {"result", result}};
    text(doc.dump(2) + "\n");
  }
  void tabular(const std::string& command, const json& result, const mbb::Table& t) const {
    if (g.format == "csv") {
      text(mbb::to_csv(t));
    } else {
      document(command, result);
    }
  }
};

mbb::GroupRef group(const Globals& g, const std::string& spec) { return mbb::make_named(spec, g.cap); }

std::shared_ptr<const mbb::SemidirectGroup> sd_group(const Globals& g, const std::string& path) {
  const std::string spec = path.rfind("sd:", 0) == 0 ? path : "sd:" + path;
  auto sd = std::dynamic_pointer_cast<const mbb::SemidirectGroup>(group(g, spec));
  if (!sd) throw mbb::ParameterError(path + " does not describe a semidirect product");
  return sd;
}

json elems_json(const std::vector<mbb::Elem>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(mbb::to_string(e));
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Black-box group algorithms: involution centralizers, cyclic-closure arithmetic and "
               "finite-analog structure experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals gl;
  app.add_option("--seed", gl.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--workers", gl.workers, "OpenMP workers for the scan kernels (1 = byte-stable reports)")
      ->capture_default_str();
  app.add_option("--format", gl.format, "Output format for tabular reports")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", gl.out, "Output file (report directory for suite)");
  app.add_option("--cap", gl.cap, "Enumeration cap: exact scans refuse larger groups")->capture_default_str();
  app.add_option("--pr-slots", gl.pr_slots, "Product-replacement slots (0 = max(10, 2 * #generators))")
      ->capture_default_str();
  app.add_option("--pr-burnin", gl.pr_burnin, "Product-replacement burn-in steps")->capture_default_str();

  std::string spec, elem_a, elem_b;
  std::uint64_t prime = 2, count = 10;
  std::optional<std::size_t> samples;
  bool properties = false;

  auto add_spec = [&](CLI::App* c, const char* what = "Group spec, e.g. sym:5, psl2:7, sd:<path>") {
    c->add_option("group", spec, what)->required();
  };

  auto* c_order = app.add_subcommand("order", "Group order, exponent multiple and element-order census");
  add_spec(c_order);

  auto* c_ppart = app.add_subcommand("ppart", "p-part / p'-part split inside the cyclic closure <g>, and odd square roots");
  add_spec(c_ppart);
  c_ppart->add_option("-g,--element", elem_a, "Element literal")->required();
  c_ppart->add_option("-p,--prime", prime, "Prime p")->capture_default_str();

  auto* c_zeta = app.add_subcommand("zeta", "zeta0/zeta1 map from g into the centralizer of an involution");
  add_spec(c_zeta);
  c_zeta->add_option("-i,--involution", elem_a, "Involution i")->required();
  c_zeta->add_option("-g,--element", elem_b, "Element g")->required();

  auto* c_bray = app.add_subcommand("bray", "Random elements of C(i) by zeta applied to product-replacement samples");
  add_spec(c_bray);
  c_bray->add_option("-i,--involution", elem_a, "Involution i")->required();
  c_bray->add_option("-n,--count", count, "Number of samples")->capture_default_str();

  auto* c_conj = app.add_subcommand("conj", "Dihedral trick: conjugate involution i to j, or the involution of <ij>");
  add_spec(c_conj);
  c_conj->add_option("-i", elem_a, "Involution i")->required();
  c_conj->add_option("-j", elem_b, "Involution j")->required();

  auto* c_fibers = app.add_subcommand("fibers", "Exhaustive zeta1 fiber census over C(i) (uniformity of the fibers)");
  add_spec(c_fibers);
  c_fibers->add_option("-i,--involution", elem_a, "Involution i")->required();

  auto* c_dhat = app.add_subcommand("dhat", "Abelian conjugation-covariant hull dhat(a) of <a> and its properties");
  add_spec(c_dhat);
  c_dhat->add_option("-a,--element", elem_a, "Element a (omit with --properties)");
  c_dhat->add_option("-p,--prime", prime, "Prime p")->capture_default_str();
  c_dhat->add_flag("--properties", properties, "Check properties (1)-(6) exhaustively over all a");

  auto* c_eta = app.add_subcommand("eta", "Projection eta of the p-part into the centre: fiber census and covariance");
  add_spec(c_eta);
  c_eta->add_option("-p,--prime", prime, "Prime p")->capture_default_str();

  auto* c_cov = app.add_subcommand("coverage", "Coverage of G by conjugates of i * O(C(i)) (finite analog of genericity)");
  add_spec(c_cov);
  c_cov->add_option("-i,--involution", elem_a, "Involution i")->required();

  auto* c_zstar = app.add_subcommand("zstar", "Z* dichotomy experiment for every class of involutions");
  add_spec(c_zstar);

  auto* c_sec6 = app.add_subcommand("sec6", "Involutions i, j with an involution k in <ij> are not conjugate under C(k)");
  add_spec(c_sec6);
  c_sec6->add_option("-n,--samples", samples, "Sampled pairs (default: every qualifying pair)");

  auto* c_dec = app.add_subcommand("decompose", "Factor h in H through C(j) C(v) C(i) for a Klein four-group V acting on H");
  c_dec->set_help_flag("--help", "Print this help message and exit");
  add_spec(c_dec, "Semidirect product file (sd:<path> or a bare path)");
  c_dec->add_option("-h,--element", elem_a, "Element of H")->required();

  auto* c_gen = app.add_subcommand("gencheck", "Check that H = <C_H(v) : v in V#> via certificates and the C-lift");
  add_spec(c_gen, "Semidirect product file (sd:<path> or a bare path)");
  c_gen->add_option("--sample", samples, "Decompose this many random h instead of all of H");

  std::string config_path = std::string(MBB_DATA_DIR) + "/default.suite";
  auto* c_suite = app.add_subcommand("suite", "Run a corpus suite and write one report per (check, group)");
  c_suite->add_option("config", config_path, "Suite config file")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  mbb::kernels::set_workers(gl.workers);
  Emitter out{gl};
  try {
    if (*c_order) {
      auto g = group(gl, spec);
      const auto orders = mbb::kernels::element_orders(g->elements());
      out.tabular("order",
                  json{{"group", spec},
                       {"backend", mbb::backend_name(g->backend())},
                       {"order", g->order()},
                       {"exponent_multiple", g->exponent_multiple()},
                       {"generators", elems_json(g->generators())}},
                  mbb::order_table(orders));
    } else if (*c_ppart) {
      auto g = group(gl, spec);
      const mbb::Elem x = g->parse_member(elem_a);
      const mbb::PSplit s = mbb::p_split(x, prime);
      json r{{"element", x}, {"order", mbb::order(x)}, {"p", prime}, {"p_part", s.p_part},
             {"coprime_part", s.coprime_part}, {"odd_sqrt", nullptr}};
      if (mbb::order(x).is_odd()) r["odd_sqrt"] = mbb::odd_sqrt(x);
      out.document("ppart", r);
    } else if (*c_zeta) {
      auto g = group(gl, spec);
      out.document("zeta", mbb::zeta(g->parse_member(elem_a), g->parse_member(elem_b)));
    } else if (*c_bray) {
      auto g = group(gl, spec);
      mbb::PrSampler pr(g, gl.seed, gl.pr_slots, gl.pr_burnin);
      const auto xs = mbb::bray_sample(g->parse_member(elem_a), pr, count);
      json arr = json::array();
      for (const auto& s : xs) arr.push_back(json{{"value", s.value}, {"branch", mbb::branch_name(s.branch)}});
      out.document("bray", json{{"involution", elem_a}, {"samples", arr}});
    } else if (*c_conj) {
      auto g = group(gl, spec);
      out.document("conj", mbb::dihedral_conj(g->parse_member(elem_a), g->parse_member(elem_b)));
    } else if (*c_fibers) {
      auto g = group(gl, spec);
      const mbb::Elem i = g->parse_member(elem_a);
      const auto c = mbb::zeta1_fiber_census(g, i);
      out.tabular("fibers", c, mbb::fiber_table(g, c, i));
      out.status = c.uniform && c.image_is_centralizer ? 0 : 1;
    } else if (*c_dhat) {
      auto g = group(gl, spec);
      if (properties) {
        const auto r = mbb::dhat_property_check(g, prime, 4, gl.seed);
        out.document("dhat", r);
        out.status = r.all_passed() ? 0 : 1;
      } else {
        if (elem_a.empty()) throw mbb::ParameterError("dhat needs -a <element> or --properties");
        out.document("dhat", mbb::dhat(g, g->parse_member(elem_a), prime));
      }
    } else if (*c_eta) {
      auto g = group(gl, spec);
      const auto c = mbb::eta_census(g, prime);
      out.tabular("eta", c, mbb::eta_table(c));
      out.status = c.covariance_failures == 0 && c.equinumerous ? 0 : 1;
    } else if (*c_cov) {
      auto g = group(gl, spec);
      const auto r = mbb::coverage(g, g->parse_member(elem_a));
      out.tabular("coverage", r, mbb::coverage_table({r}));
      out.status = r.pairwise_disjoint && r.counting_identity ? 0 : 1;
    } else if (*c_zstar) {
      auto g = group(gl, spec);
      const auto rs = mbb::zstar_experiment(g);
      out.document("zstar", rs);
      for (const auto& r : rs)
        if (!r.consistent()) out.status = 1;
    } else if (*c_sec6) {
      auto g = group(gl, spec);
      const auto r = mbb::sec6_check(g, samples, gl.seed);
      out.document("sec6", r);
      out.status = r.counterexamples.empty() ? 0 : 1;
    } else if (*c_dec) {
      auto g = sd_group(gl, spec);
      const mbb::Elem h = g->normal_part()->parse_member(elem_a);
      const auto cert = mbb::four_group_decompose(*g, h);
      const auto chk = mbb::validate(*g, cert);
      out.document("decompose", json{{"certificate", cert}, {"validation", chk}});
      out.status = chk.ok() ? 0 : 1;
    } else if (*c_gen) {
      auto g = sd_group(gl, spec);
      const auto r = mbb::generation_check(g, samples, gl.seed);
      out.document("gencheck", r);
      out.status = r.passed() ? 0 : 1;
    } else if (*c_suite) {
      const std::filesystem::path cfg_path(config_path);
      const auto cfg = mbb::suite::load_config(cfg_path);
      const std::filesystem::path dir = gl.out.empty() ? "reports" : gl.out;
      const auto sum = mbb::suite::run_suite(cfg, dir, cfg_path.parent_path(), &std::cerr);
      std::cerr << sum.passed << " passed, " << sum.failed << " failed, " << sum.skipped << " skipped\n";
      return sum.exit_code();
    }
    return out.status;
  } catch (const mbb::ParseError& e) {
    std::cerr << "parse error at " << e.position() << ": " << e.what() << '\n';
    return 2;
  } catch (const mbb::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
