#include <fstream>

#include "mbb/backends.hpp"
#include "mbb/suite.hpp"

namespace mbb::suite {

using nlohmann::json;

std::string file_id(std::string_view spec) {
  std::string out;
  for (char c : spec) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.' || c == '-';
    out += keep ? c : '_';
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  out << text;
}

}  // namespace

SuiteSummary run_suite(const SuiteConfig& cfg, const std::filesystem::path& out,
                       const std::filesystem::path& base_dir, std::ostream* log) {
  SuiteSummary sum;
  json rows = json::array();
  std::filesystem::create_directories(out);

  for (const std::string& spec : cfg.corpus) {
    GroupRef g = make_named(spec, cfg.cap, base_dir);
    const std::string id = file_id(spec);
    for (const std::string& check : cfg.checks) {
      CheckContext ctx{g, spec, &cfg};
      const CheckOutcome o = run_check(check, ctx);
      switch (o.status) {
        case Status::pass: ++sum.passed; break;
        case Status::fail: ++sum.failed; break;
        case Status::skipped: ++sum.skipped; break;
      }
      const std::filesystem::path dir = out / check;
      write_file(dir / (id + ".json"), report_document(check, spec, o).dump(2) + "\n");
      if (cfg.format == Format::csv && o.table) write_file(dir / (id + ".csv"), to_csv(*o.table));
      json row{{"check", check}, {"group", spec}, {"status", status_name(o.status)}};
      if (o.status == Status::fail) row["failing_assertion"] = o.assertion;
      rows.push_back(row);
      if (log) {
        *log << status_name(o.status) << "  " << check << "  " << spec;
        if (o.status == Status::fail) *log << "  (" << o.assertion << ")";
        *log << '\n';
      }
    }
  }

  json summary{{"schema", kSchema},
               {"label", kFiniteAnalogLabel},
               {"seed", cfg.seed},
               {"passed", sum.passed},
               {"failed", sum.failed},
               {"skipped", sum.skipped},
               {"exit_code", sum.exit_code()},
               {"reports", rows}};
  write_file(out / "summary.json", summary.dump(2) + "\n");
  return sum;
}

}  // namespace mbb::suite
