#pragma once

// Corpus suites: a config document naming groups and checks, one JSON report
// per (check, group), and an exit status that is 0 iff every check passed.
//
// Config grammar (one item per line, '#' starts a comment):
//
//   seed: <u64>
//   format: json | csv
//   cap: <u64>
//   pr-slots: <u32>          # 0 = default
//   pr-burnin: <u32>
//   corpus:
//     - <group-spec>
//   checks:
//     - <check-id>
//   samples:
//     - <check-id>: <u64>
//
// Scalar keys may appear in any order and are optional; list items belong to
// the most recent list key. serialize() writes the keys in the order above.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mbb/bbcore.hpp"
#include "mbb/report.hpp"

namespace mbb::suite {

enum class Format { json, csv };

struct SuiteConfig {
  std::vector<std::string> corpus;
  std::uint64_t seed = 1;
  std::vector<std::string> checks;
  Format format = Format::json;
  std::map<std::string, std::uint64_t> samples;
  std::uint64_t cap = kDefaultCap;
  std::uint32_t pr_slots = 0;
  std::uint32_t pr_burnin = 100;

  friend bool operator==(const SuiteConfig&, const SuiteConfig&) = default;
};

/// Check identifiers in execution order.
const std::vector<std::string>& known_checks();

/// Throws ParseError (position = 1-based line number) on malformed input or
/// unknown check identifiers.
SuiteConfig parse_config(std::string_view text);
SuiteConfig load_config(const std::filesystem::path& path);
std::string serialize(const SuiteConfig& cfg);

enum class Status { pass, fail, skipped };
std::string_view status_name(Status s) noexcept;

struct CheckOutcome {
  Status status = Status::pass;
  std::string assertion;  // first failing assertion (fail)
  std::string reason;     // why the group was skipped (skipped)
  nlohmann::json result = nlohmann::json::object();
  std::optional<Table> table;
};

struct CheckContext {
  GroupRef group;
  std::string group_id;
  const SuiteConfig* config = nullptr;
  std::uint64_t sample_size(const std::string& check, std::uint64_t fallback) const;
};

/// Runs one named check. Precondition failures become `skipped`; any other
/// exception propagates.
CheckOutcome run_check(const std::string& check, const CheckContext& ctx);

/// The full report document for one (check, group) pair.
nlohmann::json report_document(const std::string& check, const std::string& group_id, const CheckOutcome& o);

/// File-name-safe form of a group spec.
std::string file_id(std::string_view group_spec);

struct SuiteSummary {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  int exit_code() const noexcept { return failed == 0 ? 0 : 1; }
};

/// Writes <out>/<check>/<file_id>.json (plus .csv for tabular checks in csv
/// mode) and <out>/summary.json. Relative sd: paths resolve against base_dir.
/// Progress lines go to `log` when non-null.
SuiteSummary run_suite(const SuiteConfig& cfg, const std::filesystem::path& out,
                       const std::filesystem::path& base_dir, std::ostream* log = nullptr);

}  // namespace mbb::suite
