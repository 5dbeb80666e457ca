#pragma once

// JSON encodings of every result type, shared by the CLI and the suite.
// Elements are written in their group's literal notation.

#include <json.hpp>

#include "mbb/bbcore.hpp"
#include "mbb/backends.hpp"
#include "mbb/genlift.hpp"
#include "mbb/invol.hpp"
#include "mbb/structure.hpp"

namespace mbb {

inline constexpr std::string_view kSchema = "morley-bb/1";

void to_json(nlohmann::json& j, const Elem& e);
void to_json(nlohmann::json& j, const FactoredInt& n);
void to_json(nlohmann::json& j, const SubgroupSet& s);
void to_json(nlohmann::json& j, const ZetaResult& r);
void to_json(nlohmann::json& j, const DihedralResult& r);
void to_json(nlohmann::json& j, const FiberCensus& c);
void to_json(nlohmann::json& j, const DhatResult& r);
void to_json(nlohmann::json& j, const PropertyTally& t);
void to_json(nlohmann::json& j, const DhatPropertyReport& r);
void to_json(nlohmann::json& j, const EtaCensus& c);
void to_json(nlohmann::json& j, const CoverageReport& r);
void to_json(nlohmann::json& j, const Sec6Report& r);
void to_json(nlohmann::json& j, const ZstarReport& r);
void to_json(nlohmann::json& j, const DecompCert& c);
void to_json(nlohmann::json& j, const CertCheck& c);
void to_json(nlohmann::json& j, const GenerationReport& r);

/// Tabular view used for CSV output. Cells are written verbatim unless they
/// contain a comma, quote or newline, in which case they are quoted.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t);

Table fiber_table(const GroupRef& g, const FiberCensus& c, const Elem& i);
Table eta_table(const EtaCensus& c);
Table coverage_table(const std::vector<CoverageReport>& rs);
Table order_table(const std::vector<std::uint64_t>& element_orders);

}  // namespace mbb
