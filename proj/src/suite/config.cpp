#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mbb/suite.hpp"

namespace mbb::suite {

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> ids{"order", "psplit",   "zeta", "fibers", "dihedral", "eta",
                                            "coverage", "dhat", "zstar", "sec6", "gencheck", "sampler"};
  return ids;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <class T>
T parse_number(const std::string& s, std::size_t line, const char* key) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError(std::string("expected an unsigned integer for '") + key + "', got '" + s + "'", line);
  }
  return v;
}

void require_known(const std::string& id, std::size_t line) {
  const auto& k = known_checks();
  if (std::find(k.begin(), k.end(), id) == k.end()) throw ParseError("unknown check '" + id + "'", line);
}

}  // namespace

SuiteConfig parse_config(std::string_view text) {
  SuiteConfig cfg;
  std::string list;  // active list key
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string s = trim(std::string_view(raw).substr(0, hash));
    if (s.empty()) continue;

    if (s[0] == '-') {
      const std::string item = trim(std::string_view(s).substr(1));
      if (item.empty()) throw ParseError("empty list item", line);
      if (list == "corpus") {
        cfg.corpus.push_back(item);
      } else if (list == "checks") {
        require_known(item, line);
        cfg.checks.push_back(item);
      } else if (list == "samples") {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError("expected '<check>: <n>'", line);
        const std::string id = trim(std::string_view(item).substr(0, colon));
        require_known(id, line);
        cfg.samples[id] = parse_number<std::uint64_t>(trim(std::string_view(item).substr(colon + 1)), line, "samples");
      } else {
        throw ParseError("list item outside a list", line);
      }
      continue;
    }

    const auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", line);
    const std::string key = trim(std::string_view(s).substr(0, colon));
    const std::string value = trim(std::string_view(s).substr(colon + 1));
    list.clear();
    if (key == "corpus" || key == "checks" || key == "samples") {
      if (!value.empty()) throw ParseError("'" + key + "' takes list items on following lines", line);
      list = key;
    } else if (key == "seed") {
      cfg.seed = parse_number<std::uint64_t>(value, line, "seed");
    } else if (key == "cap") {
      cfg.cap = parse_number<std::uint64_t>(value, line, "cap");
    } else if (key == "pr-slots") {
      cfg.pr_slots = parse_number<std::uint32_t>(value, line, "pr-slots");
    } else if (key == "pr-burnin") {
      cfg.pr_burnin = parse_number<std::uint32_t>(value, line, "pr-burnin");
    } else if (key == "format") {
      if (value == "json") {
        cfg.format = Format::json;
      } else if (value == "csv") {
        cfg.format = Format::csv;
      } else {
        throw ParseError("format must be json or csv, got '" + value + "'", line);
      }
    } else {
      throw ParseError("unknown key '" + key + "'", line);
    }
  }
  return cfg;
}

SuiteConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read suite config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize(const SuiteConfig& cfg) {
  std::ostringstream os;
  os << "seed: " << cfg.seed << '\n'
     << "format: " << (cfg.format == Format::json ? "json" : "csv") << '\n'
     << "cap: " << cfg.cap << '\n'
     << "pr-slots: " << cfg.pr_slots << '\n'
     << "pr-burnin: " << cfg.pr_burnin << '\n'
     << "corpus:\n";
  for (const auto& g : cfg.corpus) os << "  - " << g << '\n';
  os << "checks:\n";
  for (const auto& c : cfg.checks) os << "  - " << c << '\n';
  os << "samples:\n";
  for (const auto& [k, v] : cfg.samples) os << "  - " << k << ": " << v << '\n';
  return os.str();
}

}  // namespace mbb::suite
