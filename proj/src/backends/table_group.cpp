#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "mbb/backends.hpp"

namespace mbb {

namespace {

constexpr std::size_t kExhaustiveAssociativity = 256;
constexpr std::size_t kSampledTriples = 200000;

void validate_table(const std::vector<std::vector<std::uint32_t>>& t) {
  const std::size_t n = t.size();
  if (n == 0) throw ParameterError("table group must have at least one element");
  for (const auto& row : t) {
    if (row.size() != n) throw ParameterError("table is not square");
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<char> row_hit(n, 0), col_hit(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint32_t r = t[a][b];
      const std::uint32_t c = t[b][a];
      if (r >= n || c >= n) throw ParameterError("table entry out of range");
      if (row_hit[r]++) throw ParameterError("row " + std::to_string(a) + " is not a permutation");
      if (col_hit[c]++) throw ParameterError("column " + std::to_string(a) + " is not a permutation");
    }
    if (t[0][a] != a || t[a][0] != a) throw ParameterError("index 0 is not the identity");
  }
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (t[t[a][b]][c] != t[a][t[b][c]]) {
      throw ParameterError("table is not associative at (" + std::to_string(a) + ", " +
                           std::to_string(b) + ", " + std::to_string(c) + ")");
    }
  };
  if (n <= kExhaustiveAssociativity) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    for (std::size_t k = 0; k < kSampledTriples; ++k) {
      assoc(rng() % n, rng() % n, rng() % n);
    }
  }
}

}  // namespace

TableGroup::TableGroup(std::string name, std::vector<std::vector<std::uint32_t>> table,
                       std::uint64_t cap)
    : Group(Backend::table, std::move(name), cap), table_(std::move(table)) {}

std::shared_ptr<const TableGroup> TableGroup::create(std::string name,
                                                     std::vector<std::vector<std::uint32_t>> table,
                                                     std::uint64_t cap) {
  validate_table(table);
  const auto n = static_cast<std::uint32_t>(table.size());
  std::shared_ptr<TableGroup> g(new TableGroup(std::move(name), std::move(table), cap));
  g->inverse_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (g->table_[a][b] == 0) {
        g->inverse_[a] = b;
        break;
      }
    }
  }

  // Greedy generating set: add each element not yet reached.
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  std::vector<std::uint32_t> gens;
  for (std::uint32_t x = 1; x < n; ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    std::vector<std::uint32_t> frontier;
    for (std::uint32_t k = 0; k < n; ++k)
      if (reached[k]) frontier.push_back(k);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      for (std::uint32_t s : gens) {
        const std::uint32_t y = g->table_[frontier[head]][s];
        if (!reached[y]) {
          reached[y] = 1;
          frontier.push_back(y);
        }
      }
    }
  }
  std::vector<Payload> gen_payloads;
  for (std::uint32_t s : gens) gen_payloads.push_back(Payload{s});
  g->init(n, FactoredInt(n), Payload{0}, std::move(gen_payloads));
  return g;
}

std::shared_ptr<const TableGroup> TableGroup::load(const std::filesystem::path& path,
                                                   std::string name, std::uint64_t cap) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open table file " + path.string());
  std::size_t n = 0;
  if (!(in >> n) || n == 0) throw ParameterError("table file must start with a positive order");
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!(in >> table[a][b])) {
        throw ParameterError("table file truncated at row " + std::to_string(a));
      }
    }
  }
  return create(std::move(name), std::move(table), cap);
}

std::uint32_t TableGroup::index(const Elem& g) const {
  check_owned(g, "index");
  return g.payload()[0];
}

Elem TableGroup::at(std::uint32_t k) const {
  if (k >= table_.size()) throw ParameterError("table index out of range");
  return wrap(Payload{k});
}

std::string TableGroup::format(const Elem& g) const { return std::to_string(index(g)); }

Elem TableGroup::parse(std::string_view text) const {
  std::size_t b = 0, e = text.size();
  while (b < e && text[b] == ' ') ++b;
  while (e > b && text[e - 1] == ' ') --e;
  std::uint32_t k = 0;
  auto [ptr, ec] = std::from_chars(text.data() + b, text.data() + e, k);
  if (ec != std::errc() || ptr != text.data() + e) {
    throw ParseError("expected a table index", b);
  }
  if (k >= table_.size()) throw ParseError("table index out of range", b);
  return wrap(Payload{k});
}

Payload TableGroup::mul_payload(const Payload& a, const Payload& b) const {
  return Payload{table_[a[0]][b[0]]};
}

Payload TableGroup::inv_payload(const Payload& a) const { return Payload{inverse_[a[0]]}; }

}  // namespace mbb
