#include <charconv>
#include <numeric>

#include "mbb/backends.hpp"

namespace mbb {

namespace {

constexpr std::uint64_t kMaxSymDegree = 20;
constexpr std::uint64_t kMaxCycDegree = 4096;
constexpr std::uint64_t kMaxPslPrime = 997;
constexpr std::uint64_t kMaxPermDegree = 4096;

std::uint64_t parse_uint(std::string_view s, std::size_t offset, const char* what) {
  std::uint64_t v = 0;
  if (s.empty()) throw ParseError(std::string("expected ") + what, offset);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(std::string("expected ") + what, offset + static_cast<std::size_t>(ptr - s.data()));
  }
  return v;
}

void check_range(std::uint64_t v, std::uint64_t lo, std::uint64_t hi, std::string_view family,
                 std::size_t pos) {
  if (v < lo || v > hi) {
    throw ParseError(std::string(family) + " parameter " + std::to_string(v) + " outside supported range [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]",
                     pos);
  }
}

using Images = std::vector<std::uint32_t>;

Images cycle_images(std::uint32_t degree, std::uint32_t first, std::uint32_t last) {
  Images img(degree);
  std::iota(img.begin(), img.end(), 0U);
  for (std::uint32_t k = first; k < last; ++k) img[k] = k + 1;
  img[last] = first;
  return img;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 2; k <= n; ++k) r *= k;
  return r;
}

std::uint64_t field_inverse(std::uint64_t a, std::uint64_t p) {
  // p prime: a^(p-2)
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

GroupRef make_sym(const std::string& name, std::uint32_t n, std::uint64_t cap) {
  std::vector<Images> gens;
  if (n >= 2) {
    Images t(n);
    std::iota(t.begin(), t.end(), 0U);
    std::swap(t[0], t[1]);
    gens.push_back(t);
    if (n >= 3) gens.push_back(cycle_images(n, 0, n - 1));
  }
  return PermGroup::create(name, n, std::move(gens), factorial(n), cap);
}

GroupRef make_alt(const std::string& name, std::uint32_t n, std::uint64_t cap) {
  std::vector<Images> gens;
  if (n >= 3) {
    gens.push_back(cycle_images(n, 0, 2));
    if (n >= 4) gens.push_back(n % 2 == 1 ? cycle_images(n, 0, n - 1) : cycle_images(n, 1, n - 1));
  }
  return PermGroup::create(name, n, std::move(gens), n >= 2 ? factorial(n) / 2 : 1, cap);
}

GroupRef make_cyc(const std::string& name, std::uint32_t n, std::uint64_t cap) {
  std::vector<Images> gens;
  if (n >= 2) gens.push_back(cycle_images(n, 0, n - 1));
  return PermGroup::create(name, n, std::move(gens), n, cap);
}

GroupRef make_dih(const std::string& name, std::uint32_t n, std::uint64_t cap) {
  if (n == 1) return PermGroup::create(name, 2, {cycle_images(2, 0, 1)}, 2, cap);
  if (n == 2) {
    // Klein four on 4 points.
    return PermGroup::create(name, 4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, 4, cap);
  }
  Images reflect(n);
  for (std::uint32_t k = 0; k < n; ++k) reflect[k] = (n - k) % n;
  return PermGroup::create(name, n, {cycle_images(n, 0, n - 1), reflect}, 2ULL * n, cap);
}

GroupRef make_psl2(const std::string& name, std::uint32_t p, std::uint64_t cap) {
  // Points 0..p-1 are field elements, p is infinity.
  const std::uint32_t inf = p;
  Images shift(p + 1), invert(p + 1);
  for (std::uint32_t x = 0; x < p; ++x) {
    shift[x] = (x + 1) % p;
    invert[x] = x == 0 ? inf : static_cast<std::uint32_t>((p - field_inverse(x, p)) % p);
  }
  shift[inf] = inf;
  invert[inf] = 0;
  const std::uint64_t order = static_cast<std::uint64_t>(p) * (static_cast<std::uint64_t>(p) * p - 1) /
                              (p == 2 ? 1 : 2);
  return PermGroup::create(name, p + 1, {shift, invert}, order, cap);
}

}  // namespace

GroupPlan parse_group_spec(std::string_view spec) {
  GroupPlan plan;
  plan.text = std::string(spec);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected '<family>:<argument>'", spec.size());
  const std::string_view family = spec.substr(0, colon);
  const std::string_view rest = spec.substr(colon + 1);
  const std::size_t at = colon + 1;

  if (family == "sym" || family == "alt" || family == "cyc" || family == "dih") {
    plan.n = parse_uint(rest, at, "a positive integer");
    if (family == "sym") {
      plan.kind = GroupPlan::Kind::sym;
      check_range(plan.n, 1, kMaxSymDegree, family, at);
    } else if (family == "alt") {
      plan.kind = GroupPlan::Kind::alt;
      check_range(plan.n, 1, kMaxSymDegree, family, at);
    } else if (family == "cyc") {
      plan.kind = GroupPlan::Kind::cyc;
      check_range(plan.n, 1, kMaxCycDegree, family, at);
    } else {
      plan.kind = GroupPlan::Kind::dih;
      check_range(plan.n, 1, kMaxCycDegree, family, at);
    }
    return plan;
  }
  if (family == "psl2") {
    plan.kind = GroupPlan::Kind::psl2;
    plan.n = parse_uint(rest, at, "a prime");
    if (!is_prime(plan.n)) throw ParseError("psl2 needs a prime, " + std::to_string(plan.n) + " is not prime", at);
    check_range(plan.n, 2, kMaxPslPrime, family, at);
    return plan;
  }
  if (family == "perm") {
    plan.kind = GroupPlan::Kind::perm;
    const auto colon2 = rest.find(':');
    if (colon2 == std::string_view::npos) throw ParseError("expected perm:<degree>:<generators>", spec.size());
    plan.n = parse_uint(rest.substr(0, colon2), at, "a degree");
    check_range(plan.n, 1, kMaxPermDegree, family, at);
    std::size_t start = colon2 + 1;
    for (;;) {
      const auto semi = rest.find(';', start);
      const std::string_view gen = rest.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
      // Validate now so errors carry positions into the spec string.
      parse_cycles(gen, static_cast<std::uint32_t>(plan.n), at + start);
      plan.generators.emplace_back(gen);
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }
    return plan;
  }
  if (family == "table" || family == "sd") {
    plan.kind = family == "table" ? GroupPlan::Kind::table : GroupPlan::Kind::sd;
    if (rest.empty()) throw ParseError("expected a file path", at);
    plan.path = std::string(rest);
    return plan;
  }
  throw ParseError("unknown group family '" + std::string(family) + "'", 0);
}

GroupRef build_group(const GroupPlan& plan, std::uint64_t cap, const std::filesystem::path& base_dir) {
  const auto n = static_cast<std::uint32_t>(plan.n);
  switch (plan.kind) {
    case GroupPlan::Kind::sym: return make_sym(plan.text, n, cap);
    case GroupPlan::Kind::alt: return make_alt(plan.text, n, cap);
    case GroupPlan::Kind::cyc: return make_cyc(plan.text, n, cap);
    case GroupPlan::Kind::dih: return make_dih(plan.text, n, cap);
    case GroupPlan::Kind::psl2: return make_psl2(plan.text, n, cap);
    case GroupPlan::Kind::perm: {
      std::vector<std::vector<std::uint32_t>> gens;
      for (const auto& g : plan.generators) gens.push_back(parse_cycles(g, n));
      return PermGroup::create(plan.text, n, std::move(gens), std::nullopt, cap);
    }
    case GroupPlan::Kind::table:
    case GroupPlan::Kind::sd: {
      std::filesystem::path p(plan.path);
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      if (plan.kind == GroupPlan::Kind::table) return TableGroup::load(p, plan.text, cap);
      return load_semidirect(p, plan.text, cap);
    }
  }
  throw ParameterError("unhandled group plan");
}

GroupRef make_named(std::string_view spec, std::uint64_t cap, const std::filesystem::path& base_dir) {
  return build_group(parse_group_spec(spec), cap, base_dir);
}

}  // namespace mbb
