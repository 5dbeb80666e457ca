#include <cctype>
#include <numeric>

#include "mbb/backends.hpp"

namespace mbb {

std::vector<std::uint32_t> parse_cycles(std::string_view text, std::uint32_t degree,
                                        std::size_t offset) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  std::vector<char> used(degree, 0);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  if (pos == text.size()) throw ParseError("empty permutation literal", offset);
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", offset + pos);
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      while (pos < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) {
        ++pos;
      }
      if (pos == text.size()) throw ParseError("unterminated cycle", offset + pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("expected a point number", offset + pos);
      }
      const std::size_t start = pos;
      std::uint64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (v > degree) throw ParseError("point exceeds degree " + std::to_string(degree), offset + start);
        ++pos;
      }
      if (v == 0) throw ParseError("points are 1-based", offset + start);
      const auto pt = static_cast<std::uint32_t>(v - 1);
      if (used[pt]) throw ParseError("point " + std::to_string(v) + " repeated", offset + start);
      used[pt] = 1;
      cycle.push_back(pt);
    }
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) images[cycle[k]] = cycle[k + 1];
    if (cycle.size() > 1) images[cycle.back()] = cycle.front();
    skip_ws();
  }
  return images;
}

std::string format_cycles(std::span<const std::uint32_t> images) {
  std::string out;
  std::vector<char> seen(images.size(), 0);
  for (std::uint32_t start = 0; start < images.size(); ++start) {
    if (seen[start] || images[start] == start) continue;
    out += '(';
    std::uint32_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = images[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermGroup::PermGroup(std::string name, std::uint32_t degree, std::uint64_t cap)
    : Group(Backend::permutation, std::move(name), cap), degree_(degree) {}

std::shared_ptr<const PermGroup> PermGroup::create(
    std::string name, std::uint32_t degree, std::vector<std::vector<std::uint32_t>> generators,
    std::optional<std::uint64_t> known_order, std::uint64_t cap) {
  if (degree == 0) throw ParameterError("permutation degree must be positive");
  std::shared_ptr<PermGroup> g(new PermGroup(std::move(name), degree, cap));
  std::vector<Payload> gens;
  for (auto& img : generators) gens.push_back(g->from_images(std::move(img)).payload());
  Payload id(degree);
  std::iota(id.begin(), id.end(), 0U);

  std::uint64_t order = 1;
  if (known_order) {
    order = *known_order;
    g->init(order, FactoredInt(order), id, gens);
  } else {
    // Provisional init so the closure can multiply; order fixed afterwards.
    g->init(1, FactoredInt(1), id, gens);
    order = closure(*g, g->generators(), cap).size();
    g->init(order, FactoredInt(order), id, std::move(gens));
  }
  return g;
}

Elem PermGroup::from_images(std::vector<std::uint32_t> images) const {
  if (images.size() != degree_) throw ParameterError("image array has wrong degree");
  std::vector<char> hit(degree_, 0);
  for (std::uint32_t x : images) {
    if (x >= degree_ || hit[x]) throw ParameterError("image array is not a bijection");
    hit[x] = 1;
  }
  return wrap(Payload(images.begin(), images.end()));
}

FactoredInt PermGroup::order_of(const Elem& g) const {
  check_owned(g, "order");
  const Payload& p = g.payload();
  std::vector<char> seen(p.size(), 0);
  std::uint64_t l = 1;
  for (std::uint32_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::uint64_t len = 0;
    for (std::uint32_t x = s; !seen[x]; x = p[x]) {
      seen[x] = 1;
      ++len;
    }
    l = lcm_u64(l, len);
  }
  return FactoredInt(l);
}

std::string PermGroup::format(const Elem& g) const {
  check_owned(g, "format");
  return format_cycles(g.payload());
}

Elem PermGroup::parse(std::string_view text) const {
  auto images = parse_cycles(text, degree_);
  return wrap(Payload(images.begin(), images.end()));
}

Payload PermGroup::mul_payload(const Payload& a, const Payload& b) const {
  // Left factor first: x -> b[a[x]].
  Payload out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

Payload PermGroup::inv_payload(const Payload& a) const {
  Payload out(a.size());
  for (std::uint32_t x = 0; x < a.size(); ++x) out[a[x]] = x;
  return out;
}

}  // namespace mbb
