#include <cctype>
#include <fstream>
#include <functional>

#include "mbb/backends.hpp"

namespace mbb {

namespace {

using IndexMap = std::vector<std::uint32_t>;

/// Extends generator images to a map on all of `g` along the Cayley graph and
/// checks every edge, so the result is a homomorphism iff no throw.
IndexMap extend_to_homomorphism(const Group& g,
                                const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& compose,
                                std::uint32_t identity_image, const char* what) {
  const Enumeration& el = g.elements();
  constexpr std::uint32_t kUnset = UINT32_MAX;
  IndexMap phi(el.size(), kUnset);
  phi[0] = identity_image;
  const auto& gens = g.generators();
  std::vector<std::uint32_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t x = queue[head];
    for (std::uint32_t k = 0; k < gens.size(); ++k) {
      const std::uint32_t y = el.index_of(g.mul(el[x], gens[k]));
      const std::uint32_t img = compose(phi[x], k);
      if (phi[y] == kUnset) {
        phi[y] = img;
        queue.push_back(y);
      } else if (phi[y] != img) {
        throw ParameterError(std::string(what) + ": generator images do not extend to a homomorphism");
      }
    }
  }
  return phi;
}

}  // namespace

SemidirectGroup::SemidirectGroup(std::string name, GroupRef normal, GroupRef acting,
                                 std::uint64_t cap)
    : Group(Backend::semidirect, std::move(name), cap),
      normal_(std::move(normal)),
      acting_(std::move(acting)) {}

std::shared_ptr<const SemidirectGroup> SemidirectGroup::create(
    std::string name, GroupRef normal, GroupRef acting, std::vector<std::vector<Elem>> action,
    std::uint64_t cap) {
  if (!normal || !acting) throw ParameterError("semidirect factors must be non-null");
  if (!normal->enumerable() || !acting->enumerable()) {
    throw PreconditionError("semidirect factors must be enumerable");
  }
  const Enumeration& H = normal->elements();
  const Enumeration& V = acting->elements();
  const auto& hgens = normal->generators();
  const auto& vgens = acting->generators();
  if (action.size() != vgens.size()) {
    throw ParameterError("action needs one image list per acting generator (" +
                         std::to_string(vgens.size()) + "), got " + std::to_string(action.size()));
  }

  // Automorphism of H attached to each acting generator.
  std::vector<IndexMap> phis;
  for (std::size_t k = 0; k < action.size(); ++k) {
    if (action[k].size() != hgens.size()) {
      throw ParameterError("action line " + std::to_string(k + 1) + " must list " +
                           std::to_string(hgens.size()) + " images");
    }
    IndexMap img;
    for (const Elem& e : action[k]) {
      if (!normal->owns(e)) throw DomainError("action image is not an element of the normal part");
      img.push_back(H.index_of(e));
    }
    auto compose = [&](std::uint32_t phix, std::uint32_t s) {
      return H.index_of(normal->mul(H[phix], H[img[s]]));
    };
    IndexMap phi = extend_to_homomorphism(*normal, compose, 0, "action");
    std::vector<char> hit(phi.size(), 0);
    for (std::uint32_t y : phi) {
      if (hit[y]++) throw ParameterError("action image of generator " + std::to_string(k + 1) +
                                         " is not bijective");
    }
    phis.push_back(std::move(phi));
  }

  std::shared_ptr<SemidirectGroup> g(new SemidirectGroup(std::move(name), normal, acting, cap));

  // alpha_{v s} = alpha_v o phi_s, checked on every edge of V's Cayley graph.
  g->alpha_.assign(V.size(), {});
  IndexMap id(H.size());
  for (std::uint32_t k = 0; k < id.size(); ++k) id[k] = k;
  g->alpha_[0] = id;
  std::vector<std::uint32_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t v = queue[head];
    for (std::uint32_t s = 0; s < vgens.size(); ++s) {
      const std::uint32_t w = V.index_of(acting->mul(V[v], vgens[s]));
      IndexMap composed(H.size());
      for (std::uint32_t h = 0; h < H.size(); ++h) composed[h] = g->alpha_[v][phis[s][h]];
      if (g->alpha_[w].empty()) {
        g->alpha_[w] = std::move(composed);
        queue.push_back(w);
      } else if (g->alpha_[w] != composed) {
        throw ParameterError("action does not define a homomorphism from the acting group");
      }
    }
  }

  g->h_inv_.resize(H.size());
  for (std::uint32_t h = 0; h < H.size(); ++h) g->h_inv_[h] = H.index_of(normal->inv(H[h]));
  g->v_inv_.resize(V.size());
  for (std::uint32_t v = 0; v < V.size(); ++v) g->v_inv_[v] = V.index_of(acting->inv(V[v]));

  std::vector<Payload> gens;
  for (const Elem& h : hgens) gens.push_back(Payload{H.index_of(h), 0});
  for (const Elem& v : vgens) gens.push_back(Payload{0, V.index_of(v)});
  const std::uint64_t order = normal->order() * acting->order();
  g->init(order, FactoredInt(order), Payload{0, 0}, std::move(gens));
  return g;
}

std::uint32_t SemidirectGroup::h_mul(std::uint32_t a, std::uint32_t b) const {
  const Enumeration& H = normal_->elements();
  return H.index_of(normal_->mul(H[a], H[b]));
}

std::uint32_t SemidirectGroup::v_mul(std::uint32_t a, std::uint32_t b) const {
  const Enumeration& V = acting_->elements();
  return V.index_of(acting_->mul(V[a], V[b]));
}

Payload SemidirectGroup::mul_payload(const Payload& a, const Payload& b) const {
  return Payload{h_mul(a[0], alpha_[a[1]][b[0]]), v_mul(a[1], b[1])};
}

Payload SemidirectGroup::inv_payload(const Payload& a) const {
  const std::uint32_t vi = v_inv_[a[1]];
  return Payload{alpha_[vi][h_inv_[a[0]]], vi};
}

Elem SemidirectGroup::embed_normal(const Elem& h) const {
  if (!normal_->owns(h)) throw DomainError("embed_normal: element not in the normal part");
  return wrap(Payload{normal_->elements().index_of(h), 0});
}

Elem SemidirectGroup::embed_acting(const Elem& v) const {
  if (!acting_->owns(v)) throw DomainError("embed_acting: element not in the acting part");
  return wrap(Payload{0, acting_->elements().index_of(v)});
}

Elem SemidirectGroup::normal_component(const Elem& g) const {
  check_owned(g, "normal_component");
  return normal_->elements()[g.payload()[0]];
}

Elem SemidirectGroup::acting_component(const Elem& g) const {
  check_owned(g, "acting_component");
  return acting_->elements()[g.payload()[1]];
}

Elem SemidirectGroup::act(const Elem& v, const Elem& h) const {
  if (!acting_->owns(v) || !normal_->owns(h)) throw DomainError("act: operands from wrong factors");
  const Enumeration& H = normal_->elements();
  return H[alpha_[acting_->elements().index_of(v)][H.index_of(h)]];
}

std::string SemidirectGroup::format(const Elem& g) const {
  check_owned(g, "format");
  return "[" + normal_->format(normal_component(g)) + " | " +
         acting_->format(acting_component(g)) + "]";
}

Elem SemidirectGroup::parse(std::string_view text) const {
  std::size_t b = 0, e = text.size();
  while (b < e && text[b] == ' ') ++b;
  while (e > b && text[e - 1] == ' ') --e;
  if (e - b < 2 || text[b] != '[' || text[e - 1] != ']') {
    throw ParseError("semidirect element must look like [h | v]", b);
  }
  int depth = 0;
  std::size_t bar = std::string_view::npos;
  for (std::size_t k = b + 1; k + 1 < e; ++k) {
    if (text[k] == '[') ++depth;
    if (text[k] == ']') --depth;
    if (text[k] == '|' && depth == 0) {
      bar = k;
      break;
    }
  }
  if (bar == std::string_view::npos) throw ParseError("missing '|' in semidirect element", b);
  Elem h = normal_->parse_member(text.substr(b + 1, bar - b - 1));
  Elem v = acting_->parse_member(text.substr(bar + 1, e - bar - 2));
  return wrap(Payload{normal_->elements().index_of(h), acting_->elements().index_of(v)});
}

std::shared_ptr<const SemidirectGroup> make_semidirect(GroupRef normal, GroupRef acting,
                                                       std::vector<std::vector<Elem>> action,
                                                       std::uint64_t cap) {
  std::string name = "sd(" + normal->name() + " x| " + acting->name() + ")";
  return SemidirectGroup::create(std::move(name), std::move(normal), std::move(acting),
                                 std::move(action), cap);
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::shared_ptr<const SemidirectGroup> load_semidirect(const std::filesystem::path& path,
                                                       std::string name, std::uint64_t cap) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open semidirect spec " + path.string());
  const auto dir = path.parent_path();
  std::string normal_spec, acting_spec;
  std::vector<std::string> action_lines;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto colon = t.find(':');
    if (colon == std::string::npos) {
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected 'key: value'", 0);
    }
    const std::string key = trim(std::string_view(t).substr(0, colon));
    const std::string value = trim(std::string_view(t).substr(colon + 1));
    if (key == "normal") {
      normal_spec = value;
    } else if (key == "acting") {
      acting_spec = value;
    } else if (key == "action") {
      action_lines.push_back(value);
    } else {
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": unknown key '" + key + "'", 0);
    }
  }
  if (normal_spec.empty() || acting_spec.empty()) {
    throw ParameterError(path.string() + ": both 'normal:' and 'acting:' are required");
  }
  GroupRef H = make_named(normal_spec, cap, dir);
  GroupRef V = make_named(acting_spec, cap, dir);
  std::vector<std::vector<Elem>> action;
  for (const std::string& l : action_lines) {
    std::vector<Elem> images;
    std::size_t start = 0;
    for (;;) {
      const auto semi = l.find(';', start);
      images.push_back(H->parse_member(trim(std::string_view(l).substr(
          start, semi == std::string::npos ? std::string::npos : semi - start))));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    action.push_back(std::move(images));
  }
  return SemidirectGroup::create(std::move(name), std::move(H), std::move(V), std::move(action), cap);
}

}  // namespace mbb
