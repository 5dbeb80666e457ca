#include "mbb/bbcore.hpp"

namespace mbb {

namespace {

const Group& owner(const Elem& a, const char* op) {
  if (!a.valid()) throw DomainError(std::string(op) + ": invalid element");
  return *a.group();
}

const Group& common_owner(const Elem& a, const Elem& b, const char* op) {
  const Group& g = owner(a, op);
  if (b.group() != &g) throw DomainError(std::string(op) + ": operands from different groups");
  return g;
}

}  // namespace

Elem mul(const Elem& a, const Elem& b) { return common_owner(a, b, "mul").mul(a, b); }

Elem inv(const Elem& a) { return owner(a, "inv").inv(a); }

Elem conj(const Elem& a, const Elem& g) {
  const Group& G = common_owner(a, g, "conj");
  return G.mul(G.mul(G.inv(g), a), g);
}

Elem comm(const Elem& a, const Elem& b) {
  const Group& G = common_owner(a, b, "comm");
  return G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b));
}

Elem pow(const Elem& a, std::int64_t n) {
  const Group& G = owner(a, "pow");
  Elem base = n < 0 ? G.inv(a) : a;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Elem acc = G.identity();
  while (e > 0) {
    if (e & 1U) acc = G.mul(acc, base);
    e >>= 1U;
    if (e > 0) base = G.mul(base, base);
  }
  return acc;
}

FactoredInt order(const Elem& g) { return owner(g, "order").order_of(g); }

bool is_identity(const Elem& g) { return g == owner(g, "is_identity").identity(); }

bool commute(const Elem& a, const Elem& b) {
  const Group& G = common_owner(a, b, "commute");
  return G.mul(a, b) == G.mul(b, a);
}

bool is_involution(const Elem& g) {
  return !is_identity(g) && is_identity(mul(g, g));
}

std::string to_string(const Elem& g) { return owner(g, "format").format(g); }

}  // namespace mbb
