#include "mbb/bbcore.hpp"

#include <deque>

namespace mbb {

std::size_t ElemHash::operator()(const Elem& e) const noexcept {
  // FNV-1a over the payload words.
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint32_t w : e.payload()) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::permutation: return "permutation";
    case Backend::table: return "table";
    case Backend::semidirect: return "semidirect";
  }
  return "unknown";
}

Group::Group(Backend backend, std::string name, std::uint64_t cap)
    : backend_(backend), name_(std::move(name)), cap_(cap) {}

Group::~Group() = default;

void Group::init(std::uint64_t order, FactoredInt exponent, Payload identity,
                 std::vector<Payload> generators) {
  if (order == 0) throw ParameterError("group order must be positive");
  order_ = order;
  exponent_ = std::move(exponent);
  identity_ = wrap(std::move(identity));
  generators_.clear();
  for (auto& g : generators) generators_.push_back(wrap(std::move(g)));
  if (generators_.empty()) generators_.push_back(identity_);
}

void Group::check_owned(const Elem& a, const char* op) const {
  if (a.group() != this) {
    throw DomainError(std::string(op) + ": element does not belong to group " + name_);
  }
}

Elem Group::mul(const Elem& a, const Elem& b) const {
  check_owned(a, "mul");
  check_owned(b, "mul");
  return wrap(mul_payload(a.payload(), b.payload()));
}

Elem Group::inv(const Elem& a) const {
  check_owned(a, "inv");
  return wrap(inv_payload(a.payload()));
}

FactoredInt Group::order_of(const Elem& g) const {
  check_owned(g, "order");
  std::uint64_t candidate = exponent_.value();
  for (const auto& [p, k] : exponent_.factors()) {
    for (unsigned r = 0; r < k; ++r) {
      const std::uint64_t next = candidate / p;
      if (!is_identity(pow(g, static_cast<std::int64_t>(next)))) break;
      candidate = next;
    }
  }
  return FactoredInt(candidate);
}

const Enumeration& Group::elements() const {
  if (!enumerable()) throw CapExceeded(order_, cap_);
  std::call_once(enum_once_, [this] {
    auto elems = closure(*this, generators_, cap_);
    if (elems.size() != order_) {
      throw InternalError("enumeration-order",
                          "closure of generators of " + name_ + " has " +
                              std::to_string(elems.size()) + " elements, expected " +
                              std::to_string(order_));
    }
    enum_ = std::make_unique<Enumeration>(std::move(elems));
  });
  return *enum_;
}

Elem Group::parse_member(std::string_view text) const {
  Elem e = parse(text);
  if (enumerable() && !elements().find(e)) {
    throw PreconditionError("element " + std::string(text) + " is not in group " + name_);
  }
  return e;
}

std::vector<Elem> closure(const Group& g, std::span<const Elem> gens, std::uint64_t limit) {
  std::vector<Elem> out;
  std::unordered_map<Elem, std::uint32_t, ElemHash> seen;
  out.push_back(g.identity());
  seen.emplace(g.identity(), 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const Elem& s : gens) {
      Elem next = g.mul(out[head], s);
      if (seen.find(next) != seen.end()) continue;
      if (out.size() >= limit) throw CapExceeded(out.size() + 1, limit);
      seen.emplace(next, static_cast<std::uint32_t>(out.size()));
      out.push_back(std::move(next));
    }
  }
  return out;
}

Enumeration::Enumeration(std::vector<Elem> elems) : elems_(std::move(elems)) {
  index_.reserve(elems_.size() * 2);
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    index_.emplace(elems_[k], static_cast<std::uint32_t>(k));
  }
}

std::optional<std::uint32_t> Enumeration::find(const Elem& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Enumeration::index_of(const Elem& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw PreconditionError("element not in enumerated group");
  return it->second;
}

}  // namespace mbb
