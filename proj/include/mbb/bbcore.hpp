#pragma once

// Black-box group oracle contract.
//
// Every group in the toolkit is a `Group` reached through a `GroupRef`
// (shared, immutable after construction). Elements are `Elem` values: a
// canonical payload plus a non-owning pointer to the group that produced it.
// Two elements are equal iff they come from the same group and their payloads
// are bit-identical. An `Elem` must not outlive its group.
//
// Composition convention: permutations act on points from the right and a
// product applies its left factor first, so a^g = g^-1 a g and
// [a, b] = a^-1 b^-1 a b.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mbb {

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands from different groups.
class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An exact scan was requested on a group larger than the enumeration cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::uint64_t order, std::uint64_t cap);
  std::uint64_t order() const noexcept { return order_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t order_;
  std::uint64_t cap_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A named internal consistency assertion fired. Signals a violated
/// precondition upstream, never a recoverable condition.
class InternalError : public Error {
 public:
  InternalError(std::string assertion, const std::string& detail);
  const std::string& assertion() const noexcept { return assertion_; }

 private:
  std::string assertion_;
};

// ---------------------------------------------------------------------------
// FactoredInt

/// Positive integer together with its prime factorization (primes ascending).
class FactoredInt {
 public:
  using Factor = std::pair<std::uint64_t, unsigned>;

  FactoredInt() = default;
  explicit FactoredInt(std::uint64_t value);
  static FactoredInt from_factors(std::vector<Factor> factors);

  std::uint64_t value() const noexcept { return value_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }

  unsigned multiplicity(std::uint64_t prime) const noexcept;
  /// Largest power of `prime` dividing the value.
  std::uint64_t part(std::uint64_t prime) const noexcept;
  bool divides(std::uint64_t n) const noexcept { return n % value_ == 0; }
  bool is_odd() const noexcept { return (value_ & 1U) != 0; }

  /// "12 = 2^2 * 3"
  std::string to_string() const;

  friend bool operator==(const FactoredInt& a, const FactoredInt& b) {
    return a.value_ == b.value_;
  }

 private:
  std::uint64_t value_ = 1;
  std::vector<Factor> factors_;
};

bool is_prime(std::uint64_t n) noexcept;
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

// ---------------------------------------------------------------------------
// Elements

using Payload = std::vector<std::uint32_t>;

class Group;

class Elem {
 public:
  Elem() = default;
  Elem(const Group* group, Payload payload) noexcept
      : group_(group), payload_(std::move(payload)) {}

  const Group* group() const noexcept { return group_; }
  const Payload& payload() const noexcept { return payload_; }
  bool valid() const noexcept { return group_ != nullptr; }

  friend bool operator==(const Elem& a, const Elem& b) noexcept {
    return a.group_ == b.group_ && a.payload_ == b.payload_;
  }
  /// Payload-lexicographic; only meaningful within one group.
  friend bool operator<(const Elem& a, const Elem& b) noexcept {
    return a.payload_ < b.payload_;
  }

 private:
  const Group* group_ = nullptr;
  Payload payload_;
};

struct ElemHash {
  std::size_t operator()(const Elem& e) const noexcept;
};

// ---------------------------------------------------------------------------
// Group oracle

enum class Backend { permutation, table, semidirect };

std::string_view backend_name(Backend b) noexcept;

inline constexpr std::uint64_t kDefaultCap = 20000;

class Enumeration;

class Group {
 public:
  virtual ~Group();
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  Backend backend() const noexcept { return backend_; }
  /// The group-spec string this group was built from.
  const std::string& name() const noexcept { return name_; }
  std::uint64_t order() const noexcept { return order_; }
  /// A number E with g^E = identity for every g.
  const FactoredInt& exponent_multiple() const noexcept { return exponent_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  const Elem& identity() const noexcept { return identity_; }

  std::uint64_t cap() const noexcept { return cap_; }
  bool enumerable() const noexcept { return order_ <= cap_; }

  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  bool owns(const Elem& a) const noexcept { return a.group() == this; }

  /// Exact multiplicative order. The default strips primes from the
  /// exponent multiple; backends with a direct oracle override it.
  virtual FactoredInt order_of(const Elem& g) const;

  virtual std::string format(const Elem& g) const = 0;
  /// Parses an element literal in this backend's notation. Validates the
  /// literal's shape (e.g. points within the degree), not group membership.
  virtual Elem parse(std::string_view text) const = 0;

  /// Full element list in deterministic BFS order.
  /// Throws CapExceeded when order() > cap().
  const Enumeration& elements() const;

  /// Parses and, when the group is enumerable, checks membership.
  Elem parse_member(std::string_view text) const;

 protected:
  Group(Backend backend, std::string name, std::uint64_t cap);

  /// Must be called exactly once by the concrete constructor.
  void init(std::uint64_t order, FactoredInt exponent, Payload identity,
            std::vector<Payload> generators);

  Elem wrap(Payload p) const { return Elem(this, std::move(p)); }
  void check_owned(const Elem& a, const char* op) const;

  virtual Payload mul_payload(const Payload& a, const Payload& b) const = 0;
  virtual Payload inv_payload(const Payload& a) const = 0;

 private:
  Backend backend_;
  std::string name_;
  std::uint64_t cap_;
  std::uint64_t order_ = 1;
  FactoredInt exponent_;
  Elem identity_;
  std::vector<Elem> generators_;

  mutable std::once_flag enum_once_;
  mutable std::unique_ptr<Enumeration> enum_;
};

using GroupRef = std::shared_ptr<const Group>;

/// BFS closure of `gens` under right multiplication, starting at the
/// identity. Throws CapExceeded if more than `limit` elements appear.
std::vector<Elem> closure(const Group& g, std::span<const Elem> gens,
                          std::uint64_t limit);

/// Indexed element list of an enumerable group. Immutable; safe to share.
class Enumeration {
 public:
  explicit Enumeration(std::vector<Elem> elems);

  std::size_t size() const noexcept { return elems_.size(); }
  const Elem& operator[](std::size_t k) const { return elems_[k]; }
  std::span<const Elem> all() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  std::optional<std::uint32_t> find(const Elem& e) const;
  /// Throws PreconditionError when `e` is not an element of the group.
  std::uint32_t index_of(const Elem& e) const;

 private:
  std::vector<Elem> elems_;
  std::unordered_map<Elem, std::uint32_t, ElemHash> index_;
};

// ---------------------------------------------------------------------------
// Element algebra (free functions; all check that operands share a group)

Elem mul(const Elem& a, const Elem& b);
Elem inv(const Elem& a);
/// a^g = g^-1 a g
Elem conj(const Elem& a, const Elem& g);
/// [a, b] = a^-1 b^-1 a b
Elem comm(const Elem& a, const Elem& b);
Elem pow(const Elem& a, std::int64_t n);
FactoredInt order(const Elem& g);
bool is_identity(const Elem& g);
bool commute(const Elem& a, const Elem& b);
bool is_involution(const Elem& g);
std::string to_string(const Elem& g);

}  // namespace mbb
