#include "mbb/bbcore.hpp"

#include <algorithm>
#include <sstream>

namespace mbb {

CapExceeded::CapExceeded(std::uint64_t order, std::uint64_t cap)
    : Error("enumeration cap exceeded: group order " + std::to_string(order) +
            " > cap " + std::to_string(cap)),
      order_(order),
      cap_(cap) {}

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error(what + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

InternalError::InternalError(std::string assertion, const std::string& detail)
    : Error("internal assertion '" + assertion + "' failed: " + detail),
      assertion_(std::move(assertion)) {}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t g = gcd_u64(a, b);
  const std::uint64_t q = a / g;
  if (q > UINT64_MAX / b) throw ParameterError("lcm overflows 64 bits");
  return q * b;
}

FactoredInt::FactoredInt(std::uint64_t value) : value_(value) {
  if (value == 0) throw ParameterError("FactoredInt requires a positive value");
  std::uint64_t n = value;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k > 0) factors_.emplace_back(p, k);
  }
  if (n > 1) factors_.emplace_back(n, 1U);
}

FactoredInt FactoredInt::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  FactoredInt out;
  out.value_ = 1;
  for (const auto& [p, k] : factors) {
    if (!is_prime(p)) throw ParameterError("non-prime factor " + std::to_string(p));
    if (k == 0) continue;
    if (!out.factors_.empty() && out.factors_.back().first == p) {
      out.factors_.back().second += k;
    } else {
      out.factors_.emplace_back(p, k);
    }
    for (unsigned i = 0; i < k; ++i) {
      if (out.value_ > UINT64_MAX / p) throw ParameterError("FactoredInt overflow");
      out.value_ *= p;
    }
  }
  return out;
}

unsigned FactoredInt::multiplicity(std::uint64_t prime) const noexcept {
  for (const auto& [p, k] : factors_) {
    if (p == prime) return k;
  }
  return 0;
}

std::uint64_t FactoredInt::part(std::uint64_t prime) const noexcept {
  std::uint64_t r = 1;
  for (unsigned i = multiplicity(prime); i > 0; --i) r *= prime;
  return r;
}

std::string FactoredInt::to_string() const {
  std::ostringstream os;
  os << value_ << " = ";
  if (factors_.empty()) {
    os << "1";
    return os.str();
  }
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k > 0) os << " * ";
    os << factors_[k].first;
    if (factors_[k].second > 1) os << "^" << factors_[k].second;
  }
  return os.str();
}

}  // namespace mbb
