#include <doctest.h>

#include "helpers.hpp"
#include "mbb/elemarith.hpp"

using namespace mbb;
using testing::el;
using testing::named;

namespace {

/// Every commuting pair (x, y) in <g> with x a p-element, y of order prime
/// to p and x y = g.
std::vector<std::pair<Elem, Elem>> brute_splits(const Elem& g, std::uint64_t p) {
  const auto pw = testing::powers(g);
  std::vector<std::pair<Elem, Elem>> out;
  for (const Elem& x : pw) {
    if (!testing::is_p_power(testing::brute_order(x), p)) continue;
    for (const Elem& y : pw) {
      if (testing::brute_order(y) % p == 0) continue;
      if (mul(x, y) == g) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("p_split examples") {
  auto s5 = named("sym:5");
  const auto s = p_split(el(s5, "(1 2)(3 4 5)"), 2);
  CHECK(to_string(s.p_part) == "(1 2)");
  CHECK(to_string(s.coprime_part) == "(3 4 5)");
  const Elem four = el(s5, "(1 2 3 4)");
  CHECK(p_split(four, 2).p_part == four);
  CHECK(is_identity(p_split(four, 2).coprime_part));
  CHECK(is_identity(p_split(four, 3).p_part));
  CHECK(p_split(four, 3).coprime_part == four);
}

TEST_CASE("p_split equals the unique brute-force split") {
  for (const auto& spec : testing::small_corpus()) {
    CAPTURE(spec);
    auto g = named(spec);
    for (const Elem& x : g->elements()) {
      for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        const auto pairs = brute_splits(x, p);
        REQUIRE(pairs.size() == 1);
        const PSplit s = p_split(x, p);
        CHECK(s.p_part == pairs[0].first);
        CHECK(s.coprime_part == pairs[0].second);
        CHECK(commute(s.p_part, s.coprime_part));
      }
    }
  }
}

TEST_CASE("odd square roots") {
  auto s3 = named("sym:3");
  CHECK(to_string(odd_sqrt(el(s3, "(1 2 3)"))) == "(1 3 2)");
  CHECK(is_identity(odd_sqrt(s3->identity())));
  CHECK_THROWS_AS(odd_sqrt(el(s3, "(1 2)")), PreconditionError);
  auto c15 = named("cyc:15");
  const Elem g = c15->generators()[0];
  CHECK(odd_sqrt(g) == pow(g, 8));
  for (const auto& spec : testing::small_corpus()) {
    CAPTURE(spec);
    auto g = named(spec);
    for (const Elem& x : g->elements()) {
      if (testing::brute_order(x) % 2 == 0) continue;
      const auto pw = testing::powers(x);
      std::vector<Elem> roots;
      for (const Elem& y : pw)
        if (mul(y, y) == x) roots.push_back(y);
      REQUIRE(roots.size() == 1);
      CHECK(odd_sqrt(x) == roots[0]);
    }
  }
}

TEST_CASE("p-elements of cosets") {
  auto s3 = named("sym:3");
  const auto h3 = SubgroupSet::generated(s3, std::vector<Elem>{el(s3, "(1 2 3)")});
  CHECK(to_string(coset_p_element(el(s3, "(1 2)"), h3, 2)) == "(1 2)");

  auto c6 = named("cyc:6");
  const Elem g = c6->generators()[0];
  const auto h = SubgroupSet::generated(c6, std::vector<Elem>{pow(g, 2)});
  const Elem s = coset_p_element(g, h, 2);
  CHECK(s == pow(g, 3));
  CHECK(h.contains(mul(g, inv(s))));

  auto d6 = named("dih:6");
  const Elem r = d6->generators()[0];
  REQUIRE(order(r).value() == 6);
  const auto hr = SubgroupSet::generated(d6, std::vector<Elem>{pow(r, 2)});
  CHECK(coset_p_element(r, hr, 2) == pow(r, 3));
  CHECK(hr.contains(mul(r, pow(r, -3))));

  // a^p outside H violates the precondition.
  CHECK_THROWS_AS(coset_p_element(r, SubgroupSet::generated(d6, std::vector<Elem>{d6->identity()}), 2),
                  PreconditionError);
}

TEST_CASE("modular inverses") {
  CHECK(inverse_mod(3, 7) == 5);
  CHECK(inverse_mod(5, 1) == 0);
  for (std::uint64_t m = 2; m < 60; ++m)
    for (std::uint64_t x = 1; x < m; ++x)
      if (gcd_u64(x, m) == 1) CHECK(inverse_mod(x, m) * x % m == 1);
  CHECK_THROWS_AS(inverse_mod(4, 6), ParameterError);
}
