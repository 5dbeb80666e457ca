#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mbb/bbcore.hpp"

using namespace mbb;
using testing::el;
using testing::named;

TEST_CASE("factored integers") {
  const FactoredInt n(360);
  CHECK(n.value() == 360);
  CHECK(n.to_string() == "360 = 2^3 * 3^2 * 5");
  CHECK(n.multiplicity(2) == 3);
  CHECK(n.multiplicity(7) == 0);
  CHECK(n.part(3) == 9);
  std::uint64_t prod = 1, last = 0;
  for (auto [p, e] : n.factors()) {
    CHECK(p > last);
    last = p;
    for (unsigned k = 0; k < e; ++k) prod *= p;
  }
  CHECK(prod == 360);
  CHECK(FactoredInt(1).factors().empty());
  CHECK(FactoredInt(1).to_string() == "1 = 1");
  CHECK(FactoredInt::from_factors({{2, 2}, {3, 1}}) == FactoredInt(12));
  CHECK(is_prime(997));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(lcm_u64(4, 6) == 12);
}

TEST_CASE("products apply the left factor first") {
  auto s3 = named("sym:3");
  const Elem a = el(s3, "(1 2)"), b = el(s3, "(2 3)");
  // Point oracle: 1 -> 2 -> 3, 2 -> 1 -> 1, 3 -> 3 -> 2.
  CHECK(to_string(mul(a, b)) == "(1 3 2)");
  CHECK(mul(a, b).payload() == testing::point_product(a.payload(), b.payload()));
  CHECK(mul(s3->identity(), a) == a);
  CHECK(is_identity(mul(a, inv(a))));
}

TEST_CASE("conjugation and commutators") {
  auto s3 = named("sym:3");
  const Elem i = el(s3, "(1 2)"), g = el(s3, "(1 2 3)");
  CHECK(to_string(conj(i, g)) == "(2 3)");
  CHECK(conj(i, s3->identity()) == i);
  CHECK(conj(g, g) == g);
  CHECK(comm(i, g) == mul(inv(i), conj(i, g)));
  CHECK(is_identity(comm(i, s3->identity())));
  CHECK(is_identity(comm(g, g)));
}

TEST_CASE("orders") {
  auto s5 = named("sym:5");
  CHECK(order(el(s5, "(1 2)(3 4 5)")) == FactoredInt(6));
  CHECK(order(s5->identity()).value() == 1);
  auto c12 = named("cyc:12");
  CHECK(order(c12->generators()[0]).to_string() == "12 = 2^2 * 3");
  CHECK(testing::brute_order(c12->generators()[0]) == 12);
}

TEST_CASE("order laws on every element") {
  for (const auto& spec : testing::small_corpus()) {
    CAPTURE(spec);
    auto g = named(spec);
    for (const Elem& x : g->elements()) {
      const FactoredInt o = order(x);
      CHECK(o.value() == testing::brute_order(x));
      CHECK(is_identity(pow(x, static_cast<std::int64_t>(o.value()))));
      for (auto [p, e] : o.factors()) CHECK_FALSE(is_identity(pow(x, static_cast<std::int64_t>(o.value() / p))));
      CHECK(g->exponent_multiple().value() % o.value() == 0);
    }
  }
}

TEST_CASE("random identities: conjugation distributes, commutator formula, order invariance") {
  std::mt19937_64 rng(11);
  for (const auto& spec : {"sym:5", "psl2:7", "dih:12", "table:sl23.table"}) {
    auto g = named(spec);
    const auto& e = g->elements();
    std::uniform_int_distribution<std::size_t> pick(0, e.size() - 1);
    for (int t = 0; t < 1000; ++t) {
      const Elem& a = e[pick(rng)];
      const Elem& b = e[pick(rng)];
      const Elem& c = e[pick(rng)];
      CHECK(conj(mul(a, b), c) == mul(conj(a, c), conj(b, c)));
      CHECK(comm(a, b) == mul(inv(a), conj(a, b)));
      CHECK(order(conj(a, b)) == order(a));
    }
  }
}

TEST_CASE("powers with negative exponents") {
  auto c7 = named("cyc:7");
  const Elem g = c7->generators()[0];
  CHECK(pow(g, -1) == inv(g));
  CHECK(pow(g, -8) == inv(g));
  CHECK(is_identity(pow(g, 0)));
}

TEST_CASE("cross-group operations are errors") {
  auto a = named("sym:3");
  auto b = named("sym:3");
  CHECK_THROWS_AS(mul(a->generators()[0], b->generators()[0]), DomainError);
  CHECK(a->generators()[0] != b->generators()[0]);
  CHECK_THROWS_AS(a->elements().index_of(b->generators()[0]), PreconditionError);
}

TEST_CASE("equality matches payload identity") {
  auto s4 = named("sym:4");
  const auto& e = s4->elements();
  for (std::size_t x = 0; x < e.size(); ++x)
    for (std::size_t y = 0; y < e.size(); ++y) CHECK((e[x] == e[y]) == (e[x].payload() == e[y].payload()));
  CHECK(e.size() == std::set<Payload>([&] {
          std::set<Payload> s;
          for (const auto& x : e) s.insert(x.payload());
          return s;
        }()).size());
}

TEST_CASE("enumeration cap is enforced") {
  auto s8 = named("sym:8", 1000);
  CHECK(s8->order() == 40320);
  CHECK_FALSE(s8->enumerable());
  CHECK_THROWS_AS(s8->elements(), CapExceeded);
  CHECK(order(s8->parse("(1 2 3)(4 5)")) == FactoredInt(6));
}

TEST_CASE("generators generate") {
  for (const auto& spec : testing::small_corpus()) {
    CAPTURE(spec);
    auto g = named(spec);
    CHECK_FALSE(g->generators().empty());
    CHECK(closure(*g, g->generators(), g->order() + 1).size() == g->order());
  }
}
