#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mbb/genlift.hpp"
#include "mbb/sampler.hpp"

using namespace mbb;
using testing::el;
using testing::named;

namespace {

std::shared_ptr<const SemidirectGroup> fixture(const std::string& name) {
  return std::dynamic_pointer_cast<const SemidirectGroup>(
      named(std::string("sd:") + MBB_DATA_DIR + "/fixtures/" + name));
}

}  // namespace

TEST_CASE("C-lift in the dihedral group of order 10") {
  auto d5 = named("dih:5");
  const Elem t = d5->generators()[0];
  const Elem i = d5->generators()[1];
  REQUIRE(order(t).value() == 5);
  REQUIRE(is_involution(i));
  const auto h = SubgroupSet::generated(d5, std::vector<Elem>{t});
  CHECK(comm(i, t) == pow(t, 2));
  CHECK(is_identity(c_lift(d5, h, i, t)));
  CHECK(c_lift(d5, h, i, i) == i);
  CHECK(c_lift(d5, h, i, d5->identity()) == d5->identity());
  for (const Elem& g : d5->elements()) {
    const Elem y = c_lift(d5, h, i, g);
    CHECK(commute(y, i));
    CHECK(h.contains(mul(inv(y), g)));
  }
}

TEST_CASE("C-lift preconditions") {
  auto s4 = named("sym:4");
  const auto v4 = SubgroupSet::generated(s4, std::vector<Elem>{el(s4, "(1 2)(3 4)"), el(s4, "(1 3)(2 4)")});
  CHECK_THROWS_AS(c_lift(s4, v4, el(s4, "(1 2)"), el(s4, "(1 3)")), PreconditionError);
  auto s3 = named("sym:3");
  const auto a3 = SubgroupSet::generated(s3, std::vector<Elem>{el(s3, "(1 2 3)")});
  CHECK_THROWS_AS(c_lift(s3, a3, el(s3, "(1 2 3)"), el(s3, "(1 2)")), PreconditionError);
  auto s5 = named("sym:5");
  const auto c3 = SubgroupSet::generated(s5, std::vector<Elem>{el(s5, "(1 2 3)")});
  CHECK_THROWS_AS(c_lift(s5, c3, el(s5, "(1 2)"), el(s5, "(1 4)")), PreconditionError);
}

TEST_CASE("four-group decomposition on the order-36 fixture") {
  auto g = fixture("c3c3_diag.sd");
  REQUIRE(g);
  const Elem s = g->embed_normal(el(g->normal_part(), "(1 2 3)"));
  const Elem t = g->embed_normal(el(g->normal_part(), "(4 5 6)"));
  const auto [i, j] = four_group_basis(*g);
  const DecompCert c = four_group_decompose(*g, mul(s, t));
  REQUIRE(c.factors.size() == 3);
  CHECK(c.trace.h0 == pow(t, 2));
  CHECK(is_identity(c.trace.h1));
  CHECK(c.factors[0].factor == s);
  CHECK(c.factors[0].involution == j);
  CHECK(is_identity(c.factors[1].factor));
  CHECK(c.factors[1].involution == mul(i, j));
  CHECK(c.factors[2].factor == t);
  CHECK(c.factors[2].involution == i);
  CHECK(validate(*g, c).ok());

  const DecompCert id = four_group_decompose(*g, g->identity());
  for (const auto& f : id.factors) CHECK(is_identity(f.factor));
  CHECK(validate(*g, id).ok());

  CHECK_THROWS_AS(four_group_decompose(*g, i), PreconditionError);
}

TEST_CASE("certificates validate on every fixture") {
  for (const std::string name : {"c3c3_diag.sd", "c3c3_swap.sd", "c7c7_diag.sd"}) {
    CAPTURE(name);
    auto g = fixture(name);
    const auto r = generation_check(g, std::nullopt, 1);
    CHECK(r.exhaustive);
    CHECK(r.certificate_failures == 0);
    CHECK(r.closure_is_normal_part);
    CHECK(r.clift_failures == 0);
    CHECK(r.clift_checked == 3 * g->order());
  }
  const auto big = fixture("c7c7_diag.sd");
  const auto& h = big->normal_part()->elements();
  std::mt19937_64 rng(5);
  for (int k = 0; k < 500; ++k) {
    const Elem x = h[uniform_below(rng, h.size())];
    CHECK(validate(*big, four_group_decompose(*big, x)).ok());
  }
}

TEST_CASE("cyclic H of order 105 with one inverting involution") {
  auto g = std::dynamic_pointer_cast<const SemidirectGroup>(named("sd:c105_klein.sd"));
  REQUIRE(g);
  const auto r = generation_check(g, std::nullopt, 1);
  CHECK(r.passed());
  CHECK(r.closure_order == 105);
  const auto s = generation_check(g, 20, 3);
  CHECK_FALSE(s.exhaustive);
  CHECK(s.certificates_checked == 20);
}

TEST_CASE("decomposition preconditions") {
  auto d10 = std::dynamic_pointer_cast<const SemidirectGroup>(named("sd:c5_c2.sd"));
  CHECK_THROWS_AS(four_group_decompose(*d10, d10->identity()), PreconditionError);
  auto h = named("cyc:3");
  auto v = named("cyc:2");
  auto direct = make_semidirect(h, v, {{h->generators()[0]}});
  CHECK_THROWS_AS(generation_check(direct, std::nullopt, 1), PreconditionError);
}

TEST_CASE("validation catches a tampered certificate") {
  auto g = fixture("c3c3_diag.sd");
  const Elem s = g->embed_normal(el(g->normal_part(), "(1 2 3)"));
  DecompCert c = four_group_decompose(*g, s);
  c.factors[0].factor = mul(c.factors[0].factor, s);
  CHECK_FALSE(validate(*g, c).product_ok);
  c = four_group_decompose(*g, s);
  c.factors[2].involution = g->identity();
  CHECK_FALSE(validate(*g, c).involutions_ok);
}
