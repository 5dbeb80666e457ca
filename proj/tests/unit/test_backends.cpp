#include <doctest.h>

#include "helpers.hpp"
#include "mbb/backends.hpp"

using namespace mbb;
using testing::el;
using testing::named;

TEST_CASE("cycle notation round trip") {
  const auto img = parse_cycles("(1 3 5)(2 4)", 6, 0);
  CHECK(img == std::vector<std::uint32_t>{2, 3, 4, 1, 0, 5});
  CHECK(format_cycles(img) == "(1 3 5)(2 4)");
  CHECK(format_cycles(parse_cycles("()", 4, 0)) == "()");
  CHECK_THROWS_AS(parse_cycles("(1 7)", 6, 0), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2 1)", 6, 0), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2", 6, 0), ParseError);
}

TEST_CASE("named group orders") {
  CHECK(named("sym:5")->order() == 120);
  CHECK(named("sym:1")->order() == 1);
  CHECK(named("alt:2")->order() == 1);
  CHECK(named("alt:6")->order() == 360);
  CHECK(named("cyc:1")->order() == 1);
  CHECK(named("dih:1")->order() == 2);
  CHECK(named("dih:2")->order() == 4);
  CHECK(named("dih:9")->order() == 18);
  auto p5 = std::dynamic_pointer_cast<const PermGroup>(named("psl2:5"));
  REQUIRE(p5);
  CHECK(p5->order() == 60);
  CHECK(p5->degree() == 6);
  for (std::uint64_t p : {2, 3, 7, 11, 13}) {
    CAPTURE(p);
    auto g = named("psl2:" + std::to_string(p));
    const std::uint64_t expect = p * (p * p - 1) / (p == 2 ? 1 : 2);
    CHECK(g->order() == expect);
    CHECK(g->elements().size() == expect);
  }
}

TEST_CASE("group spec errors carry positions") {
  CHECK_THROWS_AS(named("psl2:9"), ParseError);
  CHECK_THROWS_AS(named("psl2:4"), ParseError);
  CHECK_THROWS_AS(named("sym"), ParseError);
  CHECK_THROWS_AS(named("foo:3"), ParseError);
  try {
    named("perm:5:(1 2);(1 9)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 7);
  }
  const auto plan = parse_group_spec("perm:5:(1 2);(1 2 3 4 5)");
  CHECK(plan.kind == GroupPlan::Kind::perm);
  CHECK(plan.n == 5);
  CHECK(plan.generators.size() == 2);
  CHECK(parse_group_spec("sym:5").kind == GroupPlan::Kind::sym);
}

TEST_CASE("permutation orders use cycle lengths") {
  auto s7 = named("sym:7");
  for (const Elem& x : s7->elements()) {
    if (x.payload()[0] % 3 != 0) continue;  // a deterministic subset
    CHECK(order(x).value() == testing::brute_order(x));
  }
}

TEST_CASE("table groups") {
  auto z4 = named("table:z4.table");
  CHECK(z4->order() == 4);
  CHECK(order(el(z4, "1")).value() == 4);
  CHECK(to_string(mul(el(z4, "3"), el(z4, "3"))) == "2");
  CHECK_THROWS_AS(named("table:not_latin.table"), Error);
  std::vector<std::vector<std::uint32_t>> nonassoc{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3},
                                                   {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(TableGroup::create("bad", nonassoc), Error);
  auto sl = named("table:sl23.table");
  CHECK(sl->order() == 24);
  int invols = 0;
  for (const Elem& x : sl->elements()) invols += is_involution(x);
  CHECK(invols == 1);
}

TEST_CASE("semidirect products") {
  auto g = std::dynamic_pointer_cast<const SemidirectGroup>(
      named(std::string("sd:") + MBB_DATA_DIR + "/fixtures/c3c3_diag.sd"));
  REQUIRE(g);
  CHECK(g->order() == 36);
  CHECK(g->elements().size() == 36);
  // Projection to V is a homomorphism.
  const auto& e = g->elements();
  for (std::size_t a = 0; a < e.size(); a += 5)
    for (std::size_t b = 0; b < e.size(); b += 3)
      CHECK(g->acting_component(mul(e[a], e[b])) == mul(g->acting_component(e[a]), g->acting_component(e[b])));
  const Elem s = g->embed_normal(el(g->normal_part(), "(1 2 3)"));
  const Elem i = g->embed_acting(el(g->acting_part(), "(1 2)"));
  CHECK(conj(s, i) == inv(s));
  CHECK(to_string(s) == "[(1 2 3) | ()]");
  CHECK(g->parse(to_string(mul(s, i))) == mul(s, i));

  auto d10 = named("sd:c5_c2.sd");
  CHECK(d10->order() == 10);
  std::multiset<std::uint64_t> prof_a, prof_b;
  for (const Elem& x : d10->elements()) prof_a.insert(order(x).value());
  auto d5 = named("dih:5");
  for (const Elem& x : d5->elements()) prof_b.insert(order(x).value());
  CHECK(prof_a == prof_b);

  CHECK_THROWS_AS(named("sd:bad_action.sd"), Error);

  auto h = named("cyc:3"), v = named("cyc:2");
  auto direct = make_semidirect(h, v, {{h->generators()[0]}});
  CHECK(direct->order() == 6);
  CHECK(center(GroupRef(direct)).size() == 6);
}

TEST_CASE("centralizers and centres") {
  auto s3 = named("sym:3");
  CHECK(centralizer(s3, el(s3, "(1 2)")).size() == 2);
  CHECK(centralizer(s3, s3->identity()).size() == 6);
  auto a5 = named("alt:5");
  auto c = centralizer(a5, el(a5, "(1 2)(3 4)"));
  CHECK(c.size() == 4);
  CHECK(c.is_abelian());
  CHECK(center(s3).size() == 1);
  CHECK(center(named("cyc:12")).size() == 12);
  CHECK(center(named("dih:4")).size() == 2);

  for (const auto& spec : testing::small_corpus()) {
    CAPTURE(spec);
    auto g = named(spec);
    const auto& e = g->elements();
    const Elem& a = e[e.size() / 2];
    auto ca = centralizer(g, a);
    std::size_t brute = 0;
    for (const Elem& x : e) brute += mul(a, x) == mul(x, a);
    CHECK(ca.size() == brute);
    std::size_t zb = 0;
    for (const Elem& x : e) {
      bool central = true;
      for (const Elem& y : g->generators()) central = central && commute(x, y);
      zb += central;
    }
    CHECK(center(g).size() == zb);
  }
}

TEST_CASE("Sylow 2-subgroups have the full 2-part") {
  CHECK(sylow2(named("sym:4")).size() == 8);
  CHECK(sylow2(named("cyc:15")).size() == 1);
  auto s = sylow2(named("alt:5"));
  CHECK(s.size() == 4);
  CHECK(s.is_abelian());
  for (const Elem& x : s.elements()) CHECK((is_identity(x) || is_involution(x)));
  for (const std::string spec : {"sym:3", "sym:5", "sym:6", "sym:7", "alt:6", "dih:12", "psl2:7", "psl2:11",
                                 "psl2:13", "table:sl23.table", "cyc:48"}) {
    CAPTURE(spec);
    auto g = named(spec);
    auto p = sylow2(g);
    CHECK(p.size() == FactoredInt(g->order()).part(2));
    for (const Elem& x : p.elements()) CHECK(testing::is_p_power(order(x).value(), 2));
  }
}

TEST_CASE("odd core agrees with class-union enumeration") {
  CHECK(odd_core(named("sym:3")).size() == 3);
  CHECK(odd_core(named("cyc:15")).size() == 15);
  CHECK(odd_core(named("alt:5")).size() == 1);
  for (const auto& spec : testing::small_corpus()) {
    CAPTURE(spec);
    auto g = named(spec);
    if (testing::brute_classes(g).size() > 16) continue;
    const auto core = odd_core(g);
    CHECK(core.mask() == testing::brute_odd_core(g));
    CHECK(core.size() % 2 == 1);
    CHECK(core.is_normalized_by(SubgroupSet::whole(g)));
  }
}

TEST_CASE("conjugacy classes") {
  auto count = [](const std::string& s) { return conjugacy_classes(SubgroupSet::whole(named(s))).size(); };
  CHECK(count("sym:5") == 7);
  CHECK(count("alt:5") == 5);
  CHECK(count("psl2:7") == 6);
  CHECK(count("table:sl23.table") == 7);
  for (const auto& spec : testing::small_corpus()) {
    CAPTURE(spec);
    auto g = named(spec);
    auto a = conjugacy_classes(SubgroupSet::whole(g));
    auto b = testing::brute_classes(g);
    std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
    CHECK(a == b);
  }
  CHECK(involution_class_representatives(named("sym:4")).size() == 2);
  CHECK(involution_class_representatives(named("cyc:9")).empty());
}

TEST_CASE("subgroup sets are closed") {
  auto g = named("sym:4");
  std::vector<char> bad(24, 0);
  bad[0] = 1;
  bad[1] = 1;
  bad[2] = 1;
  if (!testing::is_subgroup_mask(g, bad)) CHECK_THROWS_AS(SubgroupSet::from_mask(g, bad), InternalError);
  auto h = SubgroupSet::generated(g, std::vector<Elem>{el(g, "(1 2 3 4)")});
  CHECK(h.size() == 4);
  CHECK(testing::is_subgroup_mask(g, h.mask()));
  CHECK(h.is_subset_of(SubgroupSet::whole(g)));
  CHECK_FALSE(h.is_normalized_by(SubgroupSet::whole(g)));
}
