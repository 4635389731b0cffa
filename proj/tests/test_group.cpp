#include <doctest.h>

#include <random>

#include "galg/catalog.hpp"
#include "galg/error.hpp"
#include "galg/group.hpp"
#include "galg/rng.hpp"
#include "oracles.hpp"

using namespace galg;

namespace {

std::vector<Elem> flat(const oracle::Table& t) {
  std::vector<Elem> out;
  for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
  return out;
}

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

}  // namespace

TEST_CASE("catalog orders") {
  CHECK(build_group("cyclic(1)")->order() == 1);
  CHECK(build_group("symmetric(3)")->order() == 6);
  CHECK(build_group("dihedral(4)")->order() == 8);
  CHECK(build_group("quaternion8")->order() == 8);
  CHECK(build_group("unitriangular(3,3)")->order() == 27);
  CHECK(build_group("unitriangular(3,2)")->order() == 8);
  CHECK(build_group("direct_product(cyclic(2), symmetric(3))")->order() == 12);
  CHECK(build_group("symmetric(5)")->order() == 120);
}

TEST_CASE("symmetric tables match permutation arithmetic") {
  for (std::size_t k = 1; k <= 4; ++k) {
    const FiniteGroup g = symmetric_group(k);
    CHECK(g == FiniteGroup::from_table(g.order(), flat(oracle::permutation_table(k))));
  }
  const FiniteGroup s3 = symmetric_group(3);
  CHECK(s3.name(0) == "()");
  CHECK(s3.name(2) == "(1,2)");
  CHECK(s3.name(3) == "(1,2,3)");
}

TEST_CASE("unitriangular tables match matrix products") {
  for (int p : {2, 3}) {
    const FiniteGroup g = unitriangular_group(3, static_cast<std::size_t>(p));
    CHECK(g == FiniteGroup::from_table(g.order(), flat(oracle::unitriangular_table(p))));
  }
}

TEST_CASE("nilpotency class agrees with the brute-force series") {
  for (const char* d : {"cyclic(1)", "cyclic(6)", "symmetric(3)", "dihedral(4)", "dihedral(3)", "quaternion8",
                        "unitriangular(3,3)", "unitriangular(3,2)", "symmetric(4)",
                        "direct_product(quaternion8,cyclic(3))", "dihedral(8)"}) {
    CAPTURE(d);
    const GroupPtr g = build_group(d);
    const int expected = oracle::nilpotency_class(oracle::table_of(*g));
    const auto c = nilpotency_class(g);
    if (expected < 0)
      CHECK_FALSE(c.has_value());
    else
      CHECK(c == static_cast<std::size_t>(expected));
  }
  CHECK(nilpotency_class(build_group("cyclic(6)")) == 1u);
  CHECK(nilpotency_class(build_group("quaternion8")) == 2u);
  CHECK(nilpotency_class(build_group("unitriangular(3,3)")) == 2u);
  CHECK(nilpotency_class(build_group("dihedral(8)")) == 3u);
  CHECK_FALSE(nilpotency_class(build_group("symmetric(3)")).has_value());
  CHECK(nilpotency_class(build_group("cyclic(1)")) == 0u);
}

TEST_CASE("lower central series of S3 stalls at A3") {
  const auto series = lower_central_series(build_group("symmetric(3)"));
  REQUIRE(series.size() == 2);
  CHECK(series[0].order() == 6);
  CHECK(series[1].order() == 3);
}

TEST_CASE("subgroup closure") {
  const GroupPtr s3 = build_group("symmetric(3)");
  const Elem e = s3->identity(), t = 2, c = 3;
  CHECK(subgroup_closure(s3, std::vector<Elem>{e}).order() == 1);
  CHECK(subgroup_closure(s3, std::vector<Elem>{}).order() == 1);
  CHECK(subgroup_closure(s3, std::vector<Elem>{t}).order() == 2);
  CHECK(subgroup_closure(s3, std::vector<Elem>{t, c}).order() == 6);
  CHECK_THROWS_AS(subgroup_closure(s3, std::vector<Elem>{6}), InputError);

  Rng rng(11);
  for (const char* d : {"dihedral(4)", "quaternion8", "unitriangular(3,3)", "symmetric(4)"}) {
    const GroupPtr g = build_group(d);
    const auto t2 = oracle::table_of(*g);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Elem> gens;
      for (std::uint64_t k = rng.below(3); k > 0; --k) gens.push_back(static_cast<Elem>(rng.below(g->order())));
      const Subgroup s = subgroup_closure(g, gens);
      const auto expected = oracle::generated(t2, gens);
      CHECK(std::vector<Elem>(s.elements().begin(), s.elements().end()) ==
            std::vector<Elem>(expected.begin(), expected.end()));
      CHECK(g->order() % s.order() == 0);
    }
  }
}

TEST_CASE("group axioms hold for catalog groups") {
  for (const char* d : {"cyclic(5)", "dihedral(5)", "quaternion8", "symmetric(4)", "unitriangular(3,3)",
                        "direct_product(cyclic(2),dihedral(3))"}) {
    const GroupPtr g = build_group(d);
    const Elem n = static_cast<Elem>(g->order());
    for (Elem a = 0; a < n; ++a) {
      CHECK(g->mul(a, g->inv(a)) == g->identity());
      CHECK(g->pow(a, static_cast<std::int64_t>(g->element_order(a))) == g->identity());
      CHECK(g->pow(a, -1) == g->inv(a));
      for (Elem b = 0; b < n; ++b)
        CHECK(g->commutator(a, b) == g->mul(g->mul(g->inv(a), g->inv(b)), g->mul(a, b)));
    }
  }
}

TEST_CASE("malformed tables name the violated axiom") {
  auto axiom_of = [](std::size_t order, std::vector<Elem> t) {
    try {
      FiniteGroup::from_table(order, std::move(t));
    } catch (const GroupAxiomError& e) {
      return e.axiom();
    }
    return std::string("none");
  };
  CHECK(axiom_of(2, {0, 1, 1, 2}) == "closure");
  CHECK(axiom_of(2, {0, 0, 0, 0}) == "identity");
  CHECK(axiom_of(3, {0, 1, 2, 1, 1, 1, 2, 1, 0}) == "inverse");
  // Latin square with identity 0 that is not associative.
  CHECK(axiom_of(5, {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0}) ==
        "associativity");
  CHECK_THROWS_AS(FiniteGroup::from_table(0, {}), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_table(2, {0, 1, 1}), InputError);
}

TEST_CASE("associativity failures are detected on random magmas") {
  std::mt19937 gen(5);
  int caught = 0;
  for (int trial = 0; trial < 50; ++trial) {
    // Perturb one entry of a group table; the result is rarely a group.
    const FiniteGroup base = dihedral_group(3);
    std::vector<Elem> t(base.table().begin(), base.table().end());
    const std::size_t pos = 6 + gen() % 30;
    t[pos] = static_cast<Elem>((t[pos] + 1 + gen() % 5) % 6);
    try {
      const FiniteGroup g = FiniteGroup::from_table(6, t);
      for (Elem a = 0; a < 6; ++a)
        for (Elem b = 0; b < 6; ++b)
          for (Elem c = 0; c < 6; ++c) REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    } catch (const GroupAxiomError&) {
      ++caught;
    }
  }
  CHECK(caught == 50);
}

TEST_CASE("descriptor errors") {
  CHECK_THROWS_AS(build_group("cyclic(0)"), InputError);
  CHECK_THROWS_AS(build_group("symmetric(6)"), InputError);
  CHECK_THROWS_AS(build_group("unitriangular(3,5)"), InputError);
  CHECK_THROWS_AS(build_group("cyclic(2"), ParseError);
  CHECK_THROWS_AS(build_group("klein"), ParseError);
  try {
    build_group("direct_product(cyclic(2),)");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 25);
  }
}

TEST_CASE("table text round trip") {
  for (const char* d : {"symmetric(3)", "quaternion8", "direct_product(cyclic(2),cyclic(3))"}) {
    const GroupPtr g = build_group(d);
    const FiniteGroup back = parse_table(format_table(*g));
    CHECK(back == *g);
    for (Elem a = 0; a < g->order(); ++a) CHECK(back.name(a) == g->name(a));
  }
  const FiniteGroup c2 = parse_table("# cyclic\norder 2\n0 1\n1 0\nnames e a\n");
  CHECK(c2.order() == 2);
  CHECK(c2.name(1) == "a");
  try {
    parse_table("order 2\n0 1\n1\n");
    FAIL("no error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("direct product") {
  const FiniteGroup p = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(p.order() == 6);
  CHECK(p.is_abelian());
  CHECK(nilpotency_class(share(p)) == 1u);
  CHECK(p.mul(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1);
}
