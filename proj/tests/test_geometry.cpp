#include <doctest.h>

#include <numeric>

#include "galg/catalog.hpp"
#include "galg/coordinate_group.hpp"
#include "galg/error.hpp"
#include "galg/geometry.hpp"
#include "galg/rng.hpp"
#include "oracles.hpp"

using namespace galg;

namespace {

EquationSystem system_of(const WordContext& ctx, std::initializer_list<const char*> eqs) {
  EquationSystem s(ctx);
  for (const char* e : eqs) s.add(parse_equation(e, ctx));
  return s;
}

AlgebraicSet random_subset(const Space& space, Rng& rng, std::size_t max_points) {
  std::vector<std::uint64_t> codes;
  for (std::uint64_t k = 1 + rng.below(max_points); k > 0; --k) codes.push_back(rng.below(space.size()));
  return AlgebraicSet::from_codes(space, codes, Provenance::raw);
}

std::set<oracle::Vec> as_set(const AlgebraicSet& s) {
  const auto t = oracle::tuples_of(s);
  return {t.begin(), t.end()};
}

const char* kSmallGroups[] = {"cyclic(2)", "cyclic(4)", "direct_product(cyclic(2),cyclic(2))", "cyclic(6)",
                              "symmetric(3)", "dihedral(4)", "quaternion8"};

}  // namespace

TEST_CASE("space encoding is lexicographic") {
  const Space sp(WordContext::free(3), build_group("cyclic(4)"));
  CHECK(sp.size() == 64);
  std::uint64_t prev = 0;
  bool first = true;
  for (const auto& p : oracle::all_points(4, 3)) {
    const std::uint64_t code = sp.encode(p);
    CHECK(sp.decode(code) == p);
    if (!first) CHECK(code == prev + 1);
    prev = code;
    first = false;
  }
}

TEST_CASE("solve") {
  const GroupPtr s3 = build_group("symmetric(3)");
  const auto one = WordContext::free(1), two = WordContext::free(2);
  CHECK(solve(EquationSystem(two), s3).size() == 36);
  const AlgebraicSet cubes = solve(system_of(one, {"x1^3"}), s3);
  CHECK(oracle::tuples_of(cubes) == std::vector<oracle::Vec>{{0}, {3}, {4}});
  const AlgebraicSet v = solve(system_of(two, {"[x1,x2]", "x1^2", "x2^3"}), s3);
  CHECK(oracle::tuples_of(v) == std::vector<oracle::Vec>{{0, 0}, {0, 3}, {0, 4}, {1, 0}, {2, 0}, {5, 0}});
  CHECK(solve(system_of(two, {"[x1,x2]"}), s3).size() == 18);
  CHECK(solve(system_of(two, {"x1 x2 = x2 x1"}), s3) == solve(system_of(two, {"[x1,x2]"}), s3));

  const auto cctx = WordContext::with_constants(1, s3);
  const AlgebraicSet centralizer = solve(system_of(cctx, {"x1 g2 = g2 x1"}), s3);
  CHECK(oracle::tuples_of(centralizer) == std::vector<oracle::Vec>{{0}, {2}});
  CHECK(solve(system_of(cctx, {"x1 = g3"}), s3).size() == 1);
  CHECK(solve(system_of(cctx, {"x1^2 = g3"}), s3).size() == 1);
  CHECK(solve(system_of(cctx, {"x1^2 = g2"}), s3).empty());
}

TEST_CASE("solve matches brute-force evaluation and is independent of jobs") {
  Rng rng(3);
  for (const char* d : kSmallGroups) {
    const GroupPtr g = build_group(d);
    const auto table = oracle::table_of(*g);
    const auto ctx = WordContext::free(2);
    for (int i = 0; i < 20; ++i) {
      EquationSystem sys(ctx);
      std::vector<Word> ws;
      for (std::uint64_t k = 1 + rng.below(2); k > 0; --k) {
        std::vector<Letter> raw;
        for (std::uint64_t l = rng.below(7); l > 0; --l)
          raw.push_back({LetterKind::variable, static_cast<std::uint32_t>(rng.below(2)), rng.below(2) ? 1 : -1});
        ws.push_back(Word::reduce(ctx, raw));
        sys.add(Equation(ws.back()));
      }
      std::set<oracle::Vec> expected;
      for (const auto& p : oracle::all_points(g->order(), 2)) {
        bool ok = true;
        for (const auto& w : ws) ok = ok && oracle::eval(w, p, table) == g->identity();
        if (ok) expected.insert(p);
      }
      const Space sp(ctx, g);
      CHECK(as_set(solve(sys, sp, 1)) == expected);
      CHECK(solve(sys, sp, 3) == solve(sys, sp, 1));
    }
  }
}

TEST_CASE("radical membership") {
  const GroupPtr s3 = build_group("symmetric(3)");
  const auto one = WordContext::free(1);
  const Space sp(one, s3);
  const AlgebraicSet empty = AlgebraicSet::from_codes(sp, {}, Provenance::raw);
  CHECK(radical_contains(empty, parse_equation("x1", one)));
  CHECK(radical_contains(AlgebraicSet::whole_space(sp), parse_equation("x1 = x1", one)));
  const AlgebraicSet cubes = solve(system_of(one, {"x1^3"}), s3);
  CHECK(radical_contains(cubes, parse_equation("x1^6", one)));
  CHECK_FALSE(radical_contains(cubes, parse_equation("x1", one)));
}

TEST_CASE("closure of {e, t} over S3 is the set of involutions and e") {
  const GroupPtr s3 = build_group("symmetric(3)");
  const Space sp(WordContext::free(1), s3);
  const AlgebraicSet e_t = AlgebraicSet::from_tuples(sp, std::vector<Tuple>{{0}, {2}});
  const ClosureResult cl = closure(e_t);
  CHECK_FALSE(cl.is_algebraic);
  CHECK(oracle::tuples_of(cl.set) == std::vector<oracle::Vec>{{0}, {1}, {2}, {5}});
  CHECK(cl.set.provenance() == Provenance::closure);
}

TEST_CASE("n = 1 closures are the elements whose order divides the exponent of E") {
  for (const char* d : kSmallGroups) {
    const GroupPtr g = build_group(d);
    const Space sp(WordContext::free(1), g);
    Rng rng(stable_hash(d));
    for (int i = 0; i < 30; ++i) {
      const AlgebraicSet e = random_subset(sp, rng, 3);
      std::size_t m = 1;
      for (std::size_t j = 0; j < e.size(); ++j) m = std::lcm(m, g->element_order(e.tuple(j)[0]));
      std::set<oracle::Vec> expected;
      for (Elem x = 0; x < g->order(); ++x)
        if (g->pow(x, static_cast<std::int64_t>(m)) == g->identity()) expected.insert({x});
      CHECK(as_set(closure(e).set) == expected);
    }
  }
}

TEST_CASE("closure matches the coordinate-extension oracle") {
  for (const char* d : kSmallGroups) {
    CAPTURE(d);
    const GroupPtr g = build_group(d);
    const auto table = oracle::table_of(*g);
    const Space sp(WordContext::free(2), g);
    Rng rng(stable_hash(d, 2));
    for (int i = 0; i < 12; ++i) {
      const AlgebraicSet e = random_subset(sp, rng, 3);
      CHECK(as_set(closure(e).set) == oracle::closure(table, oracle::tuples_of(e), 2));
    }
  }
}

TEST_CASE("closure in coefficient mode matches the oracle") {
  for (const char* d : {"symmetric(3)", "cyclic(4)", "quaternion8"}) {
    CAPTURE(d);
    const GroupPtr g = build_group(d);
    const auto table = oracle::table_of(*g);
    const Space sp(WordContext::with_constants(1, g), g);
    oracle::Vec all(g->order());
    std::iota(all.begin(), all.end(), 0);
    Rng rng(stable_hash(d, 3));
    for (int i = 0; i < 12; ++i) {
      const AlgebraicSet e = random_subset(sp, rng, 2);
      CHECK(as_set(closure(e).set) == oracle::closure(table, oracle::tuples_of(e), 1, all));
    }
    // Singletons are algebraic once constants are available.
    const AlgebraicSet single = AlgebraicSet::from_codes(sp, {1 % g->order()}, Provenance::raw);
    CHECK(closure(single).is_algebraic);
  }
}

TEST_CASE("closure laws") {
  Rng rng(77);
  for (const char* d : {"symmetric(3)", "dihedral(4)", "cyclic(6)"}) {
    const GroupPtr g = build_group(d);
    const Space sp(WordContext::free(2), g);
    for (int i = 0; i < 25; ++i) {
      const AlgebraicSet a = random_subset(sp, rng, 3);
      std::vector<std::uint64_t> more(a.codes().begin(), a.codes().end());
      more.push_back(rng.below(sp.size()));
      const AlgebraicSet b = AlgebraicSet::from_codes(sp, more, Provenance::raw);
      const ClosureResult ca = closure(a), cb = closure(b);
      CHECK(a.is_subset_of(ca.set));
      CHECK(ca.set.is_subset_of(cb.set));
      const ClosureResult again = closure(ca.set);
      CHECK(again.is_algebraic);
      CHECK(again.set == ca.set);
      CHECK(closure(a, 4).set == ca.set);
    }
  }
  CHECK_THROWS_AS(closure(AlgebraicSet::from_codes(Space(WordContext::free(1), build_group("cyclic(2)")), {},
                                                   Provenance::raw)),
                  InputError);
}

TEST_CASE("system files") {
  const GroupPtr s3 = build_group("symmetric(3)");
  const EquationSystem s = parse_system("# sample\nvars 2\n\neq [x1,x2]\neq x1^2 = 1\neq x2^3\n", s3);
  CHECK(s.context().nvars == 2);
  CHECK(s.size() == 3);
  CHECK_FALSE(s.context().coefficient_mode());
  const EquationSystem c = parse_system("vars 1\ncoefficients\neq x1 g2 = g2 x1\n", s3);
  CHECK(c.context().coefficient_mode());
  auto message = [&](const char* text) {
    try {
      parse_system(text, s3);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("vars 2\neq x3\n").find("line 2") != std::string::npos);
  CHECK(message("eq x1\n").find("line 1") != std::string::npos);
  CHECK(message("vars 1\nequation x1\n").find("line 2") != std::string::npos);
  CHECK_FALSE(message("vars 1\neq g1\n").empty());
}

TEST_CASE("coordinate groups") {
  const GroupPtr s3 = build_group("symmetric(3)");
  const GroupPtr c2 = build_group("cyclic(2)");
  const auto one = WordContext::free(1), two = WordContext::free(2);
  const Space s3_2(two, s3);

  CHECK(coordinate_group(AlgebraicSet::from_codes(s3_2, {0}, Provenance::raw)).order() == 1);
  CHECK(coordinate_group(AlgebraicSet::whole_space(Space(one, c2))).order() == 2);
  CHECK_THROWS_AS(coordinate_group(AlgebraicSet::from_codes(s3_2, {}, Provenance::raw)), InputError);

  const AlgebraicSet comm = solve(system_of(two, {"[x1,x2]"}), s3);
  const CoordinateGroup q = coordinate_group(comm);
  CHECK(q.order() == oracle::coordinate_order(oracle::table_of(*s3), oracle::tuples_of(comm), 2));
  CHECK(q.order() == 36);
  const AlgebraicSet whole = AlgebraicSet::whole_space(s3_2);
  CHECK(coordinate_group(whole).order() == oracle::coordinate_order(oracle::table_of(*s3), oracle::tuples_of(whole), 2));
  CHECK(coordinate_group(whole).order() == 972);

  // Every lift evaluates to its element on every point.
  for (CoordinateGroup::Index e = 0; e < q.order(); ++e)
    for (std::size_t j = 0; j < comm.size(); ++j) CHECK(evaluate(q.lift(e), comm.tuple(j), *s3) == q.values(e)[j]);

  const FiniteGroup qt = as_finite_group(q);
  CHECK(qt.order() == q.order());
  // [x1,x2] lies in the radical.
  CHECK(qt.is_abelian());
}

TEST_CASE("coordinate group orders match the oracle") {
  Rng rng(5);
  for (const char* d : kSmallGroups) {
    const GroupPtr g = build_group(d);
    const auto table = oracle::table_of(*g);
    for (std::size_t n : {1u, 2u}) {
      const Space sp(WordContext::free(n), g);
      for (int i = 0; i < 10; ++i) {
        const AlgebraicSet e = random_subset(sp, rng, 4);
        const CoordinateGroup q = coordinate_group(e);
        CHECK(q.order() == oracle::coordinate_order(table, oracle::tuples_of(e), n));
        for (CoordinateGroup::Index x = 0; x < q.order(); ++x) {
          CHECK(q.find(q.values(x)) == x);
          for (std::size_t j = 0; j < e.size(); ++j) CHECK(evaluate(q.lift(x), e.tuple(j), *g) == q.values(x)[j]);
        }
      }
    }
  }
}

TEST_CASE("homomorphism extension") {
  const GroupPtr s3 = build_group("symmetric(3)");
  const auto two = WordContext::free(2);
  const AlgebraicSet comm = solve(system_of(two, {"[x1,x2]"}), s3);
  const CoordinateGroup q = coordinate_group(comm);
  // The coordinate projections evaluated at a commuting pair extend, a
  // non-commuting pair does not.
  CHECK(hom_extends(q, std::vector<Elem>{2, 2}, *s3));
  CHECK(hom_extends(q, std::vector<Elem>{3, 4}, *s3));
  CHECK_FALSE(hom_extends(q, std::vector<Elem>{2, 3}, *s3));

  const CoordinateGroup z2 = coordinate_group(AlgebraicSet::whole_space(Space(WordContext::free(1), build_group("cyclic(2)"))));
  const GroupPtr c3 = build_group("cyclic(3)");
  CHECK_FALSE(hom_extends(z2, std::vector<Elem>{1}, *c3));
  CHECK(hom_extends(z2, std::vector<Elem>{0}, *c3));

  // Identity targets on Q's own table.
  const FiniteGroup qt = as_finite_group(q);
  std::vector<Elem> gens;
  for (std::size_t s = 0; s < q.num_generators(); ++s) gens.push_back(q.generator(s));
  CHECK(hom_extends(q, gens, qt));
}
