#include <doctest.h>

#include "galg/catalog.hpp"
#include "galg/error.hpp"
#include "galg/gcoeff.hpp"
#include "galg/rng.hpp"
#include "oracles.hpp"

using namespace galg;

namespace {

EquationSystem system_of(const WordContext& ctx, std::initializer_list<const char*> eqs) {
  EquationSystem s(ctx);
  for (const char* e : eqs) s.add(parse_equation(e, ctx));
  return s;
}

const GroupPtr& s3() {
  static const GroupPtr g = build_group("symmetric(3)");
  return g;
}

}  // namespace

TEST_CASE("diagonal embedding is an injective homomorphism") {
  for (std::size_t k : {1u, 2u, 3u}) {
    const GTarget target(s3(), k);
    CHECK(target.group()->order() == (k == 1 ? 6u : k == 2 ? 36u : 216u));
    const auto d = target.diagonal();
    std::set<Elem> image(d.begin(), d.end());
    CHECK(image.size() == 6);
    for (Elem a = 0; a < 6; ++a)
      for (Elem b = 0; b < 6; ++b) CHECK(target.group()->mul(d[a], d[b]) == d[s3()->mul(a, b)]);
  }
  CHECK_THROWS_AS(GTarget(s3(), 0), InputError);
}

TEST_CASE("G-identities") {
  const auto ctx = WordContext::with_constants(1, s3());
  CHECK(g_identity_check(s3(), parse_word("g0 g0^-1", ctx)));
  CHECK(g_identity_check(s3(), parse_word("x1^-1 g0 x1 g0^-1", ctx)));
  CHECK_FALSE(g_identity_check(s3(), parse_word("x1^-1 g2 x1 g2^-1", ctx)));
  CHECK(g_identity_check(s3(), parse_word("x1^6", ctx)));
  CHECK_THROWS_AS(g_identity_check(s3(), parse_word("x1", WordContext::free(1))), InputError);
}

TEST_CASE("verbal subgroups") {
  const auto one = WordContext::free(1), two = WordContext::free(2);
  const GTarget h(s3(), 1);
  CHECK(verbal_subgroup(VerbalData(one, {parse_word("x1 x1^-1", one)}), h).order() == 1);
  CHECK(verbal_subgroup(VerbalData(two, {parse_word("[x1,x2]", two)}), h).order() == 3);
  CHECK(verbal_subgroup(VerbalData(one, {parse_word("x1^2", one)}), h).order() == 3);
  CHECK_THROWS_AS(VerbalData(one, {}), InputError);
}

TEST_CASE("verbal subgroups are invariant under automorphisms of H") {
  // Inner automorphisms of S3 x S3 and the factor swap.
  const GTarget h(s3(), 2);
  const GroupPtr& g = h.group();
  const auto two = WordContext::free(2);
  for (const char* w : {"[x1,x2]", "x1^2", "x1^3", "[x1,x2]^2 x2^2"}) {
    const Subgroup v = verbal_subgroup(VerbalData(two, {parse_word(w, two)}), h);
    for (Elem x = 0; x < g->order(); ++x)
      for (Elem y : v.elements()) CHECK(v.contains(g->mul(g->mul(g->inv(x), y), x)));
    for (Elem y : v.elements()) CHECK(v.contains((y % 6) * 6 + y / 6));
  }
}

TEST_CASE("G-verbal subgroups contain the diagonal and are G-invariant") {
  const GTarget h(s3(), 2);
  const auto ctx = WordContext::with_constants(1, s3());
  const auto d = h.diagonal();
  for (const char* w : {"x1^-1 g2 x1 g2^-1", "x1^2", "x1 g3", "[x1, g2]"}) {
    const Subgroup v = verbal_subgroup(VerbalData(ctx, {parse_word(w, ctx)}), h);
    for (Elem g : d)
      for (Elem y : v.elements()) CHECK(v.contains(h.group()->mul(h.group()->mul(h.group()->inv(g), y), g)));
  }
}

TEST_CASE("G-subgroups of S3 x S3") {
  const GTarget h(s3(), 2);
  const auto subs = g_subgroups(h);
  // The diagonal and the whole group, at least.
  CHECK(subs.size() >= 2);
  const auto table = oracle::table_of(*h.group());
  for (const Subgroup& s : subs) {
    for (Elem g : h.diagonal()) CHECK(s.contains(g));
    const std::vector<Elem> els(s.elements().begin(), s.elements().end());
    CHECK(oracle::generated(table, els).size() == s.order());
  }
  std::set<std::size_t> orders;
  for (const Subgroup& s : subs) orders.insert(s.order());
  CHECK(*orders.begin() == 6);
  CHECK(*orders.rbegin() == 36);
  CHECK(g_subgroups(GTarget(s3(), 1)).size() == 1);
}

TEST_CASE("corollary 2 instances") {
  const auto ctx = WordContext::with_constants(1, s3());
  const Corollary2Report a = corollary2_check(s3(), system_of(ctx, {"g0 x1 g0^-1 x1^-1"}));
  CHECK(a.g_verbal);
  CHECK(a.identities == std::vector<bool>{true});
  CHECK(a.consistent);

  const Corollary2Report b = corollary2_check(s3(), system_of(ctx, {"x1 g2 = g2 x1"}));
  CHECK_FALSE(b.g_verbal);
  CHECK(b.solutions.size() == 2);
  REQUIRE(b.violation);
  CHECK(b.violation->no());
  REQUIRE(b.violation->witness);
  CHECK(witness_replays(*b.violation->witness, b.solutions));
  CHECK(b.consistent);

  const Corollary2Report c = corollary2_check(s3(), system_of(ctx, {"x1^6"}));
  CHECK(c.g_verbal);
  CHECK(c.consistent);

  const Corollary2Report empty = corollary2_check(s3(), system_of(ctx, {"x1^2 = g2"}));
  CHECK(empty.empty_solution_set);
  CHECK_FALSE(empty.note.empty());
}

TEST_CASE("corollary 3 instances") {
  const auto one = WordContext::with_constants(1, s3());
  const Corollary3Report whole = corollary3_check(GTarget(s3(), 1), EquationSystem(one), 4);
  CHECK(whole.decomposition.yes());
  REQUIRE(whole.marked_iso);
  CHECK(*whole.marked_iso);
  CHECK_FALSE(whole.discrepancy);
  CHECK(whole.consistent);

  const Corollary3Report pair = corollary3_check(GTarget(s3(), 2), EquationSystem(one), 3, 5, 100);
  CHECK(pair.decomposition.yes());
  REQUIRE(pair.marked_iso);
  CHECK(*pair.marked_iso);
  CHECK(pair.consistent);

  const Corollary3Report cent = corollary3_check(GTarget(s3(), 1), system_of(one, {"x1 g2 = g2 x1"}), 3);
  CHECK(cent.decomposition.no());
  CHECK(cent.note.find("no variety correspondence") != std::string::npos);
  CHECK(cent.consistent);
}

TEST_CASE("corollary 3 over H = G^2 on seeded systems") {
  const GTarget h(s3(), 2);
  const auto ctx = WordContext::with_constants(1, s3());
  Rng rng(31);
  int decomposable = 0;
  for (int i = 0; i < 15; ++i) {
    std::vector<Letter> raw;
    for (std::uint64_t l = 1 + rng.below(4); l > 0; --l) {
      if (rng.below(3) == 0)
        raw.push_back({LetterKind::constant, static_cast<std::uint32_t>(rng.below(6)), 1});
      else
        raw.push_back({LetterKind::variable, 0, rng.below(2) ? 1 : -1});
    }
    EquationSystem sys(ctx);
    sys.add(Equation(Word::reduce(ctx, raw)));
    const Corollary3Report r = corollary3_check(h, sys, 3, static_cast<std::uint64_t>(i), 50);
    CHECK(r.consistent);
    decomposable += r.decomposition.yes();
  }
  CHECK(decomposable > 0);
}
