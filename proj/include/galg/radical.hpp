#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galg/coordinate_group.hpp"
#include "galg/geometry.hpp"
#include "galg/group.hpp"
#include "galg/word.hpp"

namespace galg {

enum class Outcome { yes, no, budget };
std::string_view to_string(Outcome o);

/// A point of E together with an endomorphism whose induced map sends it
/// outside E. Replayable with `witness_replays`.
struct Witness {
  Tuple point;
  EndoSpec endo;
  Tuple image;
  std::string source;
};

struct Verdict {
  Outcome outcome = Outcome::yes;
  /// Present for decomposition verdicts with outcome yes: inclusion-maximal
  /// members, sorted by element set.
  std::vector<Subgroup> family;
  std::optional<Witness> witness;
  /// Number of elementary checks performed (points, assignments or maps).
  std::uint64_t checks = 0;
  std::string note;

  bool yes() const noexcept { return outcome == Outcome::yes; }
  bool no() const noexcept { return outcome == Outcome::no; }
};

/// point in E, image equal to the endomorphism applied at point, image not in E.
bool witness_replays(const Witness& witness, const AlgebraicSet& set);

/// Throws ConsistencyError unless the verdict's structural invariants hold on
/// `set`: a yes-decomposition covers E exactly with every K^n inside E, and a
/// no-verdict carries a replayable witness.
void check_verdict(const Verdict& verdict, const AlgebraicSet& set);

/// Decomposition criterion: E = union of K^n over n-generator subgroups K iff
/// K(a)^n ⊆ E for every a in E, where K(a) is generated by the entries of a
/// (and the constants, in coefficient mode). The empty set is the union of the
/// empty family.
Verdict decompose(const AlgebraicSet& set);

inline constexpr std::uint64_t kDefaultExactBudget = 1'000'000;

/// Exact full-invariance oracle: Rad(E) is fully invariant iff every
/// assignment of the projections to elements of Q = coordinate_group(E)
/// (constants pinned) extends to an endomorphism of Q. Outcome::budget when
/// |Q|^n exceeds `budget`.
Verdict full_invariance_exact(const AlgebraicSet& set, std::uint64_t budget = kDefaultExactBudget);

inline constexpr std::uint64_t kDefaultSampledBudget = 200'000'000;

/// Checks E against every endomorphism whose images are reduced words of
/// length <= maxlen. A yes is only "yes up to the bound". Outcome::budget when
/// maps times points exceeds `budget`.
Verdict endo_invariance_sampled(const AlgebraicSet& set, std::size_t maxlen,
                                std::uint64_t budget = kDefaultSampledBudget);

/// Nielsen generators of Aut(F_n) and their inverses.
struct AutGenerator {
  enum class Kind { swap, invert, right_multiply, right_multiply_inverse };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;

  EndoSpec as_endo(const WordContext& context) const;
  std::string name() const;
};

/// n = 1: {x1 -> x1^-1}. Otherwise all swaps, inversions, x_i -> x_i x_j and
/// x_i -> x_i x_j^-1 (i != j).
std::vector<AutGenerator> nielsen_generators(std::size_t nvars);

/// Invariance of E under each Nielsen generator's induced map. Invariance
/// under a generating set composes, so this decides whether Rad(E) is
/// characteristic (E algebraic).
Verdict is_characteristic(const AlgebraicSet& set);

struct Theorem2Report {
  std::optional<std::size_t> group_class;
  std::size_t weight = 0;
  /// Every weight-n basic commutator (x1 itself when n = 1) vanishes on E.
  bool commutators_vanish = false;
  /// gamma_n(K(a)) is trivial for every a in E, i.e. gamma_n(F_n) ⊆ Rad(E).
  bool gamma_vanishes = false;
  /// Group class at most n / at most n-1.
  bool class_at_most_n = false;
  bool class_below_n = false;
  /// Nilpotent group and vanishing commutators.
  bool applicable = false;
  Verdict characteristic;
  Verdict decomposition;
  /// (applicable or gamma_vanishes) and characteristic imply decomposable.
  bool consistent = true;
};

Theorem2Report theorem2_report(const AlgebraicSet& set);

/// True iff w is trivial at every n-tuple drawn from a single member of the
/// family. `constant_image` maps constants into the family's parent group.
bool identity_oracle(std::span<const Subgroup> family, const Word& word,
                     std::span<const Elem> constant_image = {});

struct Corollary1Report {
  bool applicable = false;
  Verdict decomposition;
  std::uint64_t words_checked = 0;
  std::optional<Word> discrepancy;
};

/// For fully characteristic E with family X: Rad(E) membership agrees with
/// being an identity of X on every word of length <= maxlen.
Corollary1Report corollary1_check(const AlgebraicSet& set, std::size_t maxlen);
Corollary1Report corollary1_check(const EquationSystem& system, const GroupPtr& group, std::size_t maxlen);

/// Coordinate group of the union of K^n over the family, i.e. the free object
/// modulo the n-variable identities of the family.
CoordinateGroup relatively_free(std::span<const Subgroup> family, const Space& space);
CoordinateGroup relatively_free(std::span<const Subgroup> family, const WordContext& context);

/// Generator s -> generator s extends to a homomorphism a -> b.
bool marked_hom_extends(const CoordinateGroup& a, const CoordinateGroup& b);
/// Same order and marked homomorphisms in both directions.
bool marked_iso(const CoordinateGroup& a, const CoordinateGroup& b);

/// Words in the entries of `point` (and constants) for each element of the
/// subgroup they generate.
std::vector<std::pair<Elem, Word>> subgroup_word_lifts(const Space& space, std::span<const Elem> point);

}  // namespace galg
