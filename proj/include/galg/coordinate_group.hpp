#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "galg/geometry.hpp"
#include "galg/group.hpp"
#include "galg/word.hpp"

namespace galg {

/// Right Cayley graph of a finite group with respect to a generating list,
/// with vertices numbered in breadth-first discovery order from the identity
/// (vertex 0). parent(v) < v for every v > 0.
struct CayleyGraph {
  std::size_t order = 0;
  std::size_t num_generators = 0;
  std::vector<std::uint32_t> right;   // right[v * num_generators + s] = v * gen_s
  std::vector<std::uint32_t> parent;  // parent[0] = 0
  std::vector<std::uint32_t> via;     // generator used to reach v from parent[v]

  std::uint32_t step(std::uint32_t v, std::size_t s) const noexcept { return right[v * num_generators + s]; }
};

/// Cayley graph of the subgroup of `group` generated by `gens`, together with
/// the group element at each vertex.
struct SubgroupCayley {
  CayleyGraph graph;
  std::vector<Elem> element;
};
SubgroupCayley cayley_graph(const FiniteGroup& group, std::span<const Elem> gens);

/// True iff generator s -> targets[s] extends to a homomorphism from the
/// group presented by `graph` into `target`. Equivalent to the subgroup of
/// source x target generated by the pairs (gen_s, targets[s]) having the same
/// order as the source; checked edge by edge, failing at the first conflict.
bool hom_extends(const CayleyGraph& graph, std::span<const Elem> targets, const FiniteGroup& target);

/// Default bound on |Q| * |E| stored values while building a coordinate group.
inline constexpr std::uint64_t kDefaultCoordinateBudget = 50'000'000;

/// The coordinate group of a nonempty point set E ⊆ H^n, realised as the
/// subgroup of H^E generated by the coordinate projections (and, in
/// coefficient mode, the constant functions). Every element carries a word
/// lift that evaluates to it pointwise on E.
///
/// Marked generators are the n projections followed, in coefficient mode, by
/// one constant function per element of G in index order.
class CoordinateGroup {
 public:
  using Index = std::uint32_t;

  const AlgebraicSet& domain() const noexcept { return domain_; }
  const WordContext& context() const noexcept { return domain_.context(); }
  std::size_t order() const noexcept { return graph_.order; }
  std::size_t num_generators() const noexcept { return graph_.num_generators; }
  std::size_t num_variables() const noexcept { return domain_.arity(); }
  Index identity() const noexcept { return 0; }

  /// The function E -> H as a vector aligned with domain().codes().
  std::span<const Elem> values(Index q) const noexcept {
    return {values_.data() + static_cast<std::size_t>(q) * width_, width_};
  }
  const Word& lift(Index q) const { return lifts_.at(q); }
  Index generator(std::size_t s) const { return generators_.at(s); }
  const CayleyGraph& graph() const noexcept { return graph_; }
  std::optional<Index> find(std::span<const Elem> values) const;

 private:
  friend CoordinateGroup coordinate_group(const AlgebraicSet& set, std::uint64_t budget);

  explicit CoordinateGroup(AlgebraicSet domain) : domain_(std::move(domain)) {}

  AlgebraicSet domain_;
  std::size_t width_ = 0;
  std::vector<Elem> values_;
  std::vector<Word> lifts_;
  std::vector<Index> generators_;
  std::vector<Index> sorted_;  // element indices ordered by value vector
  CayleyGraph graph_;
};

/// Throws InputError for the empty set and BudgetExceeded past `budget`.
CoordinateGroup coordinate_group(const AlgebraicSet& set, std::uint64_t budget = kDefaultCoordinateBudget);

/// Targets for Q -> H: one per marked generator.
bool hom_extends(const CoordinateGroup& q, std::span<const Elem> targets, const FiniteGroup& target);

/// Full multiplication table of Q; element indices agree with Q's.
FiniteGroup as_finite_group(const CoordinateGroup& q);

/// Marked generator images for the point `tuple` of H^n: the tuple followed by
/// the constant images (coefficient mode).
std::vector<Elem> point_targets(const Space& space, std::span<const Elem> tuple);

}  // namespace galg
