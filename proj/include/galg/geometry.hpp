#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galg/group.hpp"
#include "galg/word.hpp"

namespace galg {

using Tuple = std::vector<Elem>;

/// Default bound on |H|^n for exhaustive scans of a solution space.
inline constexpr std::uint64_t kDefaultSpaceBudget = 50'000'000;

/// The space H^n in which solutions live. In coefficient mode `constant_image`
/// embeds the coefficient group G = *context.constants into H (the identity
/// map when H = G); it is empty for coefficient-free contexts.
class Space {
 public:
  Space(WordContext context, GroupPtr group, std::vector<Elem> constant_image = {});

  const WordContext& context() const noexcept { return context_; }
  const GroupPtr& group() const noexcept { return group_; }
  std::size_t arity() const noexcept { return context_.nvars; }
  std::span<const Elem> constant_image() const noexcept { return constant_image_; }
  bool coefficient_mode() const noexcept { return context_.coefficient_mode(); }

  /// |H|^n
  std::uint64_t size() const noexcept { return size_; }
  /// Mixed-radix code, most significant coordinate first, so code order is
  /// lexicographic tuple order.
  std::uint64_t encode(std::span<const Elem> tuple) const;
  Tuple decode(std::uint64_t code) const;
  void decode_into(std::uint64_t code, std::span<Elem> out) const noexcept;

  bool operator==(const Space& other) const noexcept;

 private:
  WordContext context_;
  GroupPtr group_;
  std::vector<Elem> constant_image_;
  std::uint64_t size_ = 0;
};

class EquationSystem {
 public:
  explicit EquationSystem(WordContext context) : context_(std::move(context)) {}

  /// Adds `eq` unless an equation with the same normal form is present.
  void add(Equation eq);
  const WordContext& context() const noexcept { return context_; }
  std::span<const Equation> equations() const noexcept { return equations_; }
  std::size_t size() const noexcept { return equations_.size(); }
  bool empty() const noexcept { return equations_.empty(); }

 private:
  WordContext context_;
  std::vector<Equation> equations_;
};

/// Parses the system file format:
///
///     vars N
///     coefficients          (optional; constants come from `constants`)
///     eq <word> [= <word>]  (repeated)
///
/// Blank lines and lines starting with '#' are skipped. Errors name the line
/// and column.
EquationSystem parse_system(std::string_view text, const GroupPtr& constants);

enum class Provenance { solved, closure, raw };
std::string_view to_string(Provenance p);

/// A finite set of points of H^n, kept sorted and deduplicated.
class AlgebraicSet {
 public:
  static AlgebraicSet from_tuples(Space space, std::span<const Tuple> tuples,
                                  Provenance provenance = Provenance::raw);
  /// `codes` need not be sorted.
  static AlgebraicSet from_codes(Space space, std::vector<std::uint64_t> codes, Provenance provenance);
  static AlgebraicSet whole_space(Space space);

  const Space& space() const noexcept { return space_; }
  const WordContext& context() const noexcept { return space_.context(); }
  const FiniteGroup& group() const noexcept { return *space_.group(); }
  std::size_t arity() const noexcept { return space_.arity(); }
  std::size_t size() const noexcept { return codes_.size(); }
  bool empty() const noexcept { return codes_.empty(); }
  Provenance provenance() const noexcept { return provenance_; }

  std::span<const std::uint64_t> codes() const noexcept { return codes_; }
  Tuple tuple(std::size_t i) const { return space_.decode(codes_[i]); }
  std::vector<Tuple> tuples() const;
  bool contains(std::span<const Elem> tuple) const;
  bool contains_code(std::uint64_t code) const;
  bool is_subset_of(const AlgebraicSet& other) const;

  /// Point-set equality within the same space; provenance is ignored.
  bool operator==(const AlgebraicSet& other) const noexcept { return codes_ == other.codes_; }

 private:
  AlgebraicSet(Space space, std::vector<std::uint64_t> codes, Provenance provenance)
      : space_(std::move(space)), codes_(std::move(codes)), provenance_(provenance) {}

  Space space_;
  std::vector<std::uint64_t> codes_;
  Provenance provenance_;
};

/// V(S): the points of H^n at which every equation holds.
AlgebraicSet solve(const EquationSystem& system, const Space& space, std::size_t jobs = 1,
                   std::uint64_t budget = kDefaultSpaceBudget);
/// Solves over G itself (identity embedding in coefficient mode).
AlgebraicSet solve(const EquationSystem& system, const GroupPtr& group, std::size_t jobs = 1);

/// Membership of `eq` in Rad(E): true iff it holds at every point of E.
bool radical_contains(const AlgebraicSet& set, const Equation& eq);

struct ClosureResult {
  AlgebraicSet set;
  bool is_algebraic = false;
};

/// cl(E) = V(Rad(E)), computed as the points b such that the assignment of the
/// marked generators of the coordinate group to b (and constants to
/// themselves) extends to a homomorphism into H.
///
/// The empty set: in coefficient-free mode every algebraic set contains the
/// identity tuple, so this throws InputError; in coefficient mode cl(empty) is
/// empty.
ClosureResult closure(const AlgebraicSet& set, std::size_t jobs = 1,
                      std::uint64_t budget = kDefaultSpaceBudget);

}  // namespace galg
