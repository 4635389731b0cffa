#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace galg {

/// Dense element index into a finite group's Cayley table.
using Elem = std::uint32_t;

/// Largest order accepted for an explicit Cayley table.
inline constexpr std::size_t kMaxGroupOrder = 4096;

/// A finite group stored as its full multiplication table. Immutable; all
/// axioms are verified by the factory.
class FiniteGroup {
 public:
  /// Builds a group from a row-major `order x order` table (entry i*order+j
  /// is the product i*j). Throws GroupAxiomError naming the first violated
  /// axiom with witness indices.
  static FiniteGroup from_table(std::size_t order, std::vector<Elem> table,
                                std::vector<std::string> names = {},
                                std::string label = {});

  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return identity_; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[a * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  Elem pow(Elem a, std::int64_t k) const noexcept;
  /// [a,b] = a^-1 b^-1 a b.
  Elem commutator(Elem a, Elem b) const noexcept;
  std::size_t element_order(Elem a) const noexcept;
  bool is_abelian() const noexcept;

  std::string name(Elem a) const;
  bool has_names() const noexcept { return !names_.empty(); }
  const std::string& label() const noexcept { return label_; }
  std::span<const Elem> table() const noexcept { return table_; }

  /// Same order and same table; labels and names are ignored.
  bool operator==(const FiniteGroup& other) const noexcept {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Elem> table_;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
  std::vector<std::string> names_;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// True if both pointers denote the same group (by identity or by table).
bool same_group(const GroupPtr& a, const GroupPtr& b) noexcept;

/// Subgroup of a finite group, identified by its sorted element set.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<Elem> elements, std::vector<Elem> generators);

  const GroupPtr& parent() const noexcept { return parent_; }
  std::span<const Elem> elements() const noexcept { return elements_; }
  std::span<const Elem> generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(Elem a) const noexcept { return a < member_.size() && member_[a]; }
  bool is_subset_of(const Subgroup& other) const noexcept;

  /// Equality is element-set equality.
  bool operator==(const Subgroup& other) const noexcept { return elements_ == other.elements_; }
  bool operator<(const Subgroup& other) const noexcept { return elements_ < other.elements_; }

 private:
  GroupPtr parent_;
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
  std::vector<bool> member_;
};

/// Smallest subgroup containing `gens`. Throws InputError on an out-of-range
/// index.
Subgroup subgroup_closure(const GroupPtr& group, std::span<const Elem> gens);

/// Subgroup generated by all commutators [a,b] with a in `a`, b in `b`.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);

/// gamma_1 = G, gamma_{k+1} = [gamma_k, G], stopping at the first repeat.
std::vector<Subgroup> lower_central_series(const GroupPtr& group);
std::vector<Subgroup> lower_central_series(const Subgroup& subgroup);

/// Nilpotency class c (gamma_{c+1} trivial, gamma_c not); nullopt when the
/// series stabilises above the trivial subgroup. The trivial group has class 0.
std::optional<std::size_t> nilpotency_class(const GroupPtr& group);
std::optional<std::size_t> nilpotency_class(const Subgroup& subgroup);

/// Direct product table; element (a,b) has index a*|B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace galg
