#include "galg/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "galg/error.hpp"

namespace galg {

namespace {

std::string join_witness(const std::vector<std::size_t>& witness) {
  std::string out;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(witness[i]);
  }
  return out;
}

// Elements reachable as left-normed products of `gens`.
std::vector<bool> magma_reach(std::size_t order, const std::vector<Elem>& table,
                              const std::vector<Elem>& gens) {
  std::vector<bool> seen(order, false);
  std::deque<Elem> queue;
  for (Elem g : gens) {
    if (!seen[g]) {
      seen[g] = true;
      queue.push_back(g);
    }
  }
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (Elem g : gens) {
      Elem y = table[x * order + g];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

GroupAxiomError::GroupAxiomError(std::string axiom, std::vector<std::size_t> witness)
    : InputError("group axiom violated: " + axiom +
                 (witness.empty() ? std::string() : " (witness " + join_witness(witness) + ")")),
      axiom_(std::move(axiom)),
      witness_(std::move(witness)) {}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Elem> table,
                                    std::vector<std::string> names, std::string label) {
  if (order == 0) throw InputError("group order must be positive");
  if (order > kMaxGroupOrder)
    throw InputError("group order " + std::to_string(order) + " exceeds limit " +
                     std::to_string(kMaxGroupOrder));
  if (table.size() != order * order)
    throw InputError("table has " + std::to_string(table.size()) + " entries, expected " +
                     std::to_string(order * order));
  if (!names.empty() && names.size() != order)
    throw InputError("names list has " + std::to_string(names.size()) + " entries, expected " +
                     std::to_string(order));

  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      if (table[i * order + j] >= order) throw GroupAxiomError("closure", {i, j});

  // identity
  std::optional<Elem> identity;
  for (std::size_t e = 0; e < order && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < order && ok; ++x)
      ok = table[e * order + x] == x && table[x * order + e] == x;
    if (ok) identity = static_cast<Elem>(e);
  }
  if (!identity) throw GroupAxiomError("identity", {});

  // two-sided inverses, unique
  std::vector<Elem> inverse(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::optional<Elem> found;
    for (std::size_t b = 0; b < order; ++b) {
      if (table[a * order + b] != *identity) continue;
      if (found) throw GroupAxiomError("inverse uniqueness", {a, *found, b});
      found = static_cast<Elem>(b);
    }
    if (!found || table[*found * order + a] != *identity) throw GroupAxiomError("inverse", {a});
    inverse[a] = *found;
  }

  // Light's associativity test over a set of magma generators: the elements g
  // with (x g) y = x (g y) for all x, y form a submagma, so checking a
  // generating set suffices.
  std::vector<Elem> gens;
  for (;;) {
    auto seen = magma_reach(order, table, gens);
    auto missing = std::find(seen.begin(), seen.end(), false);
    if (missing == seen.end()) break;
    gens.push_back(static_cast<Elem>(missing - seen.begin()));
  }
  for (Elem g : gens)
    for (std::size_t x = 0; x < order; ++x) {
      Elem xg = table[x * order + g];
      for (std::size_t y = 0; y < order; ++y)
        if (table[xg * order + y] != table[x * order + table[g * order + y]])
          throw GroupAxiomError("associativity", {x, g, y});
    }

  FiniteGroup group;
  group.order_ = order;
  group.table_ = std::move(table);
  group.identity_ = *identity;
  group.inverse_ = std::move(inverse);
  group.names_ = std::move(names);
  group.label_ = std::move(label);
  return group;
}

Elem FiniteGroup::pow(Elem a, std::int64_t k) const noexcept {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem result = identity_;
  Elem base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Elem FiniteGroup::commutator(Elem a, Elem b) const noexcept {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

std::size_t FiniteGroup::element_order(Elem a) const noexcept {
  std::size_t k = 1;
  for (Elem x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
  return true;
}

std::string FiniteGroup::name(Elem a) const {
  if (names_.empty()) return "g" + std::to_string(a);
  return names_.at(a);
}

bool same_group(const GroupPtr& a, const GroupPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elements, std::vector<Elem> generators)
    : parent_(std::move(parent)),
      elements_(std::move(elements)),
      generators_(std::move(generators)),
      member_(parent_->order(), false) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (Elem a : elements_) member_[a] = true;
}

bool Subgroup::is_subset_of(const Subgroup& other) const noexcept {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Elem a) { return other.contains(a); });
}

Subgroup subgroup_closure(const GroupPtr& group, std::span<const Elem> gens) {
  const FiniteGroup& g = *group;
  for (Elem x : gens)
    if (x >= g.order())
      throw InputError("generator index " + std::to_string(x) + " out of range for group of order " +
                       std::to_string(g.order()));

  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> elements{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (Elem s : gens) {
      Elem y = g.mul(elements[head], s);
      if (!seen[y]) {
        seen[y] = true;
        elements.push_back(y);
      }
    }
  }
  return Subgroup(group, std::move(elements), std::vector<Elem>(gens.begin(), gens.end()));
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const FiniteGroup& g = *a.parent();
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> gens;
  for (Elem x : a.elements())
    for (Elem y : b.elements()) {
      Elem c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = true;
        gens.push_back(c);
      }
    }
  return subgroup_closure(a.parent(), gens);
}

std::vector<Subgroup> lower_central_series(const Subgroup& subgroup) {
  std::vector<Subgroup> series{subgroup};
  for (;;) {
    Subgroup next = commutator_subgroup(series.back(), subgroup);
    if (next == series.back()) break;
    bool trivial = next.order() == 1;
    series.push_back(std::move(next));
    if (trivial) break;
  }
  return series;
}

std::vector<Subgroup> lower_central_series(const GroupPtr& group) {
  std::vector<Elem> all(group->order());
  std::iota(all.begin(), all.end(), Elem{0});
  return lower_central_series(Subgroup(group, all, all));
}

namespace {

std::optional<std::size_t> class_from_series(const std::vector<Subgroup>& series) {
  if (series.back().order() != 1) return std::nullopt;
  return series.size() - 1;
}

}  // namespace

std::optional<std::size_t> nilpotency_class(const GroupPtr& group) {
  return class_from_series(lower_central_series(group));
}

std::optional<std::size_t> nilpotency_class(const Subgroup& subgroup) {
  return class_from_series(lower_central_series(subgroup));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > kMaxGroupOrder)
    throw InputError("direct product order " + std::to_string(n) + " exceeds limit " +
                     std::to_string(kMaxGroupOrder));
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem xa = static_cast<Elem>(x / nb), xb = static_cast<Elem>(x % nb);
    names[x] = "(" + a.name(xa) + "," + b.name(xb) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const Elem ya = static_cast<Elem>(y / nb), yb = static_cast<Elem>(y % nb);
      table[x * n + y] = static_cast<Elem>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  std::string label = "direct_product(" + a.label() + "," + b.label() + ")";
  return FiniteGroup::from_table(n, std::move(table), std::move(names), std::move(label));
}

}  // namespace galg
