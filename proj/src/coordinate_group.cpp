#include "galg/coordinate_group.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "galg/error.hpp"

namespace galg {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

}  // namespace

SubgroupCayley cayley_graph(const FiniteGroup& group, std::span<const Elem> gens) {
  for (Elem s : gens)
    if (s >= group.order()) throw InputError("generator index out of range");
  SubgroupCayley out;
  CayleyGraph& g = out.graph;
  g.num_generators = gens.size();
  std::vector<std::uint32_t> vertex(group.order(), kUnset);
  out.element.push_back(group.identity());
  vertex[group.identity()] = 0;
  g.parent.push_back(0);
  g.via.push_back(0);
  for (std::size_t head = 0; head < out.element.size(); ++head) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Elem y = group.mul(out.element[head], gens[s]);
      if (vertex[y] == kUnset) {
        vertex[y] = static_cast<std::uint32_t>(out.element.size());
        out.element.push_back(y);
        g.parent.push_back(static_cast<std::uint32_t>(head));
        g.via.push_back(static_cast<std::uint32_t>(s));
      }
      g.right.push_back(vertex[y]);
    }
  }
  g.order = out.element.size();
  return out;
}

bool hom_extends(const CayleyGraph& graph, std::span<const Elem> targets, const FiniteGroup& target) {
  if (targets.size() != graph.num_generators)
    throw InputError("hom_extends: " + std::to_string(targets.size()) + " targets for " +
                     std::to_string(graph.num_generators) + " generators");
  for (Elem t : targets)
    if (t >= target.order()) throw InputError("hom_extends: target element out of range");

  std::vector<Elem> image(graph.order, kUnset);
  image[0] = target.identity();
  for (std::size_t v = 0; v < graph.order; ++v) {
    const Elem here = image[v];
    for (std::size_t s = 0; s < graph.num_generators; ++s) {
      const std::uint32_t w = graph.right[v * graph.num_generators + s];
      const Elem value = target.mul(here, targets[s]);
      if (image[w] == kUnset)
        image[w] = value;
      else if (image[w] != value)
        return false;
    }
  }
  return true;
}

std::vector<Elem> point_targets(const Space& space, std::span<const Elem> tuple) {
  std::vector<Elem> targets(tuple.begin(), tuple.end());
  targets.insert(targets.end(), space.constant_image().begin(), space.constant_image().end());
  return targets;
}

CoordinateGroup coordinate_group(const AlgebraicSet& set, std::uint64_t budget) {
  if (set.empty())
    throw InputError(
        "coordinate group of the empty set is undefined: its radical is the whole free object");
  CoordinateGroup q(set);
  const Space& space = set.space();
  const FiniteGroup& h = *space.group();
  const std::size_t width = set.size();
  const std::size_t n = set.arity();
  const std::size_t ngens = n + space.constant_image().size();
  q.width_ = width;

  // generator value vectors
  std::vector<Elem> gen_values(ngens * width);
  Tuple point(n);
  for (std::size_t j = 0; j < width; ++j) {
    space.decode_into(set.codes()[j], point);
    for (std::size_t i = 0; i < n; ++i) gen_values[i * width + j] = point[i];
    for (std::size_t c = 0; c < space.constant_image().size(); ++c)
      gen_values[(n + c) * width + j] = space.constant_image()[c];
  }
  std::vector<Word> gen_letters;
  for (std::size_t i = 0; i < n; ++i) gen_letters.push_back(Word::variable(set.context(), i));
  for (std::size_t c = 0; c < space.constant_image().size(); ++c)
    gen_letters.push_back(Word::constant(set.context(), static_cast<Elem>(c)));

  auto& values = q.values_;
  auto slice_hash = [&values, width](std::uint32_t idx) {
    std::size_t hsh = 1469598103934665603ull;
    const Elem* p = values.data() + static_cast<std::size_t>(idx) * width;
    for (std::size_t j = 0; j < width; ++j) hsh = (hsh ^ p[j]) * 1099511628211ull;
    return hsh;
  };
  auto slice_eq = [&values, width](std::uint32_t a, std::uint32_t b) {
    return std::equal(values.data() + static_cast<std::size_t>(a) * width,
                      values.data() + static_cast<std::size_t>(a + 1) * width,
                      values.data() + static_cast<std::size_t>(b) * width);
  };
  std::unordered_set<std::uint32_t, decltype(slice_hash), decltype(slice_eq)> index(64, slice_hash, slice_eq);

  CayleyGraph& g = q.graph_;
  g.num_generators = ngens;
  values.assign(width, h.identity());
  index.insert(0);
  g.parent.push_back(0);
  g.via.push_back(0);
  q.lifts_.emplace_back(set.context());

  for (std::size_t head = 0; head < g.parent.size(); ++head) {
    for (std::size_t s = 0; s < ngens; ++s) {
      const auto probe = static_cast<std::uint32_t>(g.parent.size());
      if (static_cast<std::uint64_t>(probe + 1) * width > budget)
        throw BudgetExceeded("coordinate group exceeds budget of " + std::to_string(budget) +
                             " stored values (|E| = " + std::to_string(width) + ")");
      values.resize(static_cast<std::size_t>(probe + 1) * width);
      const Elem* src = values.data() + head * width;
      Elem* dst = values.data() + static_cast<std::size_t>(probe) * width;
      const Elem* gen = gen_values.data() + s * width;
      for (std::size_t j = 0; j < width; ++j) dst[j] = h.mul(src[j], gen[j]);
      auto found = index.find(probe);
      if (found != index.end()) {
        values.resize(static_cast<std::size_t>(probe) * width);
        g.right.push_back(*found);
      } else {
        index.insert(probe);
        g.parent.push_back(static_cast<std::uint32_t>(head));
        g.via.push_back(static_cast<std::uint32_t>(s));
        q.lifts_.push_back(q.lifts_[head] * gen_letters[s]);
        g.right.push_back(probe);
      }
    }
  }
  g.order = g.parent.size();

  for (std::size_t s = 0; s < ngens; ++s) q.generators_.push_back(g.right[s]);
  q.sorted_.resize(g.order);
  for (std::uint32_t i = 0; i < g.order; ++i) q.sorted_[i] = i;
  std::sort(q.sorted_.begin(), q.sorted_.end(), [&](std::uint32_t a, std::uint32_t b) {
    auto va = q.values(a), vb = q.values(b);
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
  });
  return q;
}

std::optional<CoordinateGroup::Index> CoordinateGroup::find(std::span<const Elem> v) const {
  if (v.size() != width_) return std::nullopt;
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), v, [&](Index a, std::span<const Elem> key) {
    auto va = values(a);
    return std::lexicographical_compare(va.begin(), va.end(), key.begin(), key.end());
  });
  if (it == sorted_.end()) return std::nullopt;
  auto found = values(*it);
  if (!std::equal(found.begin(), found.end(), v.begin(), v.end())) return std::nullopt;
  return *it;
}

bool hom_extends(const CoordinateGroup& q, std::span<const Elem> targets, const FiniteGroup& target) {
  return hom_extends(q.graph(), targets, target);
}

FiniteGroup as_finite_group(const CoordinateGroup& q) {
  const CayleyGraph& g = q.graph();
  const std::size_t n = g.order;
  if (n > kMaxGroupOrder)
    throw BudgetExceeded("coordinate group of order " + std::to_string(n) + " is too large for a full table");
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    table[a * n] = static_cast<Elem>(a);
    for (std::size_t r = 1; r < n; ++r)
      table[a * n + r] = g.step(table[a * n + g.parent[r]], g.via[r]);
  }
  return FiniteGroup::from_table(n, std::move(table), {}, "coordinate group");
}

}  // namespace galg
