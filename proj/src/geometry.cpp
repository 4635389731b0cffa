#include "galg/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "galg/coordinate_group.hpp"
#include "galg/error.hpp"
#include "galg/parallel.hpp"

namespace galg {

Space::Space(WordContext context, GroupPtr group, std::vector<Elem> constant_image)
    : context_(std::move(context)), group_(std::move(group)), constant_image_(std::move(constant_image)) {
  if (!group_) throw InputError("space needs a group");
  const FiniteGroup& h = *group_;
  if (!context_.coefficient_mode()) {
    if (!constant_image_.empty()) throw InputError("constant embedding given for a coefficient-free context");
  } else if (constant_image_.empty()) {
    if (!same_group(context_.constants, group_))
      throw InputError("coefficient group differs from the solution group and no embedding was given");
    constant_image_.resize(h.order());
    std::iota(constant_image_.begin(), constant_image_.end(), Elem{0});
  } else {
    const FiniteGroup& g = *context_.constants;
    if (constant_image_.size() != g.order()) throw InputError("constant embedding has the wrong size");
    std::vector<bool> hit(h.order(), false);
    for (std::size_t a = 0; a < g.order(); ++a) {
      if (constant_image_[a] >= h.order()) throw InputError("constant embedding leaves the group");
      if (hit[constant_image_[a]]) throw InputError("constant embedding is not injective");
      hit[constant_image_[a]] = true;
      for (std::size_t b = 0; b < g.order(); ++b)
        if (h.mul(constant_image_[a], constant_image_[b]) !=
            constant_image_[g.mul(static_cast<Elem>(a), static_cast<Elem>(b))])
          throw InputError("constant embedding is not a homomorphism");
    }
  }
  size_ = 1;
  for (std::size_t i = 0; i < context_.nvars; ++i) {
    if (size_ > (std::uint64_t{1} << 62) / h.order()) throw InputError("solution space too large to index");
    size_ *= h.order();
  }
}

std::uint64_t Space::encode(std::span<const Elem> tuple) const {
  if (tuple.size() != arity())
    throw InputError("tuple length " + std::to_string(tuple.size()) + " does not match arity " +
                     std::to_string(arity()));
  const std::uint64_t base = group_->order();
  std::uint64_t code = 0;
  for (Elem a : tuple) {
    if (a >= base) throw InputError("element index " + std::to_string(a) + " out of range");
    code = code * base + a;
  }
  return code;
}

void Space::decode_into(std::uint64_t code, std::span<Elem> out) const noexcept {
  const std::uint64_t base = group_->order();
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Elem>(code % base);
    code /= base;
  }
}

Tuple Space::decode(std::uint64_t code) const {
  Tuple t(arity());
  decode_into(code, t);
  return t;
}

bool Space::operator==(const Space& other) const noexcept {
  return context_ == other.context_ && same_group(group_, other.group_) &&
         constant_image_ == other.constant_image_;
}

void EquationSystem::add(Equation eq) {
  if (!(eq.left.context() == context_)) throw InputError("equation context differs from the system");
  for (const Equation& e : equations_)
    if (e.normalized == eq.normalized) return;
  equations_.push_back(std::move(eq));
}

EquationSystem parse_system(std::string_view text, const GroupPtr& constants) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> nvars;
  bool coefficients = false;
  std::optional<EquationSystem> system;

  auto fail = [&](const std::string& msg) {
    return InputError("system line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto end = line.find_first_of(" \t\r", start);
    const std::string keyword = line.substr(start, end == std::string::npos ? std::string::npos : end - start);
    const std::size_t rest_at = end == std::string::npos ? line.size() : end;
    std::string rest = line.substr(rest_at);
    while (!rest.empty() && (rest.back() == '\r' || rest.back() == ' ' || rest.back() == '\t')) rest.pop_back();

    if (keyword == "vars") {
      if (nvars) throw fail("duplicate 'vars' line");
      std::istringstream v(rest);
      long long n = 0;
      std::string extra;
      if (!(v >> n) || n <= 0 || (v >> extra)) throw fail("expected 'vars N' with N >= 1");
      nvars = static_cast<std::size_t>(n);
    } else if (keyword == "coefficients") {
      if (system) throw fail("'coefficients' must precede the equations");
      if (!constants) throw fail("'coefficients' needs a group for the constants");
      coefficients = true;
    } else if (keyword == "eq") {
      if (!nvars) throw fail("'vars N' must precede the equations");
      if (!system)
        system.emplace(coefficients ? WordContext::with_constants(*nvars, constants) : WordContext::free(*nvars));
      try {
        system->add(parse_equation(rest, system->context()));
      } catch (const ParseError& e) {
        throw InputError("system line " + std::to_string(lineno) + ", column " +
                         std::to_string(rest_at + e.position() + 1) + ": " + e.what());
      } catch (const InputError& e) {
        throw fail(e.what());
      }
    } else {
      throw fail("unknown keyword '" + keyword + "'");
    }
  }
  if (!nvars) throw InputError("system: missing 'vars N' line");
  if (!system)
    system.emplace(coefficients ? WordContext::with_constants(*nvars, constants) : WordContext::free(*nvars));
  return std::move(*system);
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::solved: return "solved-from-system";
    case Provenance::closure: return "closure-of-set";
    case Provenance::raw: return "raw";
  }
  return "raw";
}

AlgebraicSet AlgebraicSet::from_codes(Space space, std::vector<std::uint64_t> codes, Provenance provenance) {
  for (std::uint64_t c : codes)
    if (c >= space.size()) throw InputError("tuple code out of range");
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return AlgebraicSet(std::move(space), std::move(codes), provenance);
}

AlgebraicSet AlgebraicSet::from_tuples(Space space, std::span<const Tuple> tuples, Provenance provenance) {
  std::vector<std::uint64_t> codes;
  codes.reserve(tuples.size());
  for (const Tuple& t : tuples) codes.push_back(space.encode(t));
  return from_codes(std::move(space), std::move(codes), provenance);
}

AlgebraicSet AlgebraicSet::whole_space(Space space) {
  std::vector<std::uint64_t> codes(space.size());
  std::iota(codes.begin(), codes.end(), std::uint64_t{0});
  return AlgebraicSet(std::move(space), std::move(codes), Provenance::raw);
}

std::vector<Tuple> AlgebraicSet::tuples() const {
  std::vector<Tuple> out;
  out.reserve(codes_.size());
  for (std::uint64_t c : codes_) out.push_back(space_.decode(c));
  return out;
}

bool AlgebraicSet::contains_code(std::uint64_t code) const {
  return std::binary_search(codes_.begin(), codes_.end(), code);
}

bool AlgebraicSet::contains(std::span<const Elem> tuple) const { return contains_code(space_.encode(tuple)); }

bool AlgebraicSet::is_subset_of(const AlgebraicSet& other) const {
  return std::includes(other.codes_.begin(), other.codes_.end(), codes_.begin(), codes_.end());
}

AlgebraicSet solve(const EquationSystem& system, const Space& space, std::size_t jobs, std::uint64_t budget) {
  if (!(system.context() == space.context())) throw InputError("system context does not match the solution space");
  if (space.size() > budget)
    throw BudgetExceeded("solution space has " + std::to_string(space.size()) + " points, budget " +
                         std::to_string(budget));
  const FiniteGroup& h = *space.group();
  auto parts = parallel_chunks(space.size(), jobs, [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint64_t> found;
    Tuple point(space.arity());
    for (std::uint64_t code = begin; code < end; ++code) {
      space.decode_into(code, point);
      bool ok = true;
      for (const Equation& eq : system.equations()) {
        if (evaluate(eq.normalized, point, h, space.constant_image()) != h.identity()) {
          ok = false;
          break;
        }
      }
      if (ok) found.push_back(code);
    }
    return found;
  });
  std::vector<std::uint64_t> codes;
  for (auto& p : parts) codes.insert(codes.end(), p.begin(), p.end());
  return AlgebraicSet::from_codes(space, std::move(codes), Provenance::solved);
}

AlgebraicSet solve(const EquationSystem& system, const GroupPtr& group, std::size_t jobs) {
  return solve(system, Space(system.context(), group), jobs);
}

bool radical_contains(const AlgebraicSet& set, const Equation& eq) {
  if (!(eq.left.context() == set.context())) throw InputError("equation context does not match the set");
  const FiniteGroup& h = set.group();
  Tuple point(set.arity());
  for (std::uint64_t code : set.codes()) {
    set.space().decode_into(code, point);
    if (evaluate(eq.normalized, point, h, set.space().constant_image()) != h.identity()) return false;
  }
  return true;
}

ClosureResult closure(const AlgebraicSet& set, std::size_t jobs, std::uint64_t budget) {
  const Space& space = set.space();
  if (set.empty()) {
    if (!space.coefficient_mode())
      throw InputError(
          "closure of the empty set is undefined without coefficients: every coefficient-free "
          "algebraic set contains the identity tuple");
    return {set, true};
  }
  if (space.size() > budget)
    throw BudgetExceeded("closure scans " + std::to_string(space.size()) + " points, budget " +
                         std::to_string(budget));
  const CoordinateGroup q = coordinate_group(set);
  const FiniteGroup& h = *space.group();
  auto parts = parallel_chunks(space.size(), jobs, [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint64_t> found;
    Tuple point(space.arity());
    std::vector<Elem> targets;
    for (std::uint64_t code = begin; code < end; ++code) {
      space.decode_into(code, point);
      targets = point_targets(space, point);
      if (hom_extends(q, targets, h)) found.push_back(code);
    }
    return found;
  });
  std::vector<std::uint64_t> codes;
  for (auto& p : parts) codes.insert(codes.end(), p.begin(), p.end());
  AlgebraicSet result = AlgebraicSet::from_codes(space, std::move(codes), Provenance::closure);
  const bool algebraic = result == set;
  return {std::move(result), algebraic};
}

}  // namespace galg
