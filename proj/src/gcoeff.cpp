#include "galg/gcoeff.hpp"

#include <algorithm>
#include <set>

#include "galg/error.hpp"
#include "galg/rng.hpp"

namespace galg {

GTarget::GTarget(GroupPtr base, std::size_t power) : base_(std::move(base)), power_(power) {
  if (!base_) throw InputError("G-group target needs a base group");
  if (power_ == 0) throw InputError("target power must be at least 1");
  group_ = base_;
  diagonal_.resize(base_->order());
  for (Elem g = 0; g < base_->order(); ++g) diagonal_[g] = g;
  for (std::size_t k = 2; k <= power_; ++k) {
    group_ = std::make_shared<const FiniteGroup>(direct_product(*group_, *base_));
    for (Elem g = 0; g < base_->order(); ++g)
      diagonal_[g] = static_cast<Elem>(diagonal_[g] * base_->order() + g);
  }
}

Space GTarget::space(const WordContext& context) const {
  if (!context.coefficient_mode() || !same_group(context.constants, base_))
    throw InputError("G-group space needs a coefficient context over the base group");
  return Space(context, group_, diagonal_);
}

VerbalData::VerbalData(WordContext ctx, std::vector<Word> ws) : context(std::move(ctx)), words(std::move(ws)) {
  if (words.empty()) throw InputError("verbal data needs at least one word");
  for (const Word& w : words)
    if (!(w.context() == context)) throw InputError("verbal words must share one context");
}

bool g_identity_check(const GroupPtr& group, const Word& word) {
  if (!word.context().coefficient_mode()) throw InputError("g_identity_check needs a coefficient-mode word");
  if (!same_group(word.context().constants, group)) throw InputError("word constants are not from this group");
  const Space space(word.context(), group);
  return radical_contains(AlgebraicSet::whole_space(space), Equation(word));
}

Subgroup verbal_subgroup(const VerbalData& data, const GTarget& target, std::uint64_t budget) {
  const WordContext& ctx = data.context;
  if (ctx.coefficient_mode() && !same_group(ctx.constants, target.base()))
    throw InputError("verbal words use constants from a different group");
  const Space space = ctx.coefficient_mode() ? target.space(ctx) : Space(ctx, target.group());
  if (space.size() > budget)
    throw BudgetExceeded("verbal subgroup scans " + std::to_string(space.size()) + " tuples, budget " +
                         std::to_string(budget));
  const FiniteGroup& h = *target.group();
  std::vector<bool> seen(h.order(), false);
  std::vector<Elem> values;
  Tuple point(space.arity());
  for (std::uint64_t code = 0; code < space.size(); ++code) {
    space.decode_into(code, point);
    for (const Word& w : data.words) {
      const Elem v = evaluate(w, point, h, space.constant_image());
      if (!seen[v]) {
        seen[v] = true;
        values.push_back(v);
      }
    }
  }
  return subgroup_closure(target.group(), values);
}

std::vector<Subgroup> g_subgroups(const GTarget& target) {
  const GroupPtr& h = target.group();
  std::set<Subgroup> found;
  std::vector<Subgroup> frontier{subgroup_closure(h, target.diagonal())};
  found.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& s : frontier) {
      for (Elem x = 0; x < h->order(); ++x) {
        if (s.contains(x)) continue;
        std::vector<Elem> gens(s.generators().begin(), s.generators().end());
        gens.push_back(x);
        Subgroup bigger = subgroup_closure(h, gens);
        if (found.insert(bigger).second) next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

Corollary2Report corollary2_check(const GroupPtr& group, const EquationSystem& system, std::uint64_t exact_budget) {
  if (!system.context().coefficient_mode()) throw InputError("corollary2_check needs a coefficient system");
  Corollary2Report report{.solutions = solve(system, group)};
  const AlgebraicSet& v = report.solutions;
  if (v.empty()) {
    report.empty_solution_set = true;
    report.note = "empty solution set: its radical is all of G[X], outside the G-subgroup decomposition";
    return report;
  }
  report.g_verbal = v.size() == v.space().size();
  const Verdict decomposition = decompose(v);
  report.decomposition_agrees = decomposition.yes() == report.g_verbal;
  report.consistent = report.decomposition_agrees;
  if (report.g_verbal) {
    for (const Equation& eq : system.equations()) {
      const bool ok = g_identity_check(group, eq.normalized);
      report.identities.push_back(ok);
      report.consistent = report.consistent && ok;
    }
    return report;
  }
  report.violation = full_invariance_exact(v, exact_budget);
  if (report.violation->outcome == Outcome::budget) {
    report.note = "exact oracle over budget (" + report.violation->note + "); witness from the decomposition check";
    report.violation = decomposition;
  }
  report.consistent = report.consistent && report.violation->no() && report.violation->witness &&
                      witness_replays(*report.violation->witness, v);
  return report;
}

CoordinateGroup::Index element_of(const CoordinateGroup& q, const Word& word) {
  const AlgebraicSet& domain = q.domain();
  std::vector<Elem> values(domain.size());
  Tuple point(domain.arity());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    domain.space().decode_into(domain.codes()[j], point);
    values[j] = evaluate(word, point, domain.group(), domain.space().constant_image());
  }
  auto found = q.find(values);
  if (!found) throw ConsistencyError("word value lies outside the coordinate group");
  return *found;
}

namespace {

Word random_coefficient_word(const WordContext& ctx, Rng& rng, std::size_t maxlen) {
  const std::size_t len = 1 + rng.below(std::max<std::size_t>(1, maxlen));
  const std::size_t g = ctx.constants->order();
  std::vector<Letter> raw;
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint64_t pick = rng.below(2 * ctx.nvars + g);
    if (pick < 2 * ctx.nvars)
      raw.push_back({LetterKind::variable, static_cast<std::uint32_t>(pick / 2), pick % 2 ? -1 : 1});
    else
      raw.push_back({LetterKind::constant, static_cast<std::uint32_t>(pick - 2 * ctx.nvars), 1});
  }
  return Word::reduce(ctx, raw);
}

}  // namespace

Corollary3Report corollary3_check(const GTarget& target, const EquationSystem& system, std::size_t maxlen,
                                  std::uint64_t seed, std::size_t random_words, std::uint64_t exact_budget) {
  const Space space = target.space(system.context());
  Corollary3Report report{.solutions = solve(system, space)};
  const AlgebraicSet& v = report.solutions;
  report.decomposition = decompose(v);
  if (v.empty()) {
    report.note = "empty solution set: no coordinate group";
    return report;
  }
  report.exact = full_invariance_exact(v, exact_budget);
  if (!report.decomposition.yes()) {
    report.note = "not decomposable: no variety correspondence asserted";
    report.consistent = report.exact->outcome != Outcome::yes;
    return report;
  }
  report.consistent = report.exact->outcome != Outcome::no;

  const CoordinateGroup gamma = coordinate_group(v);
  report.coordinate_order = gamma.order();
  auto check_word = [&](const Word& w) {
    ++report.words_checked;
    const bool law = identity_oracle(report.decomposition.family, w, space.constant_image());
    const bool trivial = element_of(gamma, w) == gamma.identity();
    if (law != trivial && !report.discrepancy) report.discrepancy = w;
    return true;
  };
  for_each_word(system.context(), maxlen, check_word);
  Rng rng(seed);
  for (std::size_t i = 0; i < random_words; ++i) check_word(random_coefficient_word(system.context(), rng, maxlen));

  const CoordinateGroup free_object = relatively_free(report.decomposition.family, space);
  report.marked_iso = marked_iso(gamma, free_object);
  report.consistent = report.consistent && !report.discrepancy && *report.marked_iso;
  return report;
}

}  // namespace galg
