#include "galg/scan.hpp"

#include <set>

#include "galg/catalog.hpp"
#include "galg/error.hpp"
#include "galg/parallel.hpp"
#include "galg/rng.hpp"

namespace galg {

EnumeratedSets enumerate_algebraic_sets(const Space& space, const EnumerationOptions& options) {
  if (space.coefficient_mode()) throw InputError("set enumeration is coefficient-free");
  EnumeratedSets out;
  Rng rng(stable_hash(space.group()->label() + "/" + std::to_string(space.arity()), options.seed));

  std::vector<std::vector<std::uint64_t>> candidates;
  if (space.size() <= options.singleton_limit) {
    for (std::uint64_t c = 0; c < space.size(); ++c) candidates.push_back({c});
  } else {
    out.singletons_sampled = true;
    for (std::size_t i = 0; i < options.samples; ++i) candidates.push_back({rng.below(space.size())});
  }
  for (std::size_t i = 0; i < options.samples; ++i) {
    const std::size_t k = 1 + rng.below(std::max<std::size_t>(1, options.max_subset));
    std::vector<std::uint64_t> subset;
    for (std::size_t j = 0; j < k; ++j) subset.push_back(rng.below(space.size()));
    candidates.push_back(std::move(subset));
  }
  out.candidates = candidates.size();

  auto closures = parallel_map(candidates.size(), options.jobs, [&](std::size_t i) {
    return closure(AlgebraicSet::from_codes(space, candidates[i], Provenance::raw)).set;
  });
  std::set<std::vector<std::uint64_t>> seen;
  for (auto& set : closures) {
    std::vector<std::uint64_t> key(set.codes().begin(), set.codes().end());
    if (seen.insert(std::move(key)).second) out.sets.push_back(std::move(set));
  }
  return out;
}

namespace {

struct InstanceResult {
  bool fully = false;
  Outcome exact = Outcome::budget;
  bool ran_exact = false;
  bool sampled_contradiction = false;
  bool sampled_budget = false;
  bool characteristic = false;
  bool hypothesis = false;
};

InstanceResult analyze_instance(const AlgebraicSet& set, const ScanConfig& config) {
  InstanceResult r;
  const Theorem2Report t2 = theorem2_report(set);
  check_verdict(t2.decomposition, set);
  check_verdict(t2.characteristic, set);
  if (!t2.consistent) throw ConsistencyError("theorem 2 report inconsistent");
  r.fully = t2.decomposition.yes();
  r.characteristic = t2.characteristic.yes();
  r.hypothesis = t2.gamma_vanishes;
  if (config.run_exact) {
    r.ran_exact = true;
    const Verdict exact = full_invariance_exact(set, config.exact_budget);
    check_verdict(exact, set);
    r.exact = exact.outcome;
  }
  if (config.sampled_maxlen > 0) {
    const Verdict sampled = endo_invariance_sampled(set, config.sampled_maxlen);
    check_verdict(sampled, set);
    r.sampled_contradiction = r.fully && sampled.no();
    r.sampled_budget = sampled.outcome == Outcome::budget;
  }
  return r;
}

}  // namespace

std::vector<GroupScan> scan_catalog(const ScanConfig& config) {
  std::vector<GroupScan> out;
  for (const std::string& descriptor : config.groups) {
    const GroupPtr group = build_group(descriptor);
    GroupScan row;
    row.group = group->label();
    row.order = group->order();
    row.nilpotency_class = nilpotency_class(group);
    const Space space(WordContext::free(config.nvars), group);

    EnumeratedSets sets;
    try {
      sets = enumerate_algebraic_sets(space, config.enumeration);
    } catch (const BudgetExceeded& e) {
      row.truncated = true;
      row.truncation = e.what();
      out.push_back(std::move(row));
      continue;
    }
    row.candidates = sets.candidates;
    row.singletons_sampled = sets.singletons_sampled;
    row.algebraic_sets = sets.sets.size();

    auto results = parallel_map(sets.sets.size(), config.enumeration.jobs,
                                [&](std::size_t i) { return analyze_instance(sets.sets[i], config); });
    for (const InstanceResult& r : results) {
      row.fully_characteristic += r.fully;
      row.characteristic += r.characteristic;
      row.characteristic_not_fully += r.characteristic && !r.fully;
      row.hypothesis_holds += r.hypothesis;
      row.characteristic_not_fully_in_hypothesis += r.hypothesis && r.characteristic && !r.fully;
      row.sampled_contradictions += r.sampled_contradiction;
      row.sampled_budget += r.sampled_budget;
      if (r.ran_exact) {
        if (r.exact == Outcome::budget) {
          ++row.exact_budget;
        } else {
          row.exact_yes += r.exact == Outcome::yes;
          row.oracle_agreement += (r.exact == Outcome::yes) == r.fully;
        }
      }
    }
    if (row.exact_budget) {
      row.truncated = true;
      row.truncation = std::to_string(row.exact_budget) + " instance(s) over the exact-oracle budget";
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace galg
