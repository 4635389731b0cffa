#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galg/geometry.hpp"
#include "galg/radical.hpp"

namespace galg {

struct EnumerationOptions {
  std::uint64_t seed = 1;
  /// Random subsets whose closures are added.
  std::size_t samples = 200;
  /// Random subsets have 1..max_subset points.
  std::size_t max_subset = 3;
  /// Above this many points in H^n, singletons are sampled (`samples` of
  /// them) instead of enumerated.
  std::uint64_t singleton_limit = 4096;
  std::size_t jobs = 1;
};

struct EnumeratedSets {
  /// Distinct closures in first-seen order: singletons by code, then random
  /// subsets in generation order.
  std::vector<AlgebraicSet> sets;
  std::size_t candidates = 0;
  bool singletons_sampled = false;
};

/// Closures of singletons and of seeded random subsets of H^n (coefficient
/// free). Output is independent of `jobs`.
EnumeratedSets enumerate_algebraic_sets(const Space& space, const EnumerationOptions& options);

struct ScanConfig {
  std::vector<std::string> groups;
  std::size_t nvars = 1;
  EnumerationOptions enumeration;
  bool run_exact = true;
  std::uint64_t exact_budget = kDefaultExactBudget;
  /// Image length for the sampled endomorphism oracle; 0 disables it.
  std::size_t sampled_maxlen = 2;
};

struct GroupScan {
  std::string group;
  std::size_t order = 0;
  std::optional<std::size_t> nilpotency_class;
  std::size_t candidates = 0;
  bool singletons_sampled = false;
  std::size_t algebraic_sets = 0;
  std::size_t fully_characteristic = 0;
  std::size_t exact_yes = 0;
  std::size_t exact_budget = 0;
  std::size_t oracle_agreement = 0;
  std::size_t sampled_contradictions = 0;
  std::size_t sampled_budget = 0;
  std::size_t characteristic = 0;
  std::size_t characteristic_not_fully = 0;
  std::size_t hypothesis_holds = 0;
  std::size_t characteristic_not_fully_in_hypothesis = 0;
  bool truncated = false;
  std::string truncation;
};

/// Runs every oracle on every enumerated algebraic set of every group.
/// Verdict invariants are enforced (ConsistencyError on violation).
std::vector<GroupScan> scan_catalog(const ScanConfig& config);

}  // namespace galg
