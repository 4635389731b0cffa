#include "galg/radical.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "galg/error.hpp"

namespace galg {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

std::vector<Elem> generators_of(const Space& space, std::span<const Elem> point) {
  std::vector<Elem> gens(point.begin(), point.end());
  gens.insert(gens.end(), space.constant_image().begin(), space.constant_image().end());
  return gens;
}

// Advances an odometer over base^digits.size(); false after the last value.
bool next_digits(std::vector<std::size_t>& digits, std::size_t base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

Tuple apply_endo(const EndoSpec& endo, std::span<const Elem> point, const Space& space) {
  Tuple image(endo.images.size());
  for (std::size_t i = 0; i < endo.images.size(); ++i)
    image[i] = evaluate(endo.images[i], point, *space.group(), space.constant_image());
  return image;
}

std::vector<Subgroup> maximal_members(std::vector<Subgroup> family) {
  std::vector<Subgroup> kept;
  for (std::size_t i = 0; i < family.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < family.size() && !dominated; ++j)
      dominated = j != i && family[j].order() > family[i].order() && family[i].is_subset_of(family[j]);
    if (!dominated) kept.push_back(family[i]);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::yes: return "yes";
    case Outcome::no: return "no";
    case Outcome::budget: return "budget";
  }
  return "budget";
}

bool witness_replays(const Witness& witness, const AlgebraicSet& set) {
  if (!set.contains(witness.point)) return false;
  if (!(witness.endo.context == set.context())) return false;
  const Tuple image = apply_endo(witness.endo, witness.point, set.space());
  return image == witness.image && !set.contains(image);
}

void check_verdict(const Verdict& verdict, const AlgebraicSet& set) {
  if (verdict.outcome == Outcome::no) {
    if (!verdict.witness) throw ConsistencyError("negative verdict without a witness");
    if (!witness_replays(*verdict.witness, set)) throw ConsistencyError("witness does not replay");
    return;
  }
  if (verdict.outcome != Outcome::yes || verdict.family.empty()) return;
  const Space& space = set.space();
  std::vector<std::uint64_t> covered;
  Tuple probe(set.arity());
  for (const Subgroup& k : verdict.family) {
    std::vector<std::size_t> digits(set.arity(), 0);
    do {
      for (std::size_t i = 0; i < digits.size(); ++i) probe[i] = k.elements()[digits[i]];
      const std::uint64_t code = space.encode(probe);
      if (!set.contains_code(code)) throw ConsistencyError("family member K^n leaves E");
      covered.push_back(code);
    } while (next_digits(digits, k.order()));
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  if (!std::equal(covered.begin(), covered.end(), set.codes().begin(), set.codes().end()))
    throw ConsistencyError("family does not cover E");
}

std::vector<std::pair<Elem, Word>> subgroup_word_lifts(const Space& space, std::span<const Elem> point) {
  const std::vector<Elem> gens = generators_of(space, point);
  const SubgroupCayley cayley = cayley_graph(*space.group(), gens);
  std::vector<Word> letters;
  for (std::size_t i = 0; i < point.size(); ++i) letters.push_back(Word::variable(space.context(), i));
  for (std::size_t c = 0; c < space.constant_image().size(); ++c)
    letters.push_back(Word::constant(space.context(), static_cast<Elem>(c)));

  std::vector<std::pair<Elem, Word>> out;
  out.reserve(cayley.graph.order);
  out.emplace_back(cayley.element[0], Word(space.context()));
  for (std::size_t v = 1; v < cayley.graph.order; ++v)
    out.emplace_back(cayley.element[v], out[cayley.graph.parent[v]].second * letters[cayley.graph.via[v]]);
  return out;
}

Verdict decompose(const AlgebraicSet& set) {
  Verdict verdict;
  if (set.empty()) {
    verdict.note = "empty set: union of the empty family";
    return verdict;
  }
  const Space& space = set.space();
  const std::size_t n = set.arity();
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> family;
  Tuple point(n), probe(n);

  for (std::uint64_t code : set.codes()) {
    space.decode_into(code, point);
    ++verdict.checks;
    Subgroup k = subgroup_closure(space.group(), generators_of(space, point));
    std::vector<Elem> key(k.elements().begin(), k.elements().end());
    if (seen.contains(key)) continue;

    std::vector<std::size_t> digits(n, 0);
    do {
      for (std::size_t i = 0; i < n; ++i) probe[i] = k.elements()[digits[i]];
      if (!set.contains(probe)) {
        std::map<Elem, Word> lifts;
        for (auto& [e, w] : subgroup_word_lifts(space, point)) lifts.emplace(e, std::move(w));
        std::vector<Word> images;
        for (Elem e : probe) images.push_back(lifts.at(e));
        verdict.outcome = Outcome::no;
        verdict.witness = Witness{point, EndoSpec(set.context(), std::move(images)), probe, "decomposition"};
        return verdict;
      }
    } while (next_digits(digits, k.order()));

    seen.insert(std::move(key));
    family.push_back(std::move(k));
  }
  verdict.family = maximal_members(std::move(family));
  return verdict;
}

Verdict full_invariance_exact(const AlgebraicSet& set, std::uint64_t budget) {
  Verdict verdict;
  if (set.empty()) {
    verdict.note = "empty set: radical is the whole free object";
    return verdict;
  }
  const std::size_t n = set.arity();
  const CoordinateGroup q = coordinate_group(set);
  const std::uint64_t work = saturating_pow(q.order(), n);
  if (work > budget || q.order() > kMaxGroupOrder) {
    verdict.outcome = Outcome::budget;
    verdict.note = "|Q|^n = " + (work == std::numeric_limits<std::uint64_t>::max() ? std::string("overflow")
                                                                                     : std::to_string(work)) +
                   " exceeds budget " + std::to_string(budget) + " (|Q| = " + std::to_string(q.order()) + ")";
    return verdict;
  }
  const FiniteGroup qg = as_finite_group(q);
  std::vector<Elem> targets(q.num_generators());
  for (std::size_t s = n; s < q.num_generators(); ++s) targets[s] = q.generator(s);

  std::vector<std::size_t> digits(n, 0);
  do {
    for (std::size_t i = 0; i < n; ++i) targets[i] = static_cast<Elem>(digits[i]);
    ++verdict.checks;
    if (hom_extends(q, targets, qg)) continue;

    std::vector<Word> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(q.lift(targets[i]));
    Tuple image(n);
    for (std::size_t j = 0; j < set.size(); ++j) {
      for (std::size_t i = 0; i < n; ++i) image[i] = q.values(targets[i])[j];
      if (!set.contains(image)) {
        verdict.outcome = Outcome::no;
        verdict.witness = Witness{set.tuple(j), EndoSpec(set.context(), std::move(images)), image, "exact"};
        return verdict;
      }
    }
    throw InputError("exact invariance oracle needs an algebraic set: assignment fails to extend but every image stays in E");
  } while (next_digits(digits, q.order()));
  verdict.note = "|Q| = " + std::to_string(q.order());
  return verdict;
}

Verdict endo_invariance_sampled(const AlgebraicSet& set, std::size_t maxlen, std::uint64_t budget) {
  Verdict verdict;
  verdict.note = "yes up to image length " + std::to_string(maxlen);
  if (set.empty()) return verdict;
  const Space& space = set.space();
  if (set.size() == space.size()) {
    verdict.note = "whole space";
    return verdict;
  }
  const std::size_t n = set.arity();
  const std::size_t m = set.size();
  const std::uint64_t h = space.group()->order();
  const std::vector<Tuple> points = set.tuples();

  // Words with equal values on E induce the same map, keep the first of each.
  std::vector<Word> words;
  std::vector<Elem> value;  // value[w * m + j] = words[w] at point j
  std::set<std::vector<Elem>> columns;
  std::vector<Elem> column(m);
  for_each_word(set.context(), maxlen, [&](const Word& w) {
    for (std::size_t j = 0; j < m; ++j) column[j] = evaluate(w, points[j], *space.group(), space.constant_image());
    if (columns.insert(column).second) {
      words.push_back(w);
      value.insert(value.end(), column.begin(), column.end());
    }
    return true;
  });

  std::uint64_t work = m;
  for (std::size_t i = 0; i < n && work <= budget; ++i) work *= words.size();
  if (work > budget) {
    verdict.outcome = Outcome::budget;
    verdict.note = "sampled oracle needs " + std::to_string(words.size()) + "^" + std::to_string(n) +
                   " maps on " + std::to_string(m) + " points, budget " + std::to_string(budget);
    return verdict;
  }

  std::vector<bool> member(space.size(), false);
  for (std::uint64_t code : set.codes()) member[code] = true;
  std::vector<std::size_t> digits(n, 0);
  do {
    ++verdict.checks;
    for (std::size_t j = 0; j < m; ++j) {
      std::uint64_t code = 0;
      for (std::size_t i = 0; i < n; ++i) code = code * h + value[digits[i] * m + j];
      if (!member[code]) {
        std::vector<Word> images;
        for (std::size_t i = 0; i < n; ++i) images.push_back(words[digits[i]]);
        verdict.outcome = Outcome::no;
        verdict.note.clear();
        verdict.witness = Witness{points[j], EndoSpec(set.context(), std::move(images)), space.decode(code), "sampled"};
        return verdict;
      }
    }
  } while (next_digits(digits, words.size()));
  return verdict;
}

EndoSpec AutGenerator::as_endo(const WordContext& context) const {
  EndoSpec endo = EndoSpec::identity(context);
  switch (kind) {
    case Kind::swap:
      endo.images[i] = Word::variable(context, j);
      endo.images[j] = Word::variable(context, i);
      break;
    case Kind::invert:
      endo.images[i] = Word::variable(context, i, -1);
      break;
    case Kind::right_multiply:
      endo.images[i] = Word::variable(context, i) * Word::variable(context, j);
      break;
    case Kind::right_multiply_inverse:
      endo.images[i] = Word::variable(context, i) * Word::variable(context, j, -1);
      break;
  }
  return endo;
}

std::string AutGenerator::name() const {
  const std::string a = std::to_string(i + 1), b = std::to_string(j + 1);
  switch (kind) {
    case Kind::swap: return "swap(" + a + "," + b + ")";
    case Kind::invert: return "invert(" + a + ")";
    case Kind::right_multiply: return "right_multiply(" + a + "," + b + ")";
    case Kind::right_multiply_inverse: return "right_multiply_inverse(" + a + "," + b + ")";
  }
  return {};
}

std::vector<AutGenerator> nielsen_generators(std::size_t nvars) {
  using Kind = AutGenerator::Kind;
  std::vector<AutGenerator> gens;
  for (std::size_t i = 0; i < nvars; ++i)
    for (std::size_t j = i + 1; j < nvars; ++j) gens.push_back({Kind::swap, i, j});
  for (std::size_t i = 0; i < nvars; ++i) gens.push_back({Kind::invert, i, i});
  for (std::size_t i = 0; i < nvars; ++i)
    for (std::size_t j = 0; j < nvars; ++j)
      if (i != j) {
        gens.push_back({Kind::right_multiply, i, j});
        gens.push_back({Kind::right_multiply_inverse, i, j});
      }
  return gens;
}

Verdict is_characteristic(const AlgebraicSet& set) {
  Verdict verdict;
  verdict.note = "invariance under a generating set of Aut(F_n) composes to the whole group";
  const std::vector<Tuple> points = set.tuples();
  for (const AutGenerator& gen : nielsen_generators(set.arity())) {
    const EndoSpec endo = gen.as_endo(set.context());
    for (const Tuple& p : points) {
      ++verdict.checks;
      Tuple image = apply_endo(endo, p, set.space());
      if (!set.contains(image)) {
        verdict.outcome = Outcome::no;
        verdict.witness = Witness{p, endo, std::move(image), "nielsen:" + gen.name()};
        return verdict;
      }
    }
  }
  return verdict;
}

Theorem2Report theorem2_report(const AlgebraicSet& set) {
  if (set.context().coefficient_mode()) throw InputError("theorem2_report needs a coefficient-free set");
  Theorem2Report report;
  const std::size_t n = set.arity();
  report.weight = n;
  report.group_class = nilpotency_class(set.space().group());
  report.class_at_most_n = report.group_class && *report.group_class <= n;
  report.class_below_n = report.group_class && *report.group_class + 1 <= n;

  std::vector<Word> tests =
      n == 1 ? std::vector<Word>{Word::variable(set.context(), 0)} : basic_commutators(n, set.context());
  report.commutators_vanish = std::all_of(tests.begin(), tests.end(),
                                          [&](const Word& w) { return radical_contains(set, Equation(w)); });

  report.gamma_vanishes = true;
  std::set<std::vector<Elem>> checked;
  Tuple point(n);
  for (std::uint64_t code : set.codes()) {
    set.space().decode_into(code, point);
    Subgroup k = subgroup_closure(set.space().group(), point);
    std::vector<Elem> key(k.elements().begin(), k.elements().end());
    if (!checked.insert(key).second) continue;
    const auto series = lower_central_series(k);
    const Subgroup& gamma_n = series.size() >= n ? series[n - 1] : series.back();
    if (gamma_n.order() != 1) {
      report.gamma_vanishes = false;
      break;
    }
  }

  report.applicable = report.group_class.has_value() && report.commutators_vanish;
  report.characteristic = is_characteristic(set);
  report.decomposition = decompose(set);
  const bool hypothesis = report.applicable || report.gamma_vanishes;
  report.consistent = !(hypothesis && report.characteristic.yes() && !report.decomposition.yes());
  // weight <= 3 basic commutators span gamma_n modulo gamma_{n+1}
  if (report.group_class && n <= 3 && report.commutators_vanish != report.gamma_vanishes)
    report.consistent = false;
  return report;
}

bool identity_oracle(std::span<const Subgroup> family, const Word& word, std::span<const Elem> constant_image) {
  const std::size_t n = word.context().nvars;
  Tuple probe(n);
  for (const Subgroup& k : family) {
    const FiniteGroup& g = *k.parent();
    std::vector<std::size_t> digits(n, 0);
    do {
      for (std::size_t i = 0; i < n; ++i) probe[i] = k.elements()[digits[i]];
      if (evaluate(word, probe, g, constant_image) != g.identity()) return false;
    } while (next_digits(digits, k.order()));
  }
  return true;
}

Corollary1Report corollary1_check(const AlgebraicSet& set, std::size_t maxlen) {
  Corollary1Report report;
  report.decomposition = decompose(set);
  if (!report.decomposition.yes()) return report;
  report.applicable = true;
  for_each_word(set.context(), maxlen, [&](const Word& w) {
    ++report.words_checked;
    const bool in_radical = radical_contains(set, Equation(w));
    const bool identity = identity_oracle(report.decomposition.family, w, set.space().constant_image());
    if (in_radical != identity) {
      report.discrepancy = w;
      return false;
    }
    return true;
  });
  return report;
}

Corollary1Report corollary1_check(const EquationSystem& system, const GroupPtr& group, std::size_t maxlen) {
  return corollary1_check(solve(system, group), maxlen);
}

CoordinateGroup relatively_free(std::span<const Subgroup> family, const Space& space) {
  if (family.empty()) throw InputError("relatively_free needs a nonempty family");
  std::vector<std::uint64_t> codes;
  Tuple probe(space.arity());
  for (const Subgroup& k : family) {
    if (!same_group(k.parent(), space.group())) throw InputError("family member lives in a different group");
    std::vector<std::size_t> digits(space.arity(), 0);
    do {
      for (std::size_t i = 0; i < digits.size(); ++i) probe[i] = k.elements()[digits[i]];
      codes.push_back(space.encode(probe));
    } while (next_digits(digits, k.order()));
  }
  return coordinate_group(AlgebraicSet::from_codes(space, std::move(codes), Provenance::raw));
}

CoordinateGroup relatively_free(std::span<const Subgroup> family, const WordContext& context) {
  if (family.empty()) throw InputError("relatively_free needs a nonempty family");
  return relatively_free(family, Space(context, family.front().parent()));
}

bool marked_hom_extends(const CoordinateGroup& a, const CoordinateGroup& b) {
  const CayleyGraph& ga = a.graph();
  const CayleyGraph& gb = b.graph();
  if (ga.num_generators != gb.num_generators) return false;
  std::vector<std::uint32_t> image(ga.order, kUnset);
  image[0] = 0;
  for (std::size_t v = 0; v < ga.order; ++v)
    for (std::size_t s = 0; s < ga.num_generators; ++s) {
      const std::uint32_t w = ga.step(static_cast<std::uint32_t>(v), s);
      const std::uint32_t value = gb.step(image[v], s);
      if (image[w] == kUnset)
        image[w] = value;
      else if (image[w] != value)
        return false;
    }
  return true;
}

bool marked_iso(const CoordinateGroup& a, const CoordinateGroup& b) {
  return a.num_generators() == b.num_generators() && a.order() == b.order() && marked_hom_extends(a, b) &&
         marked_hom_extends(b, a);
}

}  // namespace galg
