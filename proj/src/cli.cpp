#include "galg/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "galg/catalog.hpp"
#include "galg/error.hpp"
#include "galg/gcoeff.hpp"
#include "galg/geometry.hpp"
#include "galg/radical.hpp"
#include "galg/scan.hpp"

namespace galg::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "galg.report/1";

const std::vector<std::string> kCommands = {"solve",      "closure", "analyze", "decompose",
                                            "identities", "gcheck",  "scan"};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Prefixes the source of an input error so the user can find it.
template <class F>
auto with_source(const std::string& source, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

struct Inputs {
  GroupPtr group;
  WordContext context;
  std::optional<EquationSystem> system;
};

GroupPtr load_group(const RunConfig& c) {
  if (!c.table.empty())
    return with_source(c.table, [&] { return std::make_shared<const FiniteGroup>(load_table_file(c.table)); });
  return with_source("--group", [&] { return build_group(c.groups.front()); });
}

Inputs load_inputs(const RunConfig& c) {
  Inputs in{load_group(c), WordContext::free(1), std::nullopt};
  if (!c.system.empty()) {
    const std::string text = read_file(c.system);
    EquationSystem sys = with_source(c.system, [&] { return parse_system(text, in.group); });
    if (c.nvars && *c.nvars != sys.context().nvars)
      throw InputError(c.system + ": declares " + std::to_string(sys.context().nvars) + " variables, --vars says " +
                       std::to_string(*c.nvars));
    if (c.coefficients && !sys.context().coefficient_mode())
      throw InputError(c.system + ": --coefficients given but the file has no 'coefficients' line");
    in.context = sys.context();
    for (std::size_t i = 0; i < c.equations.size(); ++i)
      sys.add(with_source("--eq #" + std::to_string(i + 1),
                          [&] { return parse_equation(c.equations[i], in.context); }));
    in.system = std::move(sys);
    return in;
  }
  const std::size_t n = c.nvars.value_or(1);
  in.context = c.coefficients ? WordContext::with_constants(n, in.group) : WordContext::free(n);
  if (!c.equations.empty()) {
    EquationSystem sys(in.context);
    for (std::size_t i = 0; i < c.equations.size(); ++i)
      sys.add(with_source("--eq #" + std::to_string(i + 1),
                          [&] { return parse_equation(c.equations[i], in.context); }));
    in.system = std::move(sys);
  }
  return in;
}

Space make_space(const RunConfig& c, const Inputs& in) {
  if (c.target_power == 1) return Space(in.context, in.group);
  const GTarget target(in.group, c.target_power);
  if (in.context.coefficient_mode()) return target.space(in.context);
  return Space(in.context, target.group());
}

Elem parse_element(const FiniteGroup& g, const std::string& token) {
  for (Elem e = 0; e < g.order(); ++e)
    if (g.name(e) == token) return e;
  if (!token.empty() && std::all_of(token.begin(), token.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    const unsigned long long v = std::stoull(token);
    if (v < g.order()) return static_cast<Elem>(v);
  }
  throw InputError("unknown element '" + token + "'");
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char ch) { return !std::isspace(ch); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

Tuple parse_tuple(const FiniteGroup& g, const std::string& text, std::size_t arity) {
  Tuple t;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = text.find(';', start);
    t.push_back(parse_element(g, trim(text.substr(start, semi - start))));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (t.size() != arity)
    throw InputError("tuple '" + text + "' has " + std::to_string(t.size()) + " entries, expected " +
                     std::to_string(arity));
  return t;
}

std::uint64_t space_budget(const RunConfig& c) { return c.budget.value_or(kDefaultSpaceBudget); }
std::uint64_t exact_budget(const RunConfig& c) { return c.budget.value_or(kDefaultExactBudget); }

// The set under study: V(S) for a system, or the closure of --tuple points.
AlgebraicSet input_set(const RunConfig& c, const Inputs& in, const Space& space, Json& report, std::ostream& err,
                       bool close) {
  if (in.system && !c.tuples.empty()) throw InputError("give either equations or --tuple points, not both");
  if (in.system) return solve(*in.system, space, c.jobs, space_budget(c));
  if (c.tuples.empty()) throw InputError("no input: give --eq, --system or --tuple");
  std::vector<Tuple> points;
  for (std::size_t i = 0; i < c.tuples.size(); ++i)
    points.push_back(with_source("--tuple #" + std::to_string(i + 1),
                                 [&] { return parse_tuple(*space.group(), c.tuples[i], space.arity()); }));
  AlgebraicSet raw = AlgebraicSet::from_tuples(space, points, Provenance::raw);
  if (!close) return raw;
  ClosureResult cl = closure(raw, c.jobs, space_budget(c));
  if (!cl.is_algebraic) {
    const std::string msg = "input points are not an algebraic set; using their closure (" +
                            std::to_string(cl.set.size()) + " points)";
    report["warning"] = msg;
    err << "warning: " << msg << "\n";
  }
  return std::move(cl.set);
}

Json tuple_json(const FiniteGroup& g, std::span<const Elem> t) {
  Json a = Json::array();
  for (Elem e : t) a.push_back(g.name(e));
  return a;
}

Json set_json(const AlgebraicSet& set) {
  Json j;
  j["size"] = set.size();
  j["provenance"] = std::string(to_string(set.provenance()));
  Json pts = Json::array();
  for (std::size_t i = 0; i < set.size(); ++i) pts.push_back(tuple_json(set.group(), set.tuple(i)));
  j["tuples"] = std::move(pts);
  return j;
}

Json subgroup_json(const Subgroup& s) {
  Json j;
  j["order"] = s.order();
  j["generators"] = tuple_json(*s.parent(), s.generators());
  j["elements"] = tuple_json(*s.parent(), s.elements());
  return j;
}

Json witness_json(const FiniteGroup& g, const Witness& w) {
  Json j;
  j["point"] = tuple_json(g, w.point);
  j["endomorphism"] = w.endo.to_string();
  j["image"] = tuple_json(g, w.image);
  j["source"] = w.source;
  return j;
}

std::string fully_label(const Verdict& v) {
  switch (v.outcome) {
    case Outcome::yes: return "fully characteristic";
    case Outcome::no: return "not fully characteristic";
    case Outcome::budget: return "undetermined (budget exceeded)";
  }
  return "";
}

Json verdict_json(const Verdict& v, const AlgebraicSet& set, const std::string& label) {
  Json j;
  j["outcome"] = std::string(to_string(v.outcome));
  j["verdict"] = label;
  j["checks"] = v.checks;
  if (!v.note.empty()) j["note"] = v.note;
  if (v.yes() && !v.family.empty()) {
    Json fam = Json::array();
    for (const Subgroup& s : v.family) fam.push_back(subgroup_json(s));
    j["family"] = std::move(fam);
  }
  if (v.witness) j["witness"] = witness_json(set.group(), *v.witness);
  return j;
}

Json header(const RunConfig& c, const Inputs& in, const Space& space) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = c.command;
  j["group"] = space.group()->label();
  j["group_order"] = space.group()->order();
  if (c.target_power > 1) {
    j["base_group"] = in.group->label();
    j["target_power"] = c.target_power;
  }
  j["vars"] = in.context.nvars;
  j["coefficients"] = in.context.coefficient_mode();
  if (in.system) {
    Json eqs = Json::array();
    for (const Equation& e : in.system->equations()) eqs.push_back(e.to_string());
    j["equations"] = std::move(eqs);
  }
  return j;
}

int cmd_solve(const RunConfig& c, Json& r, std::ostream& err) {
  const Inputs in = load_inputs(c);
  if (!in.system) throw InputError("solve needs --eq or --system");
  const Space space = make_space(c, in);
  r = header(c, in, space);
  r["solutions"] = set_json(input_set(c, in, space, r, err, false));
  return ok;
}

int cmd_closure(const RunConfig& c, Json& r, std::ostream& err) {
  const Inputs in = load_inputs(c);
  const Space space = make_space(c, in);
  r = header(c, in, space);
  const AlgebraicSet set = input_set(c, in, space, r, err, false);
  r["input"] = set_json(set);
  if (set.empty() && !space.coefficient_mode()) throw InputError("closure of the empty set is undefined here");
  const ClosureResult cl = closure(set, c.jobs, space_budget(c));
  r["is_algebraic"] = cl.is_algebraic;
  r["closure"] = set_json(cl.set);
  return ok;
}

int cmd_decompose(const RunConfig& c, Json& r, std::ostream& err) {
  const Inputs in = load_inputs(c);
  const Space space = make_space(c, in);
  r = header(c, in, space);
  const AlgebraicSet set = input_set(c, in, space, r, err, true);
  r["set"] = set_json(set);
  const Verdict v = decompose(set);
  check_verdict(v, set);
  r["decomposition"] = verdict_json(v, set, fully_label(v));
  return ok;
}

int cmd_analyze(const RunConfig& c, Json& r, std::ostream& err) {
  const Inputs in = load_inputs(c);
  const Space space = make_space(c, in);
  r = header(c, in, space);
  const AlgebraicSet set = input_set(c, in, space, r, err, true);
  r["set"] = set_json(set);

  const Verdict dec = decompose(set);
  check_verdict(dec, set);
  r["decomposition"] = verdict_json(dec, set, fully_label(dec));
  std::vector<std::string> disagreements;

  Verdict exact;
  if (set.empty()) {
    exact = dec;
  } else {
    exact = full_invariance_exact(set, exact_budget(c));
    check_verdict(exact, set);
  }
  r["exact"] = verdict_json(exact, set, fully_label(exact));
  if (exact.outcome != Outcome::budget && exact.yes() != dec.yes())
    disagreements.push_back("exact oracle and decomposition disagree");

  const std::size_t maxlen = c.maxlen.value_or(2);
  const Verdict sampled = endo_invariance_sampled(set, maxlen);
  check_verdict(sampled, set);
  r["sampled"] = verdict_json(sampled, set, sampled.yes() ? "no violation up to length " + std::to_string(maxlen)
                                                          : "not fully characteristic");
  if (sampled.no() && dec.yes()) disagreements.push_back("sampled oracle found a violation of a decomposable set");

  const Verdict ch = is_characteristic(set);
  check_verdict(ch, set);
  r["characteristic"] = verdict_json(ch, set, ch.yes() ? "characteristic" : "not characteristic");
  if (ch.no() && dec.yes()) disagreements.push_back("fully characteristic but not characteristic");

  if (!space.coefficient_mode() && !set.empty()) {
    const Theorem2Report t2 = theorem2_report(set);
    Json t;
    t["group_class"] = t2.group_class ? Json(*t2.group_class) : Json(nullptr);
    t["weight"] = t2.weight;
    t["commutators_vanish"] = t2.commutators_vanish;
    t["gamma_vanishes"] = t2.gamma_vanishes;
    t["class_at_most_n"] = t2.class_at_most_n;
    t["class_below_n"] = t2.class_below_n;
    t["applicable"] = t2.applicable;
    t["characteristic_not_fully"] = t2.characteristic.yes() && !t2.decomposition.yes();
    t["consistent"] = t2.consistent;
    r["theorem2"] = std::move(t);
    if (!t2.consistent) disagreements.push_back("characteristic but not fully characteristic within hypothesis");
  }
  r["consistent"] = disagreements.empty();
  if (!disagreements.empty()) {
    r["disagreements"] = disagreements;
    for (const auto& d : disagreements) err << "consistency violation: " << d << "\n";
    return consistency_violation;
  }
  return exact.outcome == Outcome::budget ? budget_exceeded : ok;
}

int cmd_identities(const RunConfig& c, Json& r, std::ostream& err) {
  const Inputs in = load_inputs(c);
  const Space space = make_space(c, in);
  r = header(c, in, space);
  const AlgebraicSet set = input_set(c, in, space, r, err, true);
  r["set"] = set_json(set);
  const std::size_t maxlen = c.maxlen.value_or(4);
  const Corollary1Report rep = corollary1_check(set, maxlen);
  r["maxlen"] = maxlen;
  r["decomposition"] = verdict_json(rep.decomposition, set, fully_label(rep.decomposition));
  r["applicable"] = rep.applicable;
  r["words_checked"] = rep.words_checked;
  r["discrepancy"] = rep.discrepancy ? Json(rep.discrepancy->to_string()) : Json(nullptr);
  if (rep.discrepancy) {
    err << "consistency violation: radical and identities differ on " << rep.discrepancy->to_string() << "\n";
    return consistency_violation;
  }
  return ok;
}

int cmd_gcheck(const RunConfig& c, Json& r, std::ostream&) {
  const Inputs in = load_inputs(c);
  if (!in.context.coefficient_mode()) throw InputError("gcheck needs a coefficient system (--coefficients)");
  if (!in.system) throw InputError("gcheck needs --eq or --system");
  const Space space = make_space(c, in);
  r = header(c, in, space);
  bool consistent = true;

  const Corollary2Report c2 = corollary2_check(in.group, *in.system, exact_budget(c));
  Json j2;
  j2["solutions"] = set_json(c2.solutions);
  j2["g_verbal"] = c2.g_verbal;
  j2["decomposition_agrees"] = c2.decomposition_agrees;
  if (!c2.identities.empty()) j2["identities"] = c2.identities;
  if (c2.violation) j2["violation"] = verdict_json(*c2.violation, c2.solutions, fully_label(*c2.violation));
  j2["consistent"] = c2.consistent;
  if (!c2.note.empty()) j2["note"] = c2.note;
  r["over_group"] = std::move(j2);
  consistent = consistent && c2.consistent;

  const GTarget target(in.group, c.target_power);
  const std::size_t maxlen = c.maxlen.value_or(3);
  const Corollary3Report c3 = corollary3_check(target, *in.system, maxlen, c.seed, c.samples, exact_budget(c));
  Json j3;
  j3["solutions"] = set_json(c3.solutions);
  j3["decomposition"] = verdict_json(c3.decomposition, c3.solutions, fully_label(c3.decomposition));
  if (c3.exact) j3["exact"] = verdict_json(*c3.exact, c3.solutions, fully_label(*c3.exact));
  j3["coordinate_order"] = c3.coordinate_order;
  j3["words_checked"] = c3.words_checked;
  j3["discrepancy"] = c3.discrepancy ? Json(c3.discrepancy->to_string()) : Json(nullptr);
  j3["marked_iso"] = c3.marked_iso ? Json(*c3.marked_iso) : Json(nullptr);
  j3["consistent"] = c3.consistent;
  if (!c3.note.empty()) j3["note"] = c3.note;
  r["over_target"] = std::move(j3);
  consistent = consistent && c3.consistent;

  r["seed"] = c.seed;
  r["consistent"] = consistent;
  return consistent ? ok : consistency_violation;
}

int cmd_scan(const RunConfig& c, Json& r, std::ostream& err) {
  if (!c.table.empty()) throw InputError("scan takes builder descriptors (--group), not --table");
  ScanConfig sc;
  sc.groups = c.groups;
  sc.nvars = c.nvars.value_or(1);
  sc.enumeration.seed = c.seed;
  sc.enumeration.samples = c.samples;
  sc.enumeration.singleton_limit = c.singleton_limit;
  sc.enumeration.jobs = c.jobs;
  sc.exact_budget = exact_budget(c);
  sc.sampled_maxlen = c.maxlen.value_or(2);

  r = Json();
  r["schema"] = kSchema;
  r["command"] = "scan";
  r["vars"] = sc.nvars;
  r["seed"] = sc.enumeration.seed;
  r["samples"] = sc.enumeration.samples;
  r["singleton_limit"] = sc.enumeration.singleton_limit;
  r["exact_budget"] = sc.exact_budget;
  r["sampled_maxlen"] = sc.sampled_maxlen;

  const std::vector<GroupScan> rows = scan_catalog(sc);
  Json table = Json::array();
  bool flagged = false;
  bool agreement = true;
  bool truncated = false;
  for (const GroupScan& g : rows) {
    Json row;
    row["group"] = g.group;
    row["order"] = g.order;
    row["nilpotency_class"] = g.nilpotency_class ? Json(*g.nilpotency_class) : Json(nullptr);
    row["candidates"] = g.candidates;
    row["singletons_sampled"] = g.singletons_sampled;
    row["algebraic_sets"] = g.algebraic_sets;
    row["fully_characteristic"] = g.fully_characteristic;
    row["characteristic"] = g.characteristic;
    row["characteristic_not_fully"] = g.characteristic_not_fully;
    row["hypothesis_holds"] = g.hypothesis_holds;
    row["characteristic_not_fully_in_hypothesis"] = g.characteristic_not_fully_in_hypothesis;
    row["exact_yes"] = g.exact_yes;
    row["oracle_agreement"] = g.oracle_agreement;
    row["exact_budget_hits"] = g.exact_budget;
    row["sampled_contradictions"] = g.sampled_contradictions;
    row["sampled_budget_hits"] = g.sampled_budget;
    row["truncated"] = g.truncated;
    if (g.truncated) row["truncation"] = g.truncation;
    table.push_back(std::move(row));
    if (g.characteristic_not_fully_in_hypothesis) {
      flagged = true;
      err << "FLAG: " << g.group << ": " << g.characteristic_not_fully_in_hypothesis
          << " characteristic-but-not-fully set(s) within the class hypothesis\n";
    }
    if (g.oracle_agreement + g.exact_budget != g.algebraic_sets || g.sampled_contradictions) {
      agreement = false;
      err << "consistency violation: " << g.group << ": oracles disagree\n";
    }
    truncated = truncated || g.truncated;
  }
  r["groups"] = std::move(table);
  r["flagged"] = flagged;
  r["consistent"] = agreement && !flagged;
  if (!agreement || flagged) return consistency_violation;
  return truncated ? budget_exceeded : ok;
}

bool is_scalar_array(const Json& j) {
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

std::string inline_array(const Json& j, const char* open, const char* close) {
  std::string s = open;
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
  return s + close;
}

void render_text(const Json& j, std::ostream& out, int depth);

void render_value(const std::string& key, const Json& v, std::ostream& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  if (v.is_primitive()) {
    out << pad << key << ": " << scalar_text(v) << "\n";
  } else if (v.is_object()) {
    out << pad << key << ":\n";
    render_text(v, out, depth + 1);
  } else if (is_scalar_array(v)) {
    out << pad << key << ": " << inline_array(v, "[", "]") << "\n";
  } else {
    out << pad << key << ": (" << v.size() << ")\n";
    for (const Json& e : v) {
      if (e.is_array() && is_scalar_array(e)) {
        out << pad << "  " << inline_array(e, "(", ")") << "\n";
      } else if (e.is_object()) {
        out << pad << "  -\n";
        render_text(e, out, depth + 2);
      } else {
        out << pad << "  " << e.dump() << "\n";
      }
    }
  }
}

void render_text(const Json& j, std::ostream& out, int depth) {
  for (auto it = j.begin(); it != j.end(); ++it) render_value(it.key(), it.value(), out, depth);
}

}  // namespace

void RunConfig::validate() const {
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
    throw InputError("unknown command '" + command + "'");
  if (nvars && *nvars == 0) throw InputError("--vars must be at least 1");
  if (budget && *budget == 0) throw InputError("--budget must be positive");
  if (target_power == 0) throw InputError("--target-power must be at least 1");
  if (jobs == 0) throw InputError("--jobs must be at least 1");
  if (format != "text" && format != "structured") throw InputError("--format must be text or structured");
  if (command != "scan") {
    if (table.empty() && groups.size() != 1) throw InputError("give exactly one --group or a --table");
    if (!table.empty() && !groups.empty()) throw InputError("--group and --table are exclusive");
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Json report;
  int code = ok;
  try {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    const std::string& cmd = config.command;
    if (cmd == "solve") code = cmd_solve(config, report, err);
    else if (cmd == "closure") code = cmd_closure(config, report, err);
    else if (cmd == "decompose") code = cmd_decompose(config, report, err);
    else if (cmd == "analyze") code = cmd_analyze(config, report, err);
    else if (cmd == "identities") code = cmd_identities(config, report, err);
    else if (cmd == "gcheck") code = cmd_gcheck(config, report, err);
    else code = cmd_scan(config, report, err);
    if (config.timing)
      report["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const ConsistencyError& e) {
    err << "consistency violation: " << e.what() << "\n";
    return consistency_violation;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return budget_exceeded;
  }
  if (config.format == "structured")
    out << report.dump(2) << "\n";
  else
    render_text(report, out, 0);
  return code;
}

int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-model algebraic geometry over groups", "galg"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  std::size_t nvars = 0;
  std::uint64_t budget = 0;
  std::size_t maxlen = 0;
  app.add_option("--group", c.groups, "Group builder, e.g. symmetric(3) (repeatable for scan)")
      ->allow_extra_args(false);
  app.add_option("--table", c.table, "Cayley table file");
  auto* vars_opt = app.add_option("--vars", nvars, "Number of variables");
  app.add_option("--eq", c.equations, "Equation <word> [= <word>] (repeatable)")->allow_extra_args(false);
  app.add_option("--system", c.system, "Equation system file");
  app.add_flag("--coefficients", c.coefficients, "Allow constants g<i> from the group");
  app.add_option("--target-power", c.target_power, "Solve over G^k with G diagonal");
  auto* maxlen_opt = app.add_option("--maxlen", maxlen, "Word length bound");
  auto* budget_opt = app.add_option("--budget", budget, "Work budget for exhaustive scans");
  app.add_option("--seed", c.seed, "Random seed");
  app.add_option("--samples", c.samples, "Random subsets (scan) or random words (gcheck)");
  app.add_option("--singleton-limit", c.singleton_limit, "Sample singletons above this many points (scan)");
  app.add_option("--tuple", c.tuples, "Point as ';'-separated elements (repeatable)")->allow_extra_args(false);
  app.add_option("--format", c.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--jobs", c.jobs, "Worker threads");
  app.add_flag("--timing", c.timing, "Include elapsed time");
  const std::vector<std::pair<std::string, std::string>> subs = {
      {"solve", "Print V(S)"},
      {"closure", "Closure of a point set or V(S)"},
      {"analyze", "Run every oracle and cross-check them"},
      {"decompose", "Decomposition verdict with family or witness"},
      {"identities", "Radical membership against identities of the family"},
      {"gcheck", "G-group checks over G and G^k"},
      {"scan", "Catalog experiment over builder groups"}};
  for (const auto& [name, help] : subs) app.add_subcommand(name, help);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (*vars_opt) c.nvars = nvars;
  if (*maxlen_opt) c.maxlen = maxlen;
  if (*budget_opt) c.budget = budget;
  return run(c, out, err);
}

}  // namespace galg::cli
