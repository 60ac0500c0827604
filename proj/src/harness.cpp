/*
 * Copyright 2026 The teamlogic Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "teamlogic/harness.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <thread>

#include "teamlogic/error.hpp"
#include "teamlogic/evaluator.hpp"
#include "teamlogic/gadgets.hpp"
#include "teamlogic/generators.hpp"
#include "teamlogic/incmax.hpp"
#include "teamlogic/sampling.hpp"
#include "teamlogic/transform.hpp"

namespace teamlogic {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Json instance_to_json(const Instance& inst) {
  Json structures = Json::array();
  for (const auto& s : inst.structures) structures.push_back(structure_to_json(s));
  Json teams = Json::array();
  for (const auto& t : inst.teams) teams.push_back(team_to_json(t));
  Json formulas = Json::array();
  for (const auto& f : inst.formulas) formulas.push_back(render(f));
  return Json{{"structures", std::move(structures)},
              {"teams", std::move(teams)},
              {"formulas", std::move(formulas)},
              {"params", inst.params}};
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "instance: expected an object");
  Instance inst;
  for (const auto& s : j.value("structures", Json::array())) inst.structures.push_back(structure_from_json(s));
  for (const auto& t : j.value("teams", Json::array())) inst.teams.push_back(team_from_json(t));
  for (const auto& f : j.value("formulas", Json::array())) inst.formulas.push_back(parse(f.get<std::string>()));
  inst.params = j.value("params", Json::object());
  return inst;
}

Json CheckReport::to_json() const {
  Json j{{"schema", 1},
         {"check", check},
         {"verdict", teamlogic::to_string(verdict)},
         {"instances", instances},
         {"passed", passed},
         {"failed", failed},
         {"inconclusive", inconclusive},
         {"seed", seed},
         {"config", config}};
  if (index) j["index"] = *index;
  if (!detail.empty()) j["detail"] = detail;
  if (counterexample) j["counterexample"] = instance_to_json(*counterexample);
  return j;
}

namespace {

Outcome pass_outcome(std::string detail = {}) { return {Verdict::Pass, std::move(detail), std::nullopt}; }
Outcome fail_outcome(std::string detail) { return {Verdict::Fail, std::move(detail), std::nullopt}; }

Outcome guarded(const std::function<Outcome(const Instance&)>& check, const Instance& inst) {
  try {
    return check(inst);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ResourceLimit) return {Verdict::Inconclusive, e.what(), std::nullopt};
    return fail_outcome(std::string("error: ") + e.what());
  }
}

const Structure& structure_at(const Instance& inst, std::size_t i) {
  require(!inst.structures.empty(), "instance has no structure");
  return inst.structures.size() == 1 ? inst.structures[0] : inst.structures.at(i);
}

Instance only_pair(const Instance& inst, std::size_t i) {
  Instance out;
  out.structures = {structure_at(inst, i)};
  out.teams = {inst.teams.at(i)};
  out.formulas = inst.formulas;
  out.params = inst.params;
  return out;
}

// Runs `one` on each (structure, team) pair. The first failure is narrowed
// to its pair; budget exhaustion on a pair makes the whole instance
// inconclusive unless another pair fails.
Outcome over_pairs(const Instance& inst, const std::function<std::optional<std::string>(std::size_t)>& one) {
  std::optional<std::string> inconclusive;
  for (std::size_t i = 0; i < inst.teams.size(); ++i) {
    try {
      if (auto bad = one(i)) {
        Outcome o = fail_outcome(*bad);
        o.narrowed = only_pair(inst, i);
        return o;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ResourceLimit) throw;
      if (!inconclusive) inconclusive = e.what();
    }
  }
  if (inconclusive) return {Verdict::Inconclusive, *inconclusive, std::nullopt};
  return pass_outcome();
}

std::string verdict_word(bool b) { return b ? "true" : "false"; }

// Per-evaluation search cap inside suites. A hard instance reports
// inconclusive after a few seconds instead of minutes.
constexpr std::uint64_t kSuiteEnumerations = 2'000'000;

EvalOptions suite_options(Semantics sem = Semantics::Lax) {
  EvalOptions o;
  o.semantics = sem;
  o.budget.max_enumerations = kSuiteEnumerations;
  return o;
}

EvalOptions no_pruning(Semantics sem = Semantics::Lax) {
  EvalOptions o = suite_options();
  o.semantics = sem;
  o.locality_pruning = o.flat_pruning = o.closure_pruning = o.union_pruning = false;
  o.symmetry_pruning = o.guard_splitting = o.quantifier_distribution = false;
  return o;
}

// ---- checks --------------------------------------------------------------

Outcome check_equivalent_pairs(const Instance& inst, const Formula& a, const Formula& b) {
  return over_pairs(inst, [&](std::size_t i) -> std::optional<std::string> {
    const auto& m = structure_at(inst, i);
    const bool va = eval_lax(m, inst.teams[i], a, suite_options()).verdict;
    const bool vb = eval_lax(m, inst.teams[i], b, suite_options()).verdict;
    if (va == vb) return std::nullopt;
    return "verdicts differ: first " + verdict_word(va) + ", second " + verdict_word(vb);
  });
}

Outcome equivalence_check(const Instance& inst) {
  require(inst.formulas.size() == 2, "equivalence instance needs two formulas");
  return check_equivalent_pairs(inst, inst.formulas[0], inst.formulas[1]);
}

std::vector<std::string> rendered_atoms(const Formula& f) {
  std::vector<std::string> out;
  for (const auto& a : atoms(f)) out.push_back(render(a));
  std::sort(out.begin(), out.end());
  return out;
}

Outcome prenex_check(const Instance& inst) {
  const Formula& f = inst.formulas.at(0);
  const TranslationReport r = prenex(f);
  if (!is_prenex(r.output)) return fail_outcome("output is not prenex: " + render(r.output));
  if (classify(r.output).forall_count != classify(f).forall_count) {
    return fail_outcome("universal count changed: " + render(r.output));
  }
  std::map<std::string, Term> back;
  for (const auto& [fresh, original] : r.renamed) back.emplace(fresh, Term::var(original));
  std::vector<Formula> pending = r.selector_literals;
  std::vector<std::string> out_atoms;
  for (const auto& a : atoms(r.output)) {
    auto it = std::find(pending.begin(), pending.end(), a);
    if (it != pending.end()) {
      pending.erase(it);
      continue;
    }
    out_atoms.push_back(render(substitute(a, back)));
  }
  std::sort(out_atoms.begin(), out_atoms.end());
  if (!pending.empty() || out_atoms != rendered_atoms(f)) {
    return fail_outcome("atom multiset changed: " + render(r.output));
  }
  return check_equivalent_pairs(inst, f, r.output);
}

Outcome one_forall_check(const Instance& inst) {
  const Formula& f = inst.formulas.at(0);
  const TranslationReport r = collapse_universals(f);
  if (classify(r.output).forall_count > 1) return fail_outcome("more than one universal: " + render(r.output));
  if (!is_inclusion_fragment(r.output)) return fail_outcome("output left the inclusion fragment");
  return check_equivalent_pairs(inst, f, r.output);
}

Outcome elim_terms_check(const Instance& inst) {
  const Formula& f = inst.formulas.at(0);
  const TranslationReport r = eliminate_terms_in_inclusions(f);
  if (!inclusion_args_are_variables(r.output)) return fail_outcome("constants left in inclusion atoms");
  return check_equivalent_pairs(inst, f, r.output);
}

std::vector<std::string> numbered(const std::string& base, int k) {
  std::vector<std::string> out;
  for (int i = 1; i <= k; ++i) out.push_back(base + std::to_string(i));
  return out;
}

Tuple constant_tuple(const Structure& g, const std::string& base, int k) {
  Tuple t;
  for (const auto& name : numbered(base, k)) t.push_back(g.constant(name));
  return t;
}

Outcome neg_tc_check(const Instance& inst) {
  const int k = inst.params.at("k").get<int>();
  const Structure& g = inst.structures.at(0);
  const auto xs = numbered("x", k), ys = numbered("y", k);
  const TranslationReport enc = neg_tc_encoding(edge_formula(k, xs, ys), xs, ys, numbered("b", k), numbered("c", k));
  if (classify(enc.output).max_inc_arity != k) return fail_outcome("inclusion arity differs from k");
  const bool encoded = eval_inclusion(g, Team::unit(), enc.output);
  const bool reachable = tc_reachability_oracle(g, k, constant_tuple(g, "b", k), constant_tuple(g, "c", k));
  if (encoded == !reachable) return pass_outcome();
  return fail_outcome("encoding " + verdict_word(encoded) + " but reachability " + verdict_word(reachable));
}

Outcome flatness_check(const Instance& inst) {
  const Formula& f = inst.formulas.at(0);
  EvalOptions o = suite_options();
  o.flat_pruning = false;
  return over_pairs(inst, [&](std::size_t i) -> std::optional<std::string> {
    const auto& m = structure_at(inst, i);
    const Team& x = inst.teams[i];
    const bool team = eval_lax(m, x, f, o).verdict;
    bool singletons = true, tarski = true;
    for (std::size_t r = 0; r < x.size(); ++r) {
      std::vector<bool> keep(x.size(), false);
      keep[r] = true;
      singletons = singletons && eval_lax(m, x.select(keep), f, o).verdict;
      tarski = tarski && eval_fo(m, x.assignment(r), f);
    }
    if (team == singletons && team == tarski) return std::nullopt;
    return "team " + verdict_word(team) + ", singletons " + verdict_word(singletons) + ", tarski " +
           verdict_word(tarski);
  });
}

Outcome locality_check(const Instance& inst) {
  const Formula& f = inst.formulas.at(0);
  const auto keep = inst.params.at("V").get<std::vector<std::string>>();
  EvalOptions o = suite_options();
  o.locality_pruning = false;
  return over_pairs(inst, [&](std::size_t i) -> std::optional<std::string> {
    const auto& m = structure_at(inst, i);
    const bool whole = eval_lax(m, inst.teams[i], f, o).verdict;
    const bool restricted = eval_lax(m, restrict_team(inst.teams[i], keep), f, o).verdict;
    if (whole == restricted) return std::nullopt;
    return "X gives " + verdict_word(whole) + ", X restricted to V gives " + verdict_word(restricted);
  });
}

Outcome union_closure_check(const Instance& inst) {
  const Formula& f = inst.formulas.at(0);
  const Structure& m = inst.structures.at(0);
  EvalOptions o = suite_options();
  o.union_pruning = false;
  const Team& a = inst.teams.at(0);
  const Team& b = inst.teams.at(1);
  if (!eval_lax(m, a, f, o).verdict || !eval_lax(m, b, f, o).verdict) return pass_outcome("vacuous");
  if (eval_lax(m, team_union(a, b), f, o).verdict) return pass_outcome();
  return fail_outcome("both teams satisfy the formula but their union does not");
}

Outcome empty_team_check(const Instance& inst) {
  const Formula& f = inst.formulas.at(0);
  return over_pairs(inst, [&](std::size_t i) -> std::optional<std::string> {
    const auto& m = structure_at(inst, i);
    const EvalOptions strict = suite_options(Semantics::Strict);
    const bool lax = eval_lax(m, inst.teams[i], f, suite_options()).verdict;
    const bool str = evaluate(m, inst.teams[i], f, strict).verdict;
    if (lax && str) return std::nullopt;
    return "empty team: lax " + verdict_word(lax) + ", strict " + verdict_word(str);
  });
}

Outcome strict_implies_lax_check(const Instance& inst) {
  const Formula& f = inst.formulas.at(0);
  return over_pairs(inst, [&](std::size_t i) -> std::optional<std::string> {
    const auto& m = structure_at(inst, i);
    const EvalOptions strict = suite_options(Semantics::Strict);
    if (!evaluate(m, inst.teams[i], f, strict).verdict) return std::nullopt;
    if (eval_lax(m, inst.teams[i], f, suite_options()).verdict) return std::nullopt;
    return std::string("strict true but lax false");
  });
}

Outcome maxsub_check(const Instance& inst) {
  const Formula& f = inst.formulas.at(0);
  EvalOptions o = suite_options();
  o.union_pruning = false;
  return over_pairs(inst, [&](std::size_t i) -> std::optional<std::string> {
    const auto& m = structure_at(inst, i);
    const bool fixpoint = eval_inclusion(m, inst.teams[i], f);
    const bool search = eval_lax(m, inst.teams[i], f, o).verdict;
    if (fixpoint == search) return std::nullopt;
    return "maximal subteam says " + verdict_word(fixpoint) + ", exhaustive search says " + verdict_word(search);
  });
}

Outcome divergence_check(const Instance& inst) {
  const Formula& f = inst.formulas.at(0);
  const Structure& m = inst.structures.at(0);
  const Team& x = inst.teams.at(0);
  const bool lax = evaluate(m, x, f, no_pruning(Semantics::Lax)).verdict;
  const bool strict = evaluate(m, x, f, no_pruning(Semantics::Strict)).verdict;
  if (lax && !strict) return pass_outcome();
  return fail_outcome("expected lax true and strict false, got lax " + verdict_word(lax) + ", strict " +
                      verdict_word(strict));
}

Outcome sweep_outcome(const SweepResult& r) {
  if (r.ok()) return pass_outcome("checked " + std::to_string(r.checked));
  return fail_outcome(std::to_string(r.violations) + " violations, first: " + r.first_violation.value_or(""));
}

Outcome mid_check(const Instance& inst) { return sweep_outcome(verify_mid_properties(inst.params.at("m").get<int>())); }

Outcome ef_check(const Instance& inst) {
  return sweep_outcome(verify_ef_types(inst.params.at("k").get<int>(), inst.params.at("m").get<int>()));
}

Outcome swap_check(const Instance& inst) {
  return sweep_outcome(verify_swap_closure(inst.params.at("m").get<int>(), inst.params.at("n").get<int>(),
                                           inst.params.at("seed").get<std::uint64_t>()));
}

using Checker = std::function<Outcome(const Instance&)>;

const std::map<std::string, Checker>& checkers() {
  static const std::map<std::string, Checker> table{
      {"equivalence", equivalence_check},
      {"flatness", flatness_check},
      {"locality", locality_check},
      {"union-closure", union_closure_check},
      {"empty-team", empty_team_check},
      {"strict-implies-lax", strict_implies_lax_check},
      {"maxsub-agreement", maxsub_check},
      {"mid-properties", mid_check},
      {"ef-type", ef_check},
      {"swap-closure", swap_check},
      {"prenex", prenex_check},
      {"one-forall", one_forall_check},
      {"neg-tc", neg_tc_check},
      {"elim-terms", elim_terms_check},
      {"lax-strict-divergence", divergence_check},
  };
  return table;
}

const Checker& checker_for(const std::string& name) {
  auto it = checkers().find(name);
  if (it == checkers().end()) fail("unknown check '" + name + "'");
  return it->second;
}

// ---- instance builders ---------------------------------------------------

Structure plain(Element domain) { return Structure({}, domain, {}, {}); }

Structure with_tc_constants(const Structure& g, int k, const Tuple& b, const Tuple& c) {
  Signature sig = g.signature();
  std::map<std::string, std::set<Tuple>> rels;
  for (const auto& [name, arity] : sig.relations) rels[name] = g.tuples(name);
  auto consts = g.constants();
  for (int i = 0; i < k; ++i) {
    consts["b" + std::to_string(i + 1)] = b[i];
    consts["c" + std::to_string(i + 1)] = c[i];
  }
  sig.constants.clear();
  for (const auto& [name, value] : consts) sig.constants.push_back(name);
  return Structure(std::move(sig), g.domain_size(), std::move(rels), std::move(consts), g.shape());
}

Instance tc_instance(const Structure& g, int k, const Tuple& b, const Tuple& c) {
  Instance inst;
  inst.structures = {with_tc_constants(g, k, b, c)};
  inst.params = Json{{"k", k}};
  return inst;
}

// A concatenation of index ranges, each with its own builder.
struct Segments {
  std::vector<std::pair<std::uint64_t, std::function<Instance(std::uint64_t)>>> parts;

  void add(std::uint64_t size, std::function<Instance(std::uint64_t)> make) {
    if (size > 0) parts.emplace_back(size, std::move(make));
  }
  std::uint64_t size() const {
    std::uint64_t n = 0;
    for (const auto& p : parts) n += p.first;
    return n;
  }
  Instance operator()(std::uint64_t index) const {
    for (const auto& [size, make] : parts) {
      if (index < size) return make(index);
      index -= size;
    }
    fail("instance index out of range");
  }
};

Structure digraph_from_mask(Element nodes, std::uint64_t mask) {
  std::set<Tuple> edges;
  for (Element p = 0; p < nodes * nodes; ++p) {
    if (mask >> p & 1) edges.insert({p / nodes, p % nodes});
  }
  Signature sig;
  sig.relations["E"] = 2;
  return Structure(sig, nodes, {{"E", std::move(edges)}}, {});
}

void add_pietron_family(Segments& seg, int k, const PietronConfig& cfg) {
  using Family = PietronConfig::Family;
  if (cfg.family == Family::AllDigraphs) {
    require(k == 1, "all-digraph sweep is for k = 1");
    for (Element n = 1; n <= cfg.max_nodes; ++n) {
      const std::uint64_t pairs = static_cast<std::uint64_t>(n) * n;
      seg.add((1ULL << pairs) * pairs, [n, pairs](std::uint64_t i) {
        const Structure g = digraph_from_mask(n, i / pairs);
        const std::uint64_t p = i % pairs;
        return tc_instance(g, 1, {static_cast<Element>(p / n)}, {static_cast<Element>(p % n)});
      });
    }
  } else if (cfg.family == Family::RandomGraphs) {
    require(k == 1, "random-graph sweep is for k = 1");
    const Element n = cfg.nodes;
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * n;
    const double p = cfg.edge_prob;
    const std::uint64_t seed = cfg.seed;
    seg.add(cfg.graphs * pairs, [n, pairs, p, seed](std::uint64_t i) {
      const Structure g = random_graph(n, p, splitmix64(seed ^ splitmix64(i / pairs)));
      const std::uint64_t q = i % pairs;
      return tc_instance(g, 1, {static_cast<Element>(q / n)}, {static_cast<Element>(q % n)});
    });
  } else {
    for (int n = 1; n <= cfg.max_n; ++n) {
      for (int paths = 1; paths <= 2; ++paths) {
        const Structure g = clique_path_graph(k, n, paths);
        std::vector<Tuple> ends{constant_tuple(g, "b", k), constant_tuple(g, "c", k)};
        if (paths == 2) ends.push_back(constant_tuple(g, "cp", k));
        std::vector<Tuple> targets = ends;
        for (const auto& t : ends) {
          Tuple r(t.rbegin(), t.rend());
          if (r != t) targets.push_back(r);
        }
        const std::uint64_t per = targets.size();
        seg.add(ends.size() * per, [g, k, ends, targets, per](std::uint64_t i) {
          return tc_instance(g, k, ends[i / per], targets[i % per]);
        });
      }
    }
  }
}

Json pietron_config_json(int k, const PietronConfig& cfg) {
  using Family = PietronConfig::Family;
  switch (cfg.family) {
    case Family::AllDigraphs: return Json{{"k", k}, {"family", "all-digraphs"}, {"max_nodes", cfg.max_nodes}};
    case Family::RandomGraphs:
      return Json{{"k", k}, {"family", "random-graphs"}, {"graphs", cfg.graphs}, {"nodes", cfg.nodes},
                  {"edge_prob", cfg.edge_prob}, {"seed", cfg.seed}};
    case Family::CliquePaths: return Json{{"k", k}, {"family", "clique-paths"}, {"max_n", cfg.max_n}};
  }
  return {};
}

std::uint64_t capped(const RunOptions& opts, std::uint64_t full) {
  return opts.budget ? std::min(*opts.budget, full) : full;
}

std::vector<std::string> xy() { return {"x", "y"}; }

Suite random_formula_suite(const std::string& name, const RunOptions& opts, std::uint64_t fallback,
                           FormulaConfig fcfg, Element dmin, Element dmax, std::size_t rows, Json config) {
  const std::uint64_t seed = opts.seed;
  Suite s;
  s.name = name;
  s.size = opts.budget.value_or(fallback);
  config["max_depth"] = fcfg.max_depth;
  config["min_depth"] = fcfg.min_depth;
  config["domains"] = {dmin, dmax};
  config["max_team_rows"] = rows;
  config["atom_weights"] = {{"fo", fcfg.w_fo}, {"inc", fcfg.w_inc}, {"dep", fcfg.w_dep}, {"ind", fcfg.w_ind}};
  s.config = std::move(config);
  s.make = [seed, fcfg, dmin, dmax, rows](std::uint64_t i) {
    Rng rng = Rng::for_instance(seed, i);
    Instance inst;
    inst.formulas = {random_formula(rng, fcfg)};
    const auto d = static_cast<Element>(rng.between(static_cast<int>(dmin), static_cast<int>(dmax)));
    inst.structures = {random_structure(rng, d)};
    inst.teams = {random_team(rng, fcfg.free_vars, d, rows)};
    return inst;
  };
  return s;
}

// Suites draw non-atomic formulas: the top two levels exclude atoms.
constexpr int kSuiteMinDepth = 2;

FormulaConfig full_logic(int depth) {
  FormulaConfig c;
  c.max_depth = depth;
  c.min_depth = kSuiteMinDepth;
  c.w_fo = 0.4;
  c.w_inc = 0.3;
  c.w_dep = 0.2;
  c.w_ind = 0.1;
  return c;
}

FormulaConfig inclusion_logic(int depth) {
  FormulaConfig c;
  c.max_depth = depth;
  c.min_depth = kSuiteMinDepth;
  c.w_fo = 0.5;
  c.w_inc = 0.5;
  c.w_dep = 0.0;
  return c;
}

Suite flatness_suite(const RunOptions& opts) {
  FormulaConfig c;
  c.max_depth = 4;
  c.min_depth = kSuiteMinDepth;
  c.w_fo = 1.0;
  c.w_inc = c.w_dep = c.w_ind = 0.0;
  return random_formula_suite("flatness", opts, 1000, c, 2, 3, 4, Json::object());
}

Suite locality_suite(const RunOptions& opts) {
  const FormulaConfig c = full_logic(3);
  const std::uint64_t seed = opts.seed;
  Suite s;
  s.name = "locality";
  s.size = opts.budget.value_or(1000);
  s.config = Json{{"max_depth", c.max_depth}, {"min_depth", c.min_depth}, {"domains", {2, 3}}, {"max_team_rows", 4}, {"team_vars", {"x", "y", "v"}}};
  s.make = [seed, c](std::uint64_t i) {
    Rng rng = Rng::for_instance(seed, i);
    Instance inst;
    const Formula f = random_formula(rng, c);
    inst.formulas = {f};
    const auto d = static_cast<Element>(rng.between(2, 3));
    inst.structures = {random_structure(rng, d)};
    const std::vector<std::string> dom{"x", "y", "v"};
    inst.teams = {random_team(rng, dom, d, 4)};
    const auto free = free_variables(f);
    std::vector<std::string> keep;
    for (const auto& v : dom) {
      if (free.count(v) || rng.chance(0.5)) keep.push_back(v);
    }
    inst.params = Json{{"V", keep}};
    return inst;
  };
  return s;
}

Suite union_closure_suite(const RunOptions& opts) {
  const FormulaConfig c = inclusion_logic(3);
  const std::uint64_t seed = opts.seed;
  Suite s;
  s.name = "union-closure";
  s.size = opts.budget.value_or(1000);
  s.config = Json{{"max_depth", c.max_depth}, {"min_depth", c.min_depth}, {"domains", {2, 3}}, {"max_team_rows", 3}};
  s.make = [seed, c](std::uint64_t i) {
    Rng rng = Rng::for_instance(seed, i);
    Instance inst;
    inst.formulas = {random_formula(rng, c)};
    const auto d = static_cast<Element>(rng.between(2, 3));
    inst.structures = {random_structure(rng, d)};
    inst.teams = {random_team(rng, xy(), d, 3), random_team(rng, xy(), d, 3)};
    return inst;
  };
  return s;
}

Suite empty_team_suite(const RunOptions& opts) {
  const FormulaConfig c = full_logic(3);
  const std::uint64_t seed = opts.seed;
  Suite s;
  s.name = "empty-team";
  s.size = opts.budget.value_or(1000);
  s.config = Json{{"max_depth", c.max_depth}, {"min_depth", c.min_depth}, {"domains", {2, 3}}};
  s.make = [seed, c](std::uint64_t i) {
    Rng rng = Rng::for_instance(seed, i);
    Instance inst;
    inst.formulas = {random_formula(rng, c)};
    inst.structures = {random_structure(rng, static_cast<Element>(rng.between(2, 3)))};
    inst.teams = {Team(xy())};
    return inst;
  };
  return s;
}

Suite strict_implies_lax_suite(const RunOptions& opts) {
  return random_formula_suite("strict-implies-lax", opts, 1000, full_logic(3), 2, 3, 3, Json::object());
}

// Exhaustive inclusion-fragment formulas first, then random ones at |M| = 3.
Suite maxsub_suite(const RunOptions& opts) {
  auto formulas = std::make_shared<std::vector<Formula>>(enumerate_formulas(
      {parse("inc(x; y)"), parse("x != y")},
      {{NodeKind::Exists, "x"}, {NodeKind::Forall, "x"}, {NodeKind::Exists, "y"}, {NodeKind::Forall, "y"}}, 3));
  auto teams = std::make_shared<std::vector<Team>>();
  for_each_team(xy(), 2, 3, [&](const Team& t) { teams->push_back(t); });
  const std::uint64_t exhaustive = formulas->size() * teams->size();
  FormulaConfig c = inclusion_logic(3);
  c.bound_vars = xy();
  const std::uint64_t seed = opts.seed;
  Suite s;
  s.name = "maxsub-agreement";
  s.size = opts.budget.value_or(exhaustive + 1000);
  s.config = Json{{"exhaustive", {{"atoms", {"inc(x; y)", "x != y"}},
                                  {"quantifiers", {"exists x", "forall x", "exists y", "forall y"}},
                                  {"max_depth", 3},
                                  {"domain", 2},
                                  {"max_team_rows", 3},
                                  {"formulas", formulas->size()},
                                  {"teams", teams->size()}}},
                  {"random", {{"max_depth", 3}, {"min_depth", c.min_depth}, {"domain", 3}, {"max_team_rows", 4}, {"vars", xy()}}}};
  const Structure m2 = plain(2);
  s.make = [formulas, teams, exhaustive, seed, c, m2](std::uint64_t i) {
    Instance inst;
    if (i < exhaustive) {
      inst.formulas = {(*formulas)[i / teams->size()]};
      inst.structures = {m2};
      inst.teams = {(*teams)[i % teams->size()]};
      return inst;
    }
    Rng rng = Rng::for_instance(seed, i - exhaustive);
    inst.formulas = {random_formula(rng, c)};
    inst.structures = {random_structure(rng, 3)};
    inst.teams = {random_team(rng, xy(), 3, 4)};
    return inst;
  };
  return s;
}

Suite prenex_suite(const RunOptions& opts) {
  FormulaConfig c;
  c.max_depth = 3;
  c.min_depth = kSuiteMinDepth;
  c.max_quantifiers = 2;
  c.w_fo = 0.4;
  c.w_inc = 0.4;
  c.w_dep = 0.2;
  const std::uint64_t seed = opts.seed;
  Suite s;
  s.name = "prenex";
  s.size = opts.budget.value_or(500);
  s.config = Json{{"max_depth", 3}, {"min_depth", c.min_depth}, {"max_quantifiers", 2}, {"domains", {2, 3}}, {"pairs_per_formula", 4},
                  {"max_team_rows", 3}};
  s.make = [seed, c](std::uint64_t i) {
    Rng rng = Rng::for_instance(seed, i);
    Instance inst;
    inst.formulas = {random_formula(rng, c)};
    for (int j = 0; j < 4; ++j) {
      const Element d = 2 + static_cast<Element>(j % 2);
      inst.structures.push_back(random_structure(rng, d));
      inst.teams.push_back(random_team(rng, xy(), d, 3));
    }
    return inst;
  };
  return s;
}

Suite one_forall_suite(const RunOptions& opts) {
  const PrenexConfig c;
  const std::uint64_t seed = opts.seed;
  auto graphs = std::make_shared<std::vector<Structure>>(all_digraphs(2));
  Suite s;
  s.name = "one-forall";
  s.size = opts.budget.value_or(200);
  s.config = Json{{"vars", c.vars}, {"max_universals", c.max_universals}, {"matrix_depth", c.matrix_depth},
                  {"structures", "all digraphs on 2 nodes"}};
  s.make = [seed, c, graphs](std::uint64_t i) {
    Rng rng = Rng::for_instance(seed, i);
    Instance inst;
    inst.formulas = {random_prenex_sentence(rng, c)};
    inst.structures = *graphs;
    inst.teams.assign(graphs->size(), Team::unit());
    return inst;
  };
  return s;
}

Suite elim_terms_suite(const RunOptions& opts) {
  FormulaConfig c;
  c.max_depth = 3;
  c.min_depth = kSuiteMinDepth;
  c.w_fo = 0.4;
  c.w_inc = 0.6;
  c.w_dep = 0.0;
  const std::uint64_t seed = opts.seed;
  Suite s;
  s.name = "elim-terms";
  s.size = opts.budget.value_or(200);
  s.config = Json{{"max_depth", 3}, {"min_depth", c.min_depth}, {"constant", "c replaces y"}, {"domains", {2, 3}}, {"pairs_per_formula", 4}};
  s.make = [seed, c](std::uint64_t i) {
    Rng rng = Rng::for_instance(seed, i);
    Instance inst;
    inst.formulas = {substitute(random_formula(rng, c), {{"y", Term::constant("c")}})};
    for (int j = 0; j < 4; ++j) {
      const Element d = 2 + static_cast<Element>(j % 2);
      inst.structures.push_back(random_structure(rng, d, {{"E", 2}}, {"c"}));
      inst.teams.push_back(random_team(rng, {"x"}, d, 3));
    }
    return inst;
  };
  return s;
}

Suite neg_tc_suite(const RunOptions& opts) {
  auto seg = std::make_shared<Segments>();
  PietronConfig all;
  PietronConfig rnd;
  rnd.family = PietronConfig::Family::RandomGraphs;
  rnd.seed = opts.seed;
  PietronConfig cp;
  cp.family = PietronConfig::Family::CliquePaths;
  add_pietron_family(*seg, 1, all);
  add_pietron_family(*seg, 1, rnd);
  add_pietron_family(*seg, 2, cp);
  Suite s;
  s.name = "neg-tc";
  s.size = capped(opts, seg->size());
  s.config = Json::array({pietron_config_json(1, all), pietron_config_json(1, rnd), pietron_config_json(2, cp)});
  s.make = [seg](std::uint64_t i) { return (*seg)(i); };
  return s;
}

Suite params_suite(const std::string& name, std::vector<Json> params, const RunOptions& opts) {
  auto list = std::make_shared<std::vector<Json>>(std::move(params));
  Suite s;
  s.name = name;
  s.size = capped(opts, list->size());
  s.config = Json{{"instances", *list}};
  s.make = [list](std::uint64_t i) {
    Instance inst;
    inst.params = (*list)[i];
    return inst;
  };
  return s;
}

Suite divergence_suite(const RunOptions& opts) {
  Suite s;
  s.name = "lax-strict-divergence";
  s.size = capped(opts, 1);
  s.make = [](std::uint64_t) {
    Instance inst;
    inst.formulas = {parse("exists x. (inc(y; x) & inc(z; x))")};
    inst.structures = {plain(2)};
    inst.teams = {Team({"y", "z"}, {{0, 1}})};
    return inst;
  };
  return s;
}

}  // namespace

CheckReport run_suite(const Suite& suite, std::uint64_t seed, unsigned workers) {
  const Checker& check = suite.check ? suite.check : checker_for(suite.name);
  workers = std::max(1u, workers);
  struct Tally {
    std::uint64_t passed = 0, failed = 0, inconclusive = 0;
    std::optional<std::uint64_t> first_fail, first_inconclusive;
  };
  std::vector<Tally> tallies(workers);
  auto work = [&](unsigned w) {
    Tally& t = tallies[w];
    for (std::uint64_t i = w; i < suite.size; i += workers) {
      const Outcome o = guarded(check, suite.make(i));
      switch (o.verdict) {
        case Verdict::Pass: ++t.passed; break;
        case Verdict::Fail:
          ++t.failed;
          if (!t.first_fail) t.first_fail = i;
          break;
        case Verdict::Inconclusive:
          ++t.inconclusive;
          if (!t.first_inconclusive) t.first_inconclusive = i;
          break;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  CheckReport r;
  r.check = suite.name;
  r.seed = seed;
  r.config = suite.config;
  r.instances = suite.size;
  std::optional<std::uint64_t> first_fail, first_inconclusive;
  for (const auto& t : tallies) {
    r.passed += t.passed;
    r.failed += t.failed;
    r.inconclusive += t.inconclusive;
    if (t.first_fail && (!first_fail || *t.first_fail < *first_fail)) first_fail = t.first_fail;
    if (t.first_inconclusive && (!first_inconclusive || *t.first_inconclusive < *first_inconclusive)) {
      first_inconclusive = t.first_inconclusive;
    }
  }
  if (first_fail) {
    r.verdict = Verdict::Fail;
    r.index = first_fail;
    const Instance inst = suite.make(*first_fail);
    Outcome o = guarded(check, inst);
    r.detail = o.detail;
    r.counterexample = o.narrowed ? *o.narrowed : inst;
  } else if (first_inconclusive) {
    r.verdict = Verdict::Inconclusive;
    r.index = first_inconclusive;
    r.detail = guarded(check, suite.make(*first_inconclusive)).detail;
  }
  return r;
}

bool tc_reachability_oracle(const Structure& g, int k, const Tuple& b, const Tuple& c) {
  require(k >= 1 && static_cast<int>(b.size()) == k && static_cast<int>(c.size()) == k,
          "reachability oracle: tuples must have length k");
  if (b == c) return true;
  const auto xs = numbered("x", k), ys = numbered("y", k);
  const Formula edge = edge_formula(k, xs, ys);
  std::vector<std::string> vars = xs;
  vars.insert(vars.end(), ys.begin(), ys.end());
  const std::vector<Tuple> nodes = all_rows(static_cast<std::size_t>(k), g.domain_size());
  std::set<Tuple> seen{b};
  std::deque<Tuple> queue{b};
  while (!queue.empty()) {
    const Tuple cur = queue.front();
    queue.pop_front();
    for (const auto& next : nodes) {
      if (seen.count(next)) continue;
      Tuple values = cur;
      values.insert(values.end(), next.begin(), next.end());
      if (!eval_fo(g, Assignment(vars, values), edge)) continue;
      if (next == c) return true;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  return false;
}

CheckReport check_equivalence(const Formula& f1, const Formula& f2, const EquivalenceConfig& cfg) {
  const auto free1 = free_variables(f1);
  if (free1 != free_variables(f2)) throw Error(ErrorKind::Invalid, "equivalence check needs equal free variables");
  require(!cfg.domains.empty(), "equivalence check needs a domain size");
  const std::vector<std::string> vars(free1.begin(), free1.end());
  auto relations = relation_symbols(f1);
  for (const auto& [name, arity] : relation_symbols(f2)) relations[name] = arity;
  auto constants = constant_symbols(f1);
  for (const auto& c : constant_symbols(f2)) constants.insert(c);

  Suite s;
  s.name = "equivalence";
  s.config = Json{{"formulas", {render(f1), render(f2)}},
                  {"domains", cfg.domains},
                  {"max_team_rows", cfg.max_team_rows},
                  {"exhaustive", cfg.exhaustive}};
  const std::uint64_t seed = cfg.seed;
  if (!cfg.exhaustive) {
    s.size = cfg.samples;
    s.config["samples"] = cfg.samples;
    s.make = [=](std::uint64_t i) {
      Rng rng = Rng::for_instance(seed, i);
      const Element d = cfg.domains[rng.below(cfg.domains.size())];
      Instance inst;
      inst.formulas = {f1, f2};
      inst.structures = {random_structure(rng, d, relations, constants)};
      inst.teams = {random_team(rng, vars, d, cfg.max_team_rows)};
      return inst;
    };
  } else {
    s.config["structures_per_domain"] = cfg.structures_per_domain;
    auto seg = std::make_shared<Segments>();
    for (std::size_t di = 0; di < cfg.domains.size(); ++di) {
      const Element d = cfg.domains[di];
      auto teams = std::make_shared<std::vector<Team>>();
      for_each_team(vars, d, cfg.max_team_rows, [&](const Team& t) { teams->push_back(t); });
      for (std::uint64_t si = 0; si < cfg.structures_per_domain; ++si) {
        Rng rng = Rng::for_instance(seed, di * cfg.structures_per_domain + si);
        const Structure m = random_structure(rng, d, relations, constants);
        seg->add(teams->size(), [=](std::uint64_t i) {
          Instance inst;
          inst.formulas = {f1, f2};
          inst.structures = {m};
          inst.teams = {(*teams)[i]};
          return inst;
        });
      }
    }
    s.size = seg->size();
    s.make = [seg](std::uint64_t i) { return (*seg)(i); };
  }
  return run_suite(s, cfg.seed, cfg.workers);
}

CheckReport check_pietron(int k, const PietronConfig& cfg) {
  auto seg = std::make_shared<Segments>();
  add_pietron_family(*seg, k, cfg);
  Suite s;
  s.name = "neg-tc";
  s.size = seg->size();
  s.config = pietron_config_json(k, cfg);
  s.make = [seg](std::uint64_t i) { return (*seg)(i); };
  return run_suite(s, cfg.seed, cfg.workers);
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{
      "flatness",      "locality",   "union-closure", "empty-team", "strict-implies-lax",
      "maxsub-agreement", "mid-properties", "ef-type", "swap-closure", "prenex",
      "one-forall",    "neg-tc",     "elim-terms",    "lax-strict-divergence"};
  return names;
}

Suite make_suite(const std::string& name, const RunOptions& opts) {
  if (name == "flatness") return flatness_suite(opts);
  if (name == "locality") return locality_suite(opts);
  if (name == "union-closure") return union_closure_suite(opts);
  if (name == "empty-team") return empty_team_suite(opts);
  if (name == "strict-implies-lax") return strict_implies_lax_suite(opts);
  if (name == "maxsub-agreement") return maxsub_suite(opts);
  if (name == "prenex") return prenex_suite(opts);
  if (name == "one-forall") return one_forall_suite(opts);
  if (name == "neg-tc") return neg_tc_suite(opts);
  if (name == "elim-terms") return elim_terms_suite(opts);
  if (name == "lax-strict-divergence") return divergence_suite(opts);
  if (name == "mid-properties") return params_suite(name, {{{"m", 1}}, {{"m", 2}}, {{"m", 3}}}, opts);
  if (name == "ef-type") {
    return params_suite(name, {{{"k", 1}, {"m", 1}}, {{"k", 1}, {"m", 2}}, {{"k", 2}, {"m", 1}}}, opts);
  }
  if (name == "swap-closure") {
    std::vector<Json> params;
    for (int m = 1; m <= 3; ++m) params.push_back({{"m", m}, {"n", 32}, {"seed", opts.seed}});
    return params_suite(name, std::move(params), opts);
  }
  throw Error(ErrorKind::Invalid, "unknown property '" + name + "'");
}

CheckReport run_property(const std::string& name, const RunOptions& opts) {
  return run_suite(make_suite(name, opts), opts.seed, opts.workers);
}

CheckReport replay_report(const Json& report) {
  if (!report.is_object() || !report.contains("check")) throw Error(ErrorKind::Parse, "report: missing \"check\"");
  const std::string name = report.at("check").get<std::string>();
  const Checker& check = checker_for(name);
  CheckReport r;
  r.check = name;
  r.seed = report.value("seed", std::uint64_t{0});
  if (!report.contains("counterexample")) return r;
  const Instance inst = instance_from_json(report.at("counterexample"));
  Suite s;
  s.name = name;
  s.size = 1;
  s.check = check;
  s.make = [inst](std::uint64_t) { return inst; };
  return run_suite(s, r.seed, 1);
}

}  // namespace teamlogic
