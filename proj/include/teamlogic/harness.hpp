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

#ifndef TEAMLOGIC_HARNESS_HPP
#define TEAMLOGIC_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "teamlogic/json_io.hpp"
#include "teamlogic/structures.hpp"
#include "teamlogic/syntax.hpp"

namespace teamlogic {

enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);

// One check instance. structures[i] is paired with teams[i]; suites that use
// a single structure for several teams keep one structure. `params` carries
// suite-specific scalars.
struct Instance {
  std::vector<Structure> structures;
  std::vector<Team> teams;
  std::vector<Formula> formulas;
  Json params = Json::object();
};

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

struct Outcome {
  Verdict verdict = Verdict::Pass;
  std::string detail;
  // Narrowed instance to report instead of the whole one, if set.
  std::optional<Instance> narrowed;
};

struct Suite {
  std::string name;
  std::uint64_t size = 0;
  Json config = Json::object();
  std::function<Instance(std::uint64_t index)> make;
  std::function<Outcome(const Instance&)> check;
};

struct CheckReport {
  std::string check;
  Verdict verdict = Verdict::Pass;
  std::uint64_t instances = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t inconclusive = 0;
  std::uint64_t seed = 0;
  Json config = Json::object();
  // First failing (or, without failures, first inconclusive) instance.
  std::optional<std::uint64_t> index;
  std::optional<Instance> counterexample;
  std::string detail;

  // Schema-versioned; no timing fields, so equal runs print equal bytes.
  Json to_json() const;
};

struct RunOptions {
  std::uint64_t seed = 1;
  // Instance count for random suites, cap for enumerated ones.
  std::optional<std::uint64_t> budget;
  unsigned workers = 1;
};

// Runs instances [0, size) on a bounded pool. Worker w takes indices
// congruent to w modulo the pool size; results merge by index, so the report
// does not depend on the pool size.
CheckReport run_suite(const Suite& suite, std::uint64_t seed, unsigned workers);

// Whether c is reachable from b in zero or more steps, where a step
// ā -> ā' holds iff edge_formula(k) is true of (ā, ā') in g.
bool tc_reachability_oracle(const Structure& g, int k, const Tuple& b, const Tuple& c);

struct EquivalenceConfig {
  std::vector<Element> domains{2, 3};
  std::size_t max_team_rows = 3;
  std::uint64_t samples = 200;
  // Enumerate every team up to max_team_rows on `structures_per_domain`
  // random structures per domain size instead of sampling teams.
  bool exhaustive = false;
  std::uint64_t structures_per_domain = 4;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

// Compares lax verdicts of f1 and f2 on sampled (M, X). Teams range over
// the sorted free variables; structures interpret every relation and
// constant symbol of either formula.
CheckReport check_equivalence(const Formula& f1, const Formula& f2, const EquivalenceConfig& cfg);

struct PietronConfig {
  enum class Family { AllDigraphs, RandomGraphs, CliquePaths };
  Family family = Family::AllDigraphs;
  Element max_nodes = 4;        // AllDigraphs
  std::uint64_t graphs = 200;   // RandomGraphs
  Element nodes = 6;            // RandomGraphs
  double edge_prob = 0.3;       // RandomGraphs
  int max_n = 3;                // CliquePaths
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

// Evaluates the ¬TC encoding of edge_formula(k) with the maximal-subteam
// engine on every graph of the family and every constant choice, against
// the negated reachability oracle. Also requires the encoding to use
// inclusion atoms of arity exactly k.
CheckReport check_pietron(int k, const PietronConfig& cfg);

// Known suites: flatness, locality, union-closure, empty-team,
// strict-implies-lax, maxsub-agreement, mid-properties, ef-type,
// swap-closure, prenex, one-forall, neg-tc, elim-terms,
// lax-strict-divergence.
const std::vector<std::string>& property_names();
Suite make_suite(const std::string& name, const RunOptions& opts);
CheckReport run_property(const std::string& name, const RunOptions& opts);

// Re-runs the counterexample embedded in a report on its own. A report
// without a counterexample replays to pass.
CheckReport replay_report(const Json& report);

}  // namespace teamlogic

#endif  // TEAMLOGIC_HARNESS_HPP
