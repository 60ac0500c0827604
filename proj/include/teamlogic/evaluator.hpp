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

#ifndef TEAMLOGIC_EVALUATOR_HPP
#define TEAMLOGIC_EVALUATOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "teamlogic/structures.hpp"
#include "teamlogic/syntax.hpp"

namespace teamlogic {

enum class Semantics { Lax, Strict };

struct Budget {
  std::uint64_t max_rows = 1u << 16;              // largest intermediate team
  std::uint64_t max_enumerations = 20'000'000;    // candidate subteams/witnesses tried
  std::uint64_t max_memo_entries = 1u << 20;      // memo is dropped when it reaches this size
};

struct EvalOptions {
  Semantics semantics = Semantics::Lax;
  Budget budget;
  // Lax only: evaluate each subformula on the team restricted to its free
  // variables. Sound because lax semantics is local.
  bool locality_pruning = true;
  // Evaluate first-order subformulas row by row (flatness).
  bool flat_pruning = true;
  // For subformulas without inclusion/independence atoms, search only
  // partitions and single-valued witnesses (downward closure).
  bool closure_pruning = true;
  // Lax only: decide ∨ and ∃ nodes whose operands are in the inclusion
  // fragment through maximal subteams (union closure). Off when the
  // evaluator serves as the independent oracle for max_subteam.
  bool union_pruning = true;
  // Lax only: variables compared solely with each other by = and != get
  // witnesses drawn from the row's existing values of such variables plus
  // one fresh element.
  bool symmetry_pruning = true;
  // Lax only: a quantifier block over a disjunction whose sides carry
  // mutually exclusive first-order guards not bound by the block is
  // evaluated separately on the rows selected by each guard. Skipped while
  // building a trace.
  bool guard_splitting = true;
  // Lax only: move quantifiers inward where lax semantics allows it (∃ over
  // ∨, ∀ over ∧, past conjuncts without the bound variable). Skipped while
  // building a trace.
  bool quantifier_distribution = true;
  // Read the conditional independence clause as literally printed
  // (s(x1) = s'(x2) in the premise) instead of the standard s(x1) = s'(x1).
  bool literal_cind = false;
  bool want_trace = false;
};

struct EvalStats {
  std::uint64_t enumerations = 0;
  std::uint64_t max_rows = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t memo_entries = 0;
};

// The team each subformula was satisfied on. `aux` holds the choices made at
// the node: the subteams Y, Z for ∨, and X[F/x] or X[M/x] for ∃ and ∀. Child
// teams may be restrictions of those to the child's free variables. A
// first-order node settled row by row has no children.
struct Witness {
  NodeKind kind = NodeKind::Rel;
  Team team;
  std::vector<Team> aux;
  std::vector<Witness> children;
};

struct EvalResult {
  bool verdict = false;
  std::optional<Witness> trace;
  EvalStats stats;
};

// Tarski semantics; rejects dependency atoms.
bool eval_fo(const Structure& m, const Assignment& s, const Formula& f);

EvalResult eval_lax(const Structure& m, const Team& team, const Formula& f, EvalOptions opts = {});
EvalResult eval_strict(const Structure& m, const Team& team, const Formula& f,
                       EvalOptions opts = {});
// Dispatches on opts.semantics.
EvalResult evaluate(const Structure& m, const Team& team, const Formula& f, const EvalOptions& opts);

// Checks a witness tree bottom-up without any search: atoms are tested on
// the recorded teams and every split/extension is checked for legality.
bool replay_witness(const Structure& m, const Formula& f, const Witness& w,
                    Semantics semantics = Semantics::Lax, bool literal_cind = false);

// Single dependency atom or literal on a team (no search involved).
bool eval_atom(const Structure& m, const Team& team, const Formula& atom, bool literal_cind = false);

}  // namespace teamlogic

#endif  // TEAMLOGIC_EVALUATOR_HPP
