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

#ifndef TEAMLOGIC_SYNTAX_HPP
#define TEAMLOGIC_SYNTAX_HPP

#include <compare>
#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace teamlogic {

// A term is a variable or a constant symbol; there are no function symbols.
struct Term {
  enum class Kind { Var, Const };
  Kind kind = Kind::Var;
  std::string name;

  static Term var(std::string name) { return {Kind::Var, std::move(name)}; }
  static Term constant(std::string name) { return {Kind::Const, std::move(name)}; }
  bool is_var() const { return kind == Kind::Var; }

  auto operator<=>(const Term&) const = default;
};

using Terms = std::vector<Term>;

Terms vars(const std::vector<std::string>& names);

enum class NodeKind { Rel, NegRel, Eq, Neq, Inc, Dep, CInd, Ind, And, Or, Exists, Forall };

// Negation-normal-form formula. Negation appears only on relational atoms
// (NegRel) and equalities (Neq). Immutable, cheap to copy.
//
// Argument groups per kind:
//   Rel/NegRel  {terms}
//   Eq/Neq      {{lhs}, {rhs}}
//   Inc         {lhs, rhs}               equal lengths
//   Dep         {antecedent, {consequent}}
//   CInd        {condition, left, right}
//   Ind         {left, right}
class Formula {
 public:
  static Formula rel(std::string name, Terms args);
  static Formula neg_rel(std::string name, Terms args);
  static Formula eq(Term lhs, Term rhs);
  static Formula neq(Term lhs, Term rhs);
  static Formula inc(Terms lhs, Terms rhs);
  static Formula dep(Terms antecedent, Term consequent);
  static Formula cind(Terms condition, Terms left, Terms right);
  static Formula ind(Terms left, Terms right);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);

  // Left-nested conjunction; `parts` must be nonempty.
  static Formula conj_all(std::vector<Formula> parts);
  static Formula disj_all(std::vector<Formula> parts);

  NodeKind kind() const;
  const std::string& symbol() const;  // relation name, or bound variable
  const std::vector<Terms>& groups() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& body() const;

  bool is_literal() const;     // Rel, NegRel, Eq, Neq
  bool is_dependency() const;  // Inc, Dep, CInd, Ind
  bool is_atom() const { return is_literal() || is_dependency(); }
  bool is_quantifier() const;
  bool is_binary() const;

  // Stable address of the shared node; usable as a memo key while the
  // formula is alive.
  const void* id() const { return node_.get(); }

  bool operator==(const Formula& other) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> free_variables(const Formula& f);
// Every variable name occurring anywhere, bound or free.
std::set<std::string> all_variables(const Formula& f);
std::set<std::string> constant_symbols(const Formula& f);
// Relation name -> arity, as used in the formula.
std::map<std::string, int> relation_symbols(const Formula& f);

bool is_first_order(const Formula& f);
// First-order literals, inclusion atoms and the connectives/quantifiers.
bool is_inclusion_fragment(const Formula& f);
// No inclusion or independence atoms: downward closed under lax semantics.
bool is_downward_closed(const Formula& f);
bool is_quantifier_free(const Formula& f);
bool is_prenex(const Formula& f);
// Inclusion atoms over variables only.
bool inclusion_args_are_variables(const Formula& f);

// Atoms have depth 0; each connective or quantifier adds one.
int depth(const Formula& f);
std::size_t node_count(const Formula& f);

// Replaces free occurrences of variables. The caller guarantees that no
// replacement variable is captured by a binder of `f`.
Formula substitute(const Formula& f, const std::map<std::string, Term>& subst);

// Atoms (literals and dependency atoms) in left-to-right order.
std::vector<Formula> atoms(const Formula& f);

struct FragmentProfile {
  int forall_count = 0;
  int max_inc_arity = 0;
  int max_dep_arity = 0;
  int max_ind_distinct_vars = 0;
  std::set<std::string> atoms_used;

  bool operator==(const FragmentProfile&) const = default;
};

FragmentProfile classify(const Formula& f);

// ⋀_{i,j} E(x_i, y_j) ∧ ⋀_{i≠j} (E(x_i, x_j) ∧ E(y_i, y_j)).
Formula edge_formula(int k, const std::vector<std::string>& xs,
                     const std::vector<std::string>& ys, const std::string& relation = "E");

// Deterministic fresh names: base followed by the smallest counter value
// that does not collide with anything reserved so far.
class FreshNames {
 public:
  FreshNames() = default;
  explicit FreshNames(std::set<std::string> reserved) : used_(std::move(reserved)) {}

  void reserve(const std::string& name) { used_.insert(name); }
  void reserve_all(const std::set<std::string>& names) { used_.insert(names.begin(), names.end()); }
  bool taken(const std::string& name) const { return used_.count(name) != 0; }
  std::string fresh(const std::string& base);
  const std::vector<std::string>& introduced() const { return introduced_; }

 private:
  std::set<std::string> used_;
  std::map<std::string, int> counters_;
  std::vector<std::string> introduced_;
};

Formula parse(std::string_view text);
std::string render(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

std::string to_string(NodeKind kind);

}  // namespace teamlogic

#endif  // TEAMLOGIC_SYNTAX_HPP
