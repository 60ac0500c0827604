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


#ifndef TEAMLOGIC_TRANSFORM_HPP
#define TEAMLOGIC_TRANSFORM_HPP

#include <map>
#include <string>
#include <vector>

#include "teamlogic/syntax.hpp"

namespace teamlogic {

struct TranslationReport {
  std::string pass;
  Formula input;
  Formula output;
  std::vector<std::string> fresh_variables;
  FragmentProfile before;
  FragmentProfile after;
  // Bound variables renamed apart: new name -> original name.
  std::map<std::string, std::string> renamed;
  // prenex only: the u = v / u != v literals added for disjunctions with a
  // universal quantifier on either side.
  std::vector<Formula> selector_literals;
};

// NNF of ¬ψ for first-order ψ; dependency atoms throw ErrorKind::Fragment.
Formula nnf_negate(const Formula& psi);

// Renames every binder whose variable is free in f or bound earlier (in
// left-to-right order) to a fresh name. Renamings are added to `renamed`.
Formula rename_apart(const Formula& f, FreshNames& names, std::map<std::string, std::string>& renamed);

// Quantifiers pulled to the front. Bound variables are renamed apart first.
// ∃ and ∀ move across ∧; ∃ moves across ∨; when either side of a ∨ has a
// universal quantifier the two prefixes are joined behind fresh selectors:
//   P1 θ1 ∨ P2 θ2  ->  ∃u ∃v P1 P2 ((u = v ∧ θ1) ∨ (u != v ∧ θ2))
// which relies on |M| >= 2.
TranslationReport prenex(const Formula& f);

// For a prenex FO(⊆) formula Q1 x1 ... Qn xn θ with z̄ = Fr(φ) sorted:
//   ∃x1 ... ∃xn ∀y (⋀_{Qi = ∀} inc(z̄ x1..x_{i-1} y; z̄ x1..x_{i-1} xi) ∧ θ)
// Unchanged when there is no universal quantifier.
TranslationReport collapse_universals(const Formula& f);

// ∃z̄ (inc(b̄; z̄) ∧ z̄ != c̄ ∧ ∀w̄ (¬ψ(z̄, w̄) ∨ inc(w̄; z̄))), followed by
// eliminate_terms_in_inclusions. b and c name constants.
TranslationReport neg_tc_encoding(const Formula& psi, const std::vector<std::string>& xs,
                                  const std::vector<std::string>& ys,
                                  const std::vector<std::string>& b,
                                  const std::vector<std::string>& c);

// Each inclusion atom mentioning constants c1..cj becomes
//   ∃u1 ... ∃uj (u1 = #c1 ∧ ... ∧ uj = #cj ∧ inc(...)[u/c])
// in place.
TranslationReport eliminate_terms_in_inclusions(const Formula& f);

}  // namespace teamlogic

#endif  // TEAMLOGIC_TRANSFORM_HPP
