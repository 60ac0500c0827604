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


#ifndef TEAMLOGIC_GADGETS_HPP
#define TEAMLOGIC_GADGETS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "teamlogic/structures.hpp"

namespace teamlogic {

// Element -> row (1-based) for a generated two-path or clique-path structure.
struct RowMap {
  int n = 0;
  std::vector<int> row;

  explicit RowMap(const Structure& s);
  int operator()(Element e) const { return row.at(e); }
};

// Bounds after `round` inputs have been consumed.
struct MidState {
  int lower = 1;  // M
  int upper = 1;  // N
  int round = 0;
  std::vector<int> prefix;
};

// The interval-halving midpoint for row sequence p (m = |p|) on n rows.
// Needs n >= 2^{m+2}; the result lies strictly between 1 and n, avoids every
// p_i, and which side of it p_i falls on depends only on p_1..p_i.
// `trace`, when given, receives the state after each round.
int mid(const std::vector<int>& p, int n, std::vector<MidState>* trace = nullptr);

// h: values on rows below `midpoint` are kept, values above are mapped
// through ε. A value on the midpoint row is an error.
Tuple h_swap(std::span<const Element> s, const std::vector<Element>& epsilon, const RowMap& rows,
             int midpoint);

// {h(s) | s ∈ Z}, each s using mid(row(s(x̄))).
Team swap_team(const Team& z, const Structure& s);

// Sorted positive atomic facts over the terms "s's variables, then the
// structure's constants in name order": relation facts R(t1,...) and
// equalities t = t' (t before t' in term order).
std::vector<std::string> atomic_type(const Structure& m, const Assignment& s);

struct SweepResult {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::optional<std::string> first_violation;

  bool ok() const { return violations == 0; }
  void violation(std::string what) {
    ++violations;
    if (!first_violation) first_violation = std::move(what);
  }
};

// Properties 1 to 3 of mid over all of {1..n}^m, n = 2^{m+2}.
SweepResult verify_mid_properties(int m);

// atomic_type((A, b, c), s) == atomic_type((A, b, ε(c)), h(s)) for every
// assignment s of m variables into A = two_path_structure(k, 2^{m+2}).
SweepResult verify_ef_types(int k, int m);

// Checks the ∀-closure claim on one team X over x1..xm built by the
// quantifier prefix `universal` (true = ∀): for every ∀ position p, every
// s ∈ swap(X)↾{x1..x_{p-1}} and every a, s(a/x_p) ∈ swap(X)↾{x1..x_p}.
SweepResult check_swap_closure(const Structure& a, const Team& x, const std::vector<bool>& universal);

// Builds X = {∅}[F1/x1]...[Fm/xm] for every prefix in {∃,∀}^m and every
// choice of ∃ witness function from a fixed deterministic family, and runs
// check_swap_closure on each. Uses A = two_path_structure(1, n).
SweepResult verify_swap_closure(int m, int n, std::uint64_t seed);

}  // namespace teamlogic

#endif  // TEAMLOGIC_GADGETS_HPP
