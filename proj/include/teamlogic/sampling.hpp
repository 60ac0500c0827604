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

#ifndef TEAMLOGIC_SAMPLING_HPP
#define TEAMLOGIC_SAMPLING_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "teamlogic/structures.hpp"
#include "teamlogic/syntax.hpp"

namespace teamlogic {

// std::mt19937_64 behind helpers that do not depend on the standard
// library's distribution implementations, so streams are portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // Seed for instance `index` of a run seeded with `seed`:
  // splitmix64(seed ^ splitmix64(index)).
  static Rng for_instance(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return gen_(); }
  // Uniform in [0, n) by the multiply-shift reduction; n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  // Top 53 bits as a double in [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }
  // Index drawn proportionally to nonnegative weights (not all zero).
  std::size_t weighted(const std::vector<double>& weights);

 private:
  std::mt19937_64 gen_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Formula sampler. Nodes are atoms with probability 1/2, binary
// connectives 3/10 and quantifiers 1/5 until the depth cap forces an atom.
// The top `min_depth` levels leave out atoms (connectives and quantifiers
// keep their 3:2 ratio). The atom mass is split by the weights below.
struct FormulaConfig {
  int max_depth = 3;
  int min_depth = 0;
  std::vector<std::string> free_vars{"x", "y"};
  // Names quantifiers bind. Binding a free name shadows it.
  std::vector<std::string> bound_vars{"z", "w"};
  int max_quantifiers = -1;  // -1: unlimited
  int max_universals = -1;
  bool allow_universal = true;
  double w_fo = 0.4;   // x = y, x != y, E(x, y), ¬E(x, y)
  double w_inc = 0.4;  // unary or binary inclusion
  double w_dep = 0.2;
  double w_ind = 0.0;  // unary independence and conditional independence
  std::string relation = "E";  // binary
};

Formula random_formula(Rng& rng, const FormulaConfig& cfg);

// Q1 v1 ... Qn vn θ with quantifier-free θ over the given variables.
struct PrenexConfig {
  std::vector<std::string> vars{"x1", "x2", "x3"};
  int min_quantifiers = 1;
  int max_universals = 2;
  int matrix_depth = 2;
  double w_inc = 0.5;  // rest first-order literals
  std::string relation = "E";
};

Formula random_prenex_sentence(Rng& rng, const PrenexConfig& cfg);

// Digraph with relation "E" on `domain` elements, each edge kept with
// probability 1/2.
Structure random_structure(Rng& rng, Element domain, const std::string& relation = "E");
// Every tuple of every listed relation kept with probability 1/2; each
// constant drawn uniformly.
Structure random_structure(Rng& rng, Element domain, const std::map<std::string, int>& relations,
                           const std::set<std::string>& constants);

// Up to `max_rows` rows drawn uniformly from M^vars, at least one.
Team random_team(Rng& rng, const std::vector<std::string>& vars, Element domain, std::size_t max_rows);

// Every tuple of M^vars in lexicographic order.
std::vector<Tuple> all_rows(std::size_t width, Element domain);

// Calls visit on every team over `vars` with at most max_rows rows,
// including the empty team, by increasing size.
void for_each_team(const std::vector<std::string>& vars, Element domain, std::size_t max_rows,
                   const std::function<void(const Team&)>& visit);

// All digraphs on `nodes` elements (loops included), in the order of the
// bitmask over row-major pairs.
std::vector<Structure> all_digraphs(Element nodes, const std::string& relation = "E");

// Formulas of depth at most max_depth built from `atoms` with ∧, ∨ and the
// listed quantifiers (kind Exists or Forall paired with a variable name).
// Commutative duplicates are skipped: a ∧ b and a ∨ b only for
// index(a) <= index(b) within the enumeration.
std::vector<Formula> enumerate_formulas(const std::vector<Formula>& atoms,
                                        const std::vector<std::pair<NodeKind, std::string>>& quantifiers,
                                        int max_depth);

}  // namespace teamlogic

#endif  // TEAMLOGIC_SAMPLING_HPP
