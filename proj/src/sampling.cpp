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

#include "teamlogic/sampling.hpp"

#include <algorithm>

#include "teamlogic/error.hpp"
#include "teamlogic/generators.hpp"

namespace teamlogic {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::for_instance(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(seed ^ splitmix64(index)));
}

std::uint64_t Rng::below(std::uint64_t n) {
  require(n > 0, "Rng::below needs a positive bound");
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(gen_()) * n) >> 64);
}

double Rng::unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

std::size_t Rng::weighted(const std::vector<double>& weights) {
  double total = 0;
  for (double w : weights) total += w;
  require(total > 0, "weighted choice needs a positive weight");
  double r = unit() * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (r < weights[i]) return i;
    r -= weights[i];
  }
  // Rounding left r at or just above the last bucket.
  for (std::size_t i = weights.size(); i-- > 0;) {
    if (weights[i] > 0) return i;
  }
  return 0;
}

namespace {

class FormulaSampler {
 public:
  FormulaSampler(Rng& rng, const FormulaConfig& cfg) : rng_(rng), cfg_(cfg) {}

  Formula run() {
    std::vector<std::string> scope = cfg_.free_vars;
    require(!scope.empty() || !cfg_.bound_vars.empty(), "formula sampler needs variables");
    return gen(cfg_.max_depth, scope, 0);
  }

 private:
  Term pick(const std::vector<std::string>& scope) { return Term::var(scope[rng_.below(scope.size())]); }

  Terms picks(const std::vector<std::string>& scope, std::size_t n) {
    Terms out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(pick(scope));
    return out;
  }

  bool quantifier_left() const {
    return cfg_.max_quantifiers < 0 || quantifiers_ < cfg_.max_quantifiers;
  }
  bool universal_left() const {
    return cfg_.allow_universal && (cfg_.max_universals < 0 || universals_ < cfg_.max_universals);
  }

  Formula atom(const std::vector<std::string>& scope) {
    switch (rng_.weighted({cfg_.w_fo, cfg_.w_inc, cfg_.w_dep, cfg_.w_ind})) {
      case 0: {
        Term a = pick(scope), b = pick(scope);
        switch (rng_.below(4)) {
          case 0: return Formula::eq(a, b);
          case 1: return Formula::neq(a, b);
          case 2: return Formula::rel(cfg_.relation, {a, b});
          default: return Formula::neg_rel(cfg_.relation, {a, b});
        }
      }
      case 1: {
        const std::size_t arity = 1 + rng_.below(2);
        Terms lhs = picks(scope, arity);
        return Formula::inc(lhs, picks(scope, arity));
      }
      case 2: {
        Terms antecedent = picks(scope, rng_.below(3));
        return Formula::dep(antecedent, pick(scope));
      }
      default: {
        if (rng_.chance(0.5)) {
          Terms left = picks(scope, 1);
          return Formula::ind(left, picks(scope, 1));
        }
        Terms cond = picks(scope, 1);
        Terms left = picks(scope, 1);
        return Formula::cind(cond, left, picks(scope, 1));
      }
    }
  }

  Formula gen(int depth, const std::vector<std::string>& scope, int level) {
    if (depth <= 0 || scope.empty()) {
      if (scope.empty()) return quantify(depth, scope, level);
      return atom(scope);
    }
    std::vector<double> w{level < cfg_.min_depth ? 0.0 : 0.5, 0.3,
                          quantifier_left() && !cfg_.bound_vars.empty() ? 0.2 : 0.0};
    switch (rng_.weighted(w)) {
      case 0: return atom(scope);
      case 1: {
        Formula l = gen(depth - 1, scope, level + 1);
        Formula r = gen(depth - 1, scope, level + 1);
        return rng_.chance(0.5) ? Formula::conj(l, r) : Formula::disj(l, r);
      }
      default: return quantify(depth, scope, level);
    }
  }

  Formula quantify(int depth, const std::vector<std::string>& scope, int level) {
    require(!cfg_.bound_vars.empty(), "formula sampler needs variables");
    const std::string var = cfg_.bound_vars[rng_.below(cfg_.bound_vars.size())];
    std::vector<std::string> inner = scope;
    if (std::find(inner.begin(), inner.end(), var) == inner.end()) inner.push_back(var);
    const bool universal = universal_left() && rng_.chance(0.5);
    ++quantifiers_;
    if (universal) ++universals_;
    Formula body = gen(std::max(depth - 1, 0), inner, level + 1);
    return universal ? Formula::forall(var, body) : Formula::exists(var, body);
  }

  Rng& rng_;
  const FormulaConfig& cfg_;
  int quantifiers_ = 0;
  int universals_ = 0;
};

}  // namespace

Formula random_formula(Rng& rng, const FormulaConfig& cfg) { return FormulaSampler(rng, cfg).run(); }

Formula random_prenex_sentence(Rng& rng, const PrenexConfig& cfg) {
  require(cfg.min_quantifiers >= 1 && cfg.min_quantifiers <= static_cast<int>(cfg.vars.size()),
          "prenex sampler: bad quantifier range");
  const int n = rng.between(cfg.min_quantifiers, static_cast<int>(cfg.vars.size()));
  std::vector<bool> universal(n, false);
  int universals = 0;
  for (int i = 0; i < n; ++i) {
    if (universals < cfg.max_universals && rng.chance(0.5)) {
      universal[i] = true;
      ++universals;
    }
  }
  FormulaConfig matrix;
  matrix.max_depth = cfg.matrix_depth;
  matrix.free_vars.assign(cfg.vars.begin(), cfg.vars.begin() + n);
  matrix.bound_vars.clear();
  matrix.max_quantifiers = 0;
  matrix.w_fo = 1.0 - cfg.w_inc;
  matrix.w_inc = cfg.w_inc;
  matrix.w_dep = 0.0;
  matrix.relation = cfg.relation;
  Formula f = random_formula(rng, matrix);
  for (int i = n; i-- > 0;) {
    f = universal[i] ? Formula::forall(cfg.vars[i], f) : Formula::exists(cfg.vars[i], f);
  }
  return f;
}

Structure random_structure(Rng& rng, Element domain, const std::string& relation) {
  std::set<Tuple> edges;
  for (Element u = 0; u < domain; ++u) {
    for (Element v = 0; v < domain; ++v) {
      if (rng.chance(0.5)) edges.insert({u, v});
    }
  }
  Signature sig;
  sig.relations[relation] = 2;
  return Structure(sig, domain, {{relation, std::move(edges)}}, {});
}

Structure random_structure(Rng& rng, Element domain, const std::map<std::string, int>& relations,
                           const std::set<std::string>& constants) {
  Signature sig;
  std::map<std::string, std::set<Tuple>> tuples;
  for (const auto& [name, arity] : relations) {
    sig.relations[name] = arity;
    auto& out = tuples[name];
    for (auto& t : all_rows(static_cast<std::size_t>(arity), domain)) {
      if (rng.chance(0.5)) out.insert(std::move(t));
    }
  }
  std::map<std::string, Element> values;
  for (const auto& c : constants) {
    sig.constants.push_back(c);
    values[c] = static_cast<Element>(rng.below(domain));
  }
  return Structure(std::move(sig), domain, std::move(tuples), std::move(values));
}

std::vector<Tuple> all_rows(std::size_t width, Element domain) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < width; ++i) count *= domain;
  std::vector<Tuple> rows(count, Tuple(width));
  for (std::size_t r = 0; r < count; ++r) {
    std::size_t code = r;
    for (std::size_t i = width; i-- > 0;) {
      rows[r][i] = static_cast<Element>(code % domain);
      code /= domain;
    }
  }
  return rows;
}

Team random_team(Rng& rng, const std::vector<std::string>& vars, Element domain, std::size_t max_rows) {
  require(max_rows >= 1, "random_team needs max_rows >= 1");
  const std::size_t n = 1 + rng.below(max_rows);
  std::vector<Tuple> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Tuple t(vars.size());
    for (auto& v : t) v = static_cast<Element>(rng.below(domain));
    rows.push_back(std::move(t));
  }
  if (vars.empty()) return Team::unit();
  return Team(vars, std::move(rows));
}

void for_each_team(const std::vector<std::string>& vars, Element domain, std::size_t max_rows,
                   const std::function<void(const Team&)>& visit) {
  const std::vector<Tuple> rows = all_rows(vars.size(), domain);
  const std::size_t limit = std::min(max_rows, rows.size());
  std::vector<std::size_t> pick;
  for (std::size_t size = 0; size <= limit; ++size) {
    pick.resize(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<Tuple> chosen;
      for (std::size_t i : pick) chosen.push_back(rows[i]);
      if (vars.empty()) {
        visit(size == 0 ? Team() : Team::unit());
      } else {
        visit(Team(vars, std::move(chosen)));
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == rows.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

std::vector<Structure> all_digraphs(Element nodes, const std::string& relation) {
  const std::size_t pairs = static_cast<std::size_t>(nodes) * nodes;
  require(pairs < 20, "all_digraphs: too many nodes");
  Signature sig;
  sig.relations[relation] = 2;
  std::vector<Structure> out;
  for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
    std::set<Tuple> edges;
    for (std::size_t p = 0; p < pairs; ++p) {
      if (mask >> p & 1) edges.insert({static_cast<Element>(p / nodes), static_cast<Element>(p % nodes)});
    }
    out.emplace_back(sig, nodes, std::map<std::string, std::set<Tuple>>{{relation, std::move(edges)}},
                     std::map<std::string, Element>{});
  }
  return out;
}

std::vector<Formula> enumerate_formulas(const std::vector<Formula>& atoms,
                                        const std::vector<std::pair<NodeKind, std::string>>& quantifiers,
                                        int max_depth) {
  std::vector<Formula> all = atoms;
  std::size_t last_begin = 0;
  for (int d = 1; d <= max_depth; ++d) {
    const std::size_t prev_end = all.size();
    for (std::size_t j = last_begin; j < prev_end; ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        all.push_back(Formula::conj(all[i], all[j]));
        all.push_back(Formula::disj(all[i], all[j]));
      }
    }
    for (std::size_t j = last_begin; j < prev_end; ++j) {
      for (const auto& [kind, var] : quantifiers) {
        all.push_back(kind == NodeKind::Exists ? Formula::exists(var, all[j]) : Formula::forall(var, all[j]));
      }
    }
    last_begin = prev_end;
  }
  return all;
}

}  // namespace teamlogic
