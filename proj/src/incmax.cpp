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


#include "teamlogic/incmax.hpp"

#include <algorithm>
#include <unordered_set>

#include "teamlogic/error.hpp"
#include "teamlogic/evaluator.hpp"

namespace teamlogic {

namespace {

struct TupleHash {
  std::size_t operator()(const Tuple& t) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Element e : t) h = (h ^ e) * 0x100000001b3ULL;
    return h;
  }
};

Tuple project(const Structure& m, const Team& t, std::size_t row, const Terms& ts) {
  Tuple out;
  out.reserve(ts.size());
  for (const auto& term : ts) {
    out.push_back(term.is_var() ? t.row(row)[t.column_or_throw(term.name)] : m.constant(term.name));
  }
  return out;
}

class Solver {
 public:
  Solver(const Structure& m, IncmaxStats& stats) : m_(m), stats_(stats) {}

  Team solve(const Team& x, const Formula& f) {
    stats_.max_rows = std::max<std::uint64_t>(stats_.max_rows, x.size());
    if (x.empty()) return x;
    if (f.is_literal()) return filter_literal(x, f);
    switch (f.kind()) {
      case NodeKind::Inc:
        return inclusion_fixpoint(x, f);
      case NodeKind::Or:
        return team_union(solve(x, f.lhs()), solve(x, f.rhs()));
      case NodeKind::And:
        return iterate(x, [&](const Team& y) { return solve(solve(y, f.lhs()), f.rhs()); });
      case NodeKind::Exists:
        return solve_exists(x, f);
      case NodeKind::Forall:
        return iterate(x, [&](const Team& y) { return keep_total(y, f); });
      default:
        throw Error(ErrorKind::Fragment, "fragment violation: " + to_string(f.kind()) +
                                             " is not an inclusion-logic atom");
    }
  }

 private:
  Team filter_literal(const Team& x, const Formula& f) {
    std::vector<bool> keep(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) keep[i] = eval_fo(m_, x.assignment(i), f);
    return x.select(keep);
  }

  // Greatest fixpoint of deleting rows whose left tuple has no partner
  // among the surviving right tuples. Sweeps are synchronous: deletions
  // found in one sweep are applied together.
  Team inclusion_fixpoint(const Team& x, const Formula& f) {
    const std::size_t n = x.size();
    std::vector<Tuple> lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      lhs[i] = project(m_, x, i, f.groups()[0]);
      rhs[i] = project(m_, x, i, f.groups()[1]);
    }
    std::vector<bool> alive(n, true);
    for (std::size_t sweep = 1;; ++sweep) {
      if (sweep > n + 1) fail("internal: inclusion fixpoint exceeded |X|+1 sweeps");
      ++stats_.sweeps;
      std::unordered_set<Tuple, TupleHash> available;
      for (std::size_t i = 0; i < n; ++i) {
        if (alive[i]) available.insert(rhs[i]);
      }
      std::vector<std::size_t> doomed;
      for (std::size_t i = 0; i < n; ++i) {
        if (alive[i] && available.count(lhs[i]) == 0) doomed.push_back(i);
      }
      if (doomed.empty()) break;
      for (std::size_t i : doomed) alive[i] = false;
    }
    return x.select(alive);
  }

  template <typename Step>
  Team iterate(const Team& x, Step step) {
    Team y = x;
    for (std::size_t round = 1;; ++round) {
      if (round > x.size() + 1) fail("internal: fixpoint exceeded |X|+1 rounds");
      ++stats_.outer_iterations;
      Team next = step(y);
      if (next == y) return y;
      y = std::move(next);
    }
  }

  // Row s survives if some s(a/x) is in the maximal subteam of X[M/x].
  Team solve_exists(const Team& x, const Formula& f) {
    const Team ext = rebind_all(x, f.symbol(), m_.domain_size());
    const Team best = solve(ext, f.body());
    std::vector<bool> keep(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (Element a = 0; a < m_.domain_size() && !keep[i]; ++a) {
        keep[i] = best.contains(extended_row(x, i, f.symbol(), a));
      }
    }
    return x.select(keep);
  }

  // Rows all of whose extensions survive in the maximal subteam of Y[M/x].
  Team keep_total(const Team& y, const Formula& f) {
    const Team ext = rebind_all(y, f.symbol(), m_.domain_size());
    const Team best = solve(ext, f.body());
    std::vector<bool> keep(y.size(), true);
    for (std::size_t i = 0; i < y.size(); ++i) {
      for (Element a = 0; a < m_.domain_size() && keep[i]; ++a) {
        keep[i] = best.contains(extended_row(y, i, f.symbol(), a));
      }
    }
    return y.select(keep);
  }

  static Tuple extended_row(const Team& t, std::size_t i, const std::string& var, Element a) {
    Tuple r = t.row_tuple(i);
    if (auto col = t.column(var)) {
      r[*col] = a;
    } else {
      r.push_back(a);
    }
    return r;
  }

  const Structure& m_;
  IncmaxStats& stats_;
};

}  // namespace

Team max_subteam(const Structure& m, const Team& team, const Formula& f, IncmaxStats* stats) {
  if (!is_inclusion_fragment(f)) {
    throw Error(ErrorKind::Fragment,
                "fragment violation: maximal subteams need an inclusion-logic formula");
  }
  for (const auto& v : free_variables(f)) {
    require(team.has_var(v), "free variable '" + v + "' is not in the team domain");
  }
  for (const auto& c : constant_symbols(f)) {
    require(m.has_constant(c), "constant '#" + c + "' is not interpreted by the structure");
  }
  IncmaxStats local;
  Solver solver(m, stats ? *stats : local);
  return solver.solve(team, f);
}

bool eval_inclusion(const Structure& m, const Team& team, const Formula& f, IncmaxStats* stats) {
  return max_subteam(m, team, f, stats) == team;
}

}  // namespace teamlogic
