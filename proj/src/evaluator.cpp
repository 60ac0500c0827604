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

#include "teamlogic/evaluator.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "teamlogic/error.hpp"
#include "teamlogic/incmax.hpp"

namespace teamlogic {

namespace {

struct TermRef {
  bool constant = false;
  std::size_t col = 0;
  Element value = 0;
};

TermRef resolve(const Structure& m, const Team& t, const Term& term) {
  if (!term.is_var()) return {true, 0, m.constant(term.name)};
  return {false, t.column_or_throw(term.name), 0};
}

std::vector<TermRef> resolve_all(const Structure& m, const Team& t, const Terms& ts) {
  std::vector<TermRef> out;
  out.reserve(ts.size());
  for (const auto& term : ts) out.push_back(resolve(m, t, term));
  return out;
}

inline Element value_of(const TermRef& r, std::span<const Element> row) {
  return r.constant ? r.value : row[r.col];
}

void project(const std::vector<TermRef>& refs, std::span<const Element> row, Tuple& out) {
  out.clear();
  for (const auto& r : refs) out.push_back(value_of(r, row));
}

std::vector<Tuple> projected_rows(const std::vector<TermRef>& refs, const Team& t) {
  std::vector<Tuple> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) project(refs, t.row(i), out[i]);
  return out;
}

bool eval_cind(const Structure& m, const Team& t, const Terms& cond, const Terms& left,
               const Terms& right, bool literal) {
  const auto rc = projected_rows(resolve_all(m, t, cond), t);
  const auto rl = projected_rows(resolve_all(m, t, left), t);
  const auto rr = projected_rows(resolve_all(m, t, right), t);
  std::set<std::tuple<Tuple, Tuple, Tuple>> present;
  for (std::size_t i = 0; i < t.size(); ++i) present.emplace(rc[i], rl[i], rr[i]);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      const bool premise = literal ? rc[i] == rl[j] : rc[i] == rc[j];
      if (premise && present.count({rc[i], rl[i], rr[j]}) == 0) return false;
    }
  }
  return true;
}

}  // namespace

bool eval_atom(const Structure& m, const Team& t, const Formula& f, bool literal_cind) {
  const auto& g = f.groups();
  switch (f.kind()) {
    case NodeKind::Rel:
    case NodeKind::NegRel: {
      const bool positive = f.kind() == NodeKind::Rel;
      const auto refs = resolve_all(m, t, g[0]);
      Tuple args;
      for (std::size_t i = 0; i < t.size(); ++i) {
        project(refs, t.row(i), args);
        if (m.holds(f.symbol(), args) != positive) return false;
      }
      return true;
    }
    case NodeKind::Eq:
    case NodeKind::Neq: {
      const bool positive = f.kind() == NodeKind::Eq;
      const TermRef a = resolve(m, t, g[0][0]);
      const TermRef b = resolve(m, t, g[1][0]);
      for (std::size_t i = 0; i < t.size(); ++i) {
        if ((value_of(a, t.row(i)) == value_of(b, t.row(i))) != positive) return false;
      }
      return true;
    }
    case NodeKind::Inc: {
      auto lhs = projected_rows(resolve_all(m, t, g[0]), t);
      auto rhs = projected_rows(resolve_all(m, t, g[1]), t);
      std::sort(rhs.begin(), rhs.end());
      for (const auto& v : lhs) {
        if (!std::binary_search(rhs.begin(), rhs.end(), v)) return false;
      }
      return true;
    }
    case NodeKind::Dep: {
      const auto ante = projected_rows(resolve_all(m, t, g[0]), t);
      const TermRef cons = resolve(m, t, g[1][0]);
      std::map<Tuple, Element> seen;
      for (std::size_t i = 0; i < t.size(); ++i) {
        auto [it, inserted] = seen.emplace(ante[i], value_of(cons, t.row(i)));
        if (!inserted && it->second != value_of(cons, t.row(i))) return false;
      }
      return true;
    }
    case NodeKind::CInd:
      return eval_cind(m, t, g[0], g[1], g[2], literal_cind);
    case NodeKind::Ind:
      return eval_cind(m, t, {}, g[0], g[1], false);
    default:
      fail("eval_atom called on a compound formula");
  }
}

bool eval_fo(const Structure& m, const Assignment& s, const Formula& f) {
  auto term_value = [&](const Term& t) { return t.is_var() ? s.at(t.name) : m.constant(t.name); };
  switch (f.kind()) {
    case NodeKind::Rel:
    case NodeKind::NegRel: {
      Tuple args;
      for (const auto& t : f.groups()[0]) args.push_back(term_value(t));
      return m.holds(f.symbol(), args) == (f.kind() == NodeKind::Rel);
    }
    case NodeKind::Eq:
      return term_value(f.groups()[0][0]) == term_value(f.groups()[1][0]);
    case NodeKind::Neq:
      return term_value(f.groups()[0][0]) != term_value(f.groups()[1][0]);
    case NodeKind::And:
      return eval_fo(m, s, f.lhs()) && eval_fo(m, s, f.rhs());
    case NodeKind::Or:
      return eval_fo(m, s, f.lhs()) || eval_fo(m, s, f.rhs());
    case NodeKind::Exists:
      for (Element a = 0; a < m.domain_size(); ++a) {
        if (eval_fo(m, s.with(f.symbol(), a), f.body())) return true;
      }
      return false;
    case NodeKind::Forall:
      for (Element a = 0; a < m.domain_size(); ++a) {
        if (!eval_fo(m, s.with(f.symbol(), a), f.body())) return false;
      }
      return true;
    default:
      throw Error(ErrorKind::Fragment,
                  "dependency atom " + to_string(f.kind()) + " has no Tarski semantics");
  }
}

namespace {

struct MemoKey {
  const void* node;
  Team team;
  bool operator==(const MemoKey& o) const { return node == o.node && team == o.team; }
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const {
    return std::hash<const void*>{}(k.node) ^ (k.team.hash() * 0x9e3779b97f4a7c15ULL);
  }
};

// Team obtained from `t` by giving row i the value choice[i] for `var`
// (overwriting the column when var is already bound).
class Extender {
 public:
  Extender(const Team& t, const std::string& var) : t_(t), col_(t.column(var)) {
    vars_ = t.vars();
    if (!col_) vars_.push_back(var);
  }

  void append(std::vector<Element>& data, std::size_t row, Element value) const {
    auto r = t_.row(row);
    data.insert(data.end(), r.begin(), r.end());
    if (col_) {
      data[data.size() - vars_.size() + *col_] = value;
    } else {
      data.push_back(value);
    }
  }

  const std::vector<std::string>& vars() const { return vars_; }

  Team build(std::vector<Element> data, std::size_t rows) const {
    return Team::from_flat(vars_, std::move(data), rows);
  }

 private:
  const Team& t_;
  std::optional<std::size_t> col_;
  std::vector<std::string> vars_;
};

class Engine {
 public:
  Engine(const Structure& m, const EvalOptions& opts, const Formula& root) : m_(m), o_(opts) {
    find_symmetric_names(root);
  }

  bool eval(const Formula& f, const Team& team, Witness* w) {
    const Info& inf = info(f);
    const Team* tp = &team;
    Team restricted;
    if (lax() && o_.locality_pruning && team.width() > inf.free.size()) {
      restricted = restrict_team(team, inf.free);
      tp = &restricted;
    }
    const Team& t = *tp;
    note_rows(t);

    if (w == nullptr) {
      auto it = memo_.find(MemoKey{f.id(), t});
      if (it != memo_.end()) {
        ++stats.memo_hits;
        return it->second;
      }
    }

    bool result;
    std::optional<bool> split;
    if (w == nullptr && lax() && o_.quantifier_distribution && f.is_quantifier()) {
      if (const auto* g = distributed(f)) split = eval(*g, t, nullptr);
    }
    if (!split && w == nullptr && lax() && o_.guard_splitting && f.is_quantifier()) split = try_guard_split(f, t);
    if (split) {
      result = *split;
    } else if (f.is_atom()) {
      result = eval_atom(m_, t, f, o_.literal_cind);
    } else if (o_.flat_pruning && inf.fo) {
      result = eval_rowwise(f, t);
    } else {
      switch (f.kind()) {
        case NodeKind::And: {
          Witness* wl = child(w);
          result = eval(f.lhs(), t, wl);
          if (result) result = eval(f.rhs(), t, child(w));
          break;
        }
        case NodeKind::Or:
          result = lax() ? eval_or_lax(f, t, w) : eval_or_strict(f, t, w);
          break;
        case NodeKind::Exists:
          result = eval_exists(f, t, w);
          break;
        case NodeKind::Forall: {
          Team ext = rebind_all(t, f.symbol(), m_.domain_size());
          if (w) w->aux.push_back(ext);
          result = eval(f.body(), ext, child(w));
          break;
        }
        default:
          fail("unexpected node kind");
      }
    }

    if (w == nullptr) {
      if (memo_.size() >= o_.budget.max_memo_entries) memo_.clear();
      memo_.emplace(MemoKey{f.id(), t}, result);
      stats.memo_entries = memo_.size();
    } else {
      w->kind = f.kind();
      w->team = t;
    }
    return result;
  }

  // Witness nodes under construction carry the auxiliary teams (splits and
  // extensions) separately from the children.
  struct WitnessBuilder;

  EvalStats stats;

 private:
  struct Info {
    std::vector<std::string> free;
    bool fo = false;
    bool dc = false;
    bool uc = false;  // inclusion fragment, hence union closed
  };

  const Info& info(const Formula& f) {
    auto it = info_.find(f.id());
    if (it != info_.end()) return it->second;
    Info inf;
    auto fv = free_variables(f);
    inf.free.assign(fv.begin(), fv.end());
    inf.fo = is_first_order(f);
    inf.dc = is_downward_closed(f);
    inf.uc = is_inclusion_fragment(f);
    return info_.emplace(f.id(), std::move(inf)).first->second;
  }

  bool lax() const { return o_.semantics == Semantics::Lax; }

  void tick() {
    if (++stats.enumerations > o_.budget.max_enumerations) {
      throw Error(ErrorKind::ResourceLimit, "resource limit: more than " +
                                                std::to_string(o_.budget.max_enumerations) +
                                                " candidate subteams enumerated");
    }
  }

  void note_rows(const Team& t) {
    stats.max_rows = std::max<std::uint64_t>(stats.max_rows, t.size());
    if (t.size() > o_.budget.max_rows) {
      throw Error(ErrorKind::ResourceLimit, "resource limit: intermediate team has " +
                                                std::to_string(t.size()) + " rows");
    }
  }

  void require_small(const Team& t) {
    if (t.size() > 62) {
      throw Error(ErrorKind::ResourceLimit,
                  "resource limit: team of " + std::to_string(t.size()) + " rows is too large to split");
    }
  }

  static Witness* child(Witness* w) {
    if (w == nullptr) return nullptr;
    w->children.emplace_back();
    return &w->children.back();
  }

  bool eval_rowwise(const Formula& f, const Team& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!eval_fo(m_, t.assignment(i), f)) return false;
    }
    return true;
  }

  // Fills the witness for a successful split.
  bool finish_split(const Formula& f, const Team& y, const Team& z, Witness* w) {
    if (w == nullptr) return true;
    w->aux = {y, z};
    const bool ok = eval(f.lhs(), y, child(w)) && eval(f.rhs(), z, child(w));
    if (!ok) fail("internal: witness reconstruction disagrees with search");
    return true;
  }

  // Both disjuncts downward closed: a partition suffices, and every row must
  // satisfy one side on its own.
  bool split_partition_dfs(const Formula& f, const Team& t, Witness* w) {
    const std::size_t n = t.size();
    std::vector<char> okl(n), okr(n);
    for (std::size_t i = 0; i < n; ++i) {
      Team single = t.select_mask(std::uint64_t{1} << i);
      tick();
      okl[i] = eval(f.lhs(), single, nullptr);
      okr[i] = eval(f.rhs(), single, nullptr);
      if (!okl[i] && !okr[i]) return false;
    }
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::function<bool(std::size_t, std::uint64_t)> dfs = [&](std::size_t i, std::uint64_t ymask) {
      if (i == n) {
        return finish_split(f, t.select_mask(ymask), t.select_mask(full & ~ymask), w);
      }
      const std::uint64_t bit = std::uint64_t{1} << i;
      const std::uint64_t below = bit - 1;
      if (okl[i]) {
        tick();
        if (eval(f.lhs(), t.select_mask(ymask | bit), nullptr) && dfs(i + 1, ymask | bit)) return true;
      }
      if (okr[i]) {
        tick();
        const std::uint64_t zmask = (below & ~ymask) | bit;
        if (eval(f.rhs(), t.select_mask(zmask), nullptr) && dfs(i + 1, ymask)) return true;
      }
      return false;
    };
    return dfs(0, 0);
  }

  // Rows allowed on a side: those satisfying every first-order top-level
  // conjunct of that disjunct (flatness makes this necessary).
  std::vector<Formula> flat_conjuncts(const Formula& f) {
    std::vector<Formula> flat;
    std::vector<Formula> stack{f};
    while (!stack.empty()) {
      Formula g = stack.back();
      stack.pop_back();
      if (info(g).fo) {
        flat.push_back(g);
      } else if (g.kind() == NodeKind::And) {
        stack.push_back(g.lhs());
        stack.push_back(g.rhs());
      }
    }
    return flat;
  }

  std::uint64_t allowed_rows(const Formula& side, const Team& t) {
    const auto flat = flat_conjuncts(side);
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      bool ok = true;
      if (!flat.empty()) {
        const Assignment s = t.assignment(i);
        for (const auto& g : flat) ok = ok && eval_fo(m_, s, g);
      }
      if (ok) mask |= std::uint64_t{1} << i;
    }
    return mask;
  }

  static std::uint64_t full_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

  // Enumerates masks m with base ⊆ m ⊆ base | free, largest first.
  template <typename Visit>
  bool for_each_between(std::uint64_t base, std::uint64_t free, Visit visit) {
    std::uint64_t sub = free;
    while (true) {
      tick();
      if (visit(base | sub)) return true;
      if (sub == 0) return false;
      sub = (sub - 1) & free;
    }
  }

  bool eval_or_lax(const Formula& f, const Team& t, Witness* w) {
    const Info& l = info(f.lhs());
    const Info& r = info(f.rhs());
    if (o_.union_pruning && l.uc && r.uc) {
      // Y and Z may as well be the maximal satisfying subteams.
      tick();
      Team y = max_subteam(m_, t, f.lhs());
      Team z = max_subteam(m_, t, f.rhs());
      if (!(team_union(y, z) == t)) return false;
      return finish_split(f, y, z, w);
    }
    if (o_.union_pruning && o_.closure_pruning && ((l.uc && r.dc) || (l.dc && r.uc))) {
      // The union-closed side takes its maximal subteam, the downward-closed
      // side the remaining rows.
      tick();
      const bool left_open = l.uc;
      Team big = max_subteam(m_, t, left_open ? f.lhs() : f.rhs());
      std::vector<bool> rest(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) rest[i] = !big.contains(t.row(i));
      Team small = t.select(rest);
      if (!eval(left_open ? f.rhs() : f.lhs(), small, nullptr)) return false;
      return left_open ? finish_split(f, big, small, w) : finish_split(f, small, big, w);
    }
    require_small(t);
    if (o_.closure_pruning && l.dc && r.dc) return split_partition_dfs(f, t, w);

    const std::uint64_t full = full_mask(t.size());
    const std::uint64_t okl = allowed_rows(f.lhs(), t);
    const std::uint64_t okr = allowed_rows(f.rhs(), t);
    if ((okl | okr) != full) return false;
    const std::uint64_t only_l = okl & ~okr;
    const std::uint64_t only_r = okr & ~okl;
    const std::uint64_t both = okl & okr;

    if (o_.closure_pruning && (l.dc || r.dc)) {
      // The downward-closed side takes exactly the complement of the other.
      const bool left_closed = l.dc;
      const Formula& open = left_closed ? f.rhs() : f.lhs();
      const Formula& closed = left_closed ? f.lhs() : f.rhs();
      const std::uint64_t forced = left_closed ? only_r : only_l;
      return for_each_between(forced, both, [&](std::uint64_t mask) {
        Team part = t.select_mask(mask);
        if (!eval(open, part, nullptr)) return false;
        Team rest = t.select_mask(full & ~mask);
        if (!eval(closed, rest, nullptr)) return false;
        return left_closed ? finish_split(f, rest, part, w) : finish_split(f, part, rest, w);
      });
    }
    // Covers Y ∪ Z = X: rows allowed on both sides go left, right, or both.
    return for_each_between(only_l, both, [&](std::uint64_t ymask) {
      Team y = t.select_mask(ymask);
      if (!eval(f.lhs(), y, nullptr)) return false;
      const std::uint64_t forced = full & ~ymask;
      return for_each_between(forced, ymask & okr, [&](std::uint64_t zmask) {
        Team z = t.select_mask(zmask);
        return eval(f.rhs(), z, nullptr) && finish_split(f, y, z, w);
      });
    });
  }

  bool eval_or_strict(const Formula& f, const Team& t, Witness* w) {
    require_small(t);
    if (o_.closure_pruning && info(f.lhs()).dc && info(f.rhs()).dc) {
      return split_partition_dfs(f, t, w);
    }
    const std::uint64_t full = full_mask(t.size());
    const std::uint64_t okl = allowed_rows(f.lhs(), t);
    const std::uint64_t okr = allowed_rows(f.rhs(), t);
    if ((okl | okr) != full) return false;
    return for_each_between(okl & ~okr, okl & okr, [&](std::uint64_t ymask) {
      Team y = t.select_mask(ymask);
      if (!eval(f.lhs(), y, nullptr)) return false;
      Team z = t.select_mask(full & ~ymask);
      return eval(f.rhs(), z, nullptr) && finish_split(f, y, z, w);
    });
  }

  bool finish_extension(const Formula& f, const Team& ext, Witness* w) {
    if (w == nullptr) return true;
    w->aux = {ext};
    if (!eval(f.body(), ext, child(w))) fail("internal: witness reconstruction disagrees with search");
    return true;
  }

  bool eval_exists(const Formula& f, const Team& t, Witness* w) {
    const std::string& var = f.symbol();
    const Formula& body = f.body();
    const std::size_t n = t.size();
    const Element dom = m_.domain_size();
    Extender ext(t, var);

    if (lax() && o_.union_pruning && info(body).uc) {
      // X[F/x] may as well be the maximal satisfying subteam of X[M/x].
      tick();
      const Team best = max_subteam(m_, rebind_all(t, var, dom), body);
      for (std::size_t i = 0; i < n; ++i) {
        bool covered = false;
        for (Element a = 0; a < dom && !covered; ++a) {
          std::vector<Element> row;
          ext.append(row, i, a);
          covered = best.contains(row);
        }
        if (!covered) return false;
      }
      return finish_extension(f, best, w);
    }

    if (o_.closure_pruning && info(body).dc) {
      // Single witnesses suffice; prune partial choices.
      std::vector<std::vector<Element>> options(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (Element a = 0; a < dom; ++a) {
          tick();
          std::vector<Element> data;
          ext.append(data, i, a);
          if (eval(body, ext.build(std::move(data), 1), nullptr)) options[i].push_back(a);
        }
        if (options[i].empty()) return false;
        if (lax() && o_.symmetry_pruning && symmetric_.count(var)) prune_symmetric(t, i, var, options[i]);
      }
      std::vector<Element> choice(n);
      std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
        if (i == n) {
          std::vector<Element> data;
          for (std::size_t j = 0; j < n; ++j) ext.append(data, j, choice[j]);
          return finish_extension(f, ext.build(std::move(data), n), w);
        }
        for (Element a : options[i]) {
          choice[i] = a;
          tick();
          std::vector<Element> data;
          for (std::size_t j = 0; j <= i; ++j) ext.append(data, j, choice[j]);
          if (eval(body, ext.build(std::move(data), i + 1), nullptr) && dfs(i + 1)) return true;
        }
        return false;
      };
      return dfs(0);
    }

    // Values ruled out for a row by a first-order conjunct of the body.
    const auto flat = flat_conjuncts(body);
    std::vector<std::vector<Element>> options(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (Element a = 0; a < dom; ++a) {
        std::vector<Element> row;
        ext.append(row, i, a);
        const Assignment s(ext.vars(), row);
        if (std::all_of(flat.begin(), flat.end(), [&](const Formula& g) { return eval_fo(m_, s, g); })) {
          options[i].push_back(a);
        }
      }
      if (options[i].empty()) return false;
      if (lax() && o_.symmetry_pruning && symmetric_.count(var)) prune_symmetric(t, i, var, options[i]);
    }

    if (!lax()) {
      // Strict: F maps each row to one element.
      std::vector<std::size_t> choice(n, 0);
      while (true) {
        tick();
        std::vector<Element> data;
        for (std::size_t j = 0; j < n; ++j) ext.append(data, j, options[j][choice[j]]);
        Team cand = ext.build(std::move(data), n);
        if (eval(body, cand, nullptr)) return finish_extension(f, cand, w);
        std::size_t j = 0;
        while (j < n && ++choice[j] == options[j].size()) choice[j++] = 0;
        if (j == n) return false;
      }
    }

    // Lax: F maps each row to a nonempty set of allowed elements, largest
    // sets first.
    if (dom > 16) throw Error(ErrorKind::ResourceLimit, "resource limit: domain too large for set witnesses");
    std::vector<std::uint32_t> top(n), choice(n);
    for (std::size_t j = 0; j < n; ++j) choice[j] = top[j] = (std::uint32_t{1} << options[j].size()) - 1;
    while (true) {
      tick();
      std::vector<Element> data;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t b = 0; b < options[j].size(); ++b) {
          if ((choice[j] >> b) & 1U) ext.append(data, j, options[j][b]);
        }
      }
      Team cand = ext.build(std::move(data), 0);
      if (eval(body, cand, nullptr)) return finish_extension(f, cand, w);
      std::size_t j = 0;
      while (j < n && --choice[j] == 0) choice[j] = top[j], ++j;
      if (j == n) return false;
    }
  }

  // Names that are never free and only ever occur in = / != literals whose
  // other side is also such a name.
  void find_symmetric_names(const Formula& root) {
    const auto free = free_variables(root);
    for (const auto& v : all_variables(root)) {
      if (free.count(v) == 0) symmetric_.insert(v);
    }
    const auto all_atoms = atoms(root);
    for (bool changed = true; changed;) {
      changed = false;
      auto drop = [&](const Term& t) {
        if (t.is_var() && symmetric_.erase(t.name) > 0) changed = true;
      };
      for (const auto& a : all_atoms) {
        if (a.kind() == NodeKind::Eq || a.kind() == NodeKind::Neq) {
          const Term& l = a.groups()[0][0];
          const Term& r = a.groups()[1][0];
          const bool l_ok = l.is_var() && symmetric_.count(l.name);
          const bool r_ok = r.is_var() && symmetric_.count(r.name);
          if (!(l_ok && r_ok)) {
            drop(l);
            drop(r);
          }
        } else {
          for (const auto& g : a.groups())
            for (const auto& t : g) drop(t);
        }
      }
    }
  }

  // Keeps the values already held by symmetric columns of the row plus the
  // first allowed value outside them.
  void prune_symmetric(const Team& t, std::size_t row, const std::string& var,
                       std::vector<Element>& options) const {
    std::set<Element> present;
    for (std::size_t c = 0; c < t.width(); ++c) {
      if (t.vars()[c] != var && symmetric_.count(t.vars()[c])) present.insert(t.row(row)[c]);
    }
    std::vector<Element> kept;
    bool fresh_taken = false;
    for (Element a : options) {
      if (present.count(a)) {
        kept.push_back(a);
      } else if (!fresh_taken) {
        kept.push_back(a);
        fresh_taken = true;
      }
    }
    options = std::move(kept);
  }

  // The quantifier moved inward by one step, or null:
  //   ∃x(α ∨ β) -> ∃xα ∨ ∃xβ,   ∃x(α ∧ β) -> α ∧ ∃xβ  (x not free in α),
  //   ∀x(α ∧ β) -> ∀xα ∧ ∀xβ,   Qx α -> α            (x not free in α).
  const Formula* distributed(const Formula& f) {
    auto it = distributed_.find(f.id());
    if (it != distributed_.end()) return it->second ? &*it->second : nullptr;
    const std::string& x = f.symbol();
    const Formula& b = f.body();
    auto has_x = [&](const Formula& g) { return free_variables(g).count(x) != 0; };
    auto q = [&](const Formula& g) {
      return f.kind() == NodeKind::Exists ? Formula::exists(x, g) : Formula::forall(x, g);
    };
    std::optional<Formula> out;
    if (!has_x(b)) {
      out = b;
    } else if (f.kind() == NodeKind::Exists && b.kind() == NodeKind::Or) {
      out = Formula::disj(q(b.lhs()), q(b.rhs()));
    } else if (b.kind() == NodeKind::And) {
      if (f.kind() == NodeKind::Forall) {
        out = Formula::conj(q(b.lhs()), q(b.rhs()));
      } else if (!has_x(b.lhs())) {
        out = Formula::conj(b.lhs(), q(b.rhs()));
      } else if (!has_x(b.rhs())) {
        out = Formula::conj(q(b.lhs()), b.rhs());
      }
    }
    auto& slot = distributed_[f.id()];
    slot = std::move(out);
    return slot ? &*slot : nullptr;
  }

  struct GuardSplit {
    std::vector<Formula> guard_l, guard_r;
    std::optional<Formula> left, right;
  };

  const GuardSplit& guard_split_for(const Formula& f) {
    auto it = splits_.find(f.id());
    if (it != splits_.end()) return it->second;
    GuardSplit gs;
    std::vector<std::pair<NodeKind, std::string>> chain;
    Formula g = f;
    while (g.is_quantifier()) {
      chain.emplace_back(g.kind(), g.symbol());
      g = g.body();
    }
    if (g.kind() == NodeKind::Or) {
      auto guards = [&](const Formula& side) {
        std::vector<Formula> out;
        for (const auto& c : flat_conjuncts(side)) {
          const auto fv = free_variables(c);
          const bool clear = std::none_of(chain.begin(), chain.end(),
                                          [&](const auto& q) { return fv.count(q.second) != 0; });
          if (clear) out.push_back(c);
        }
        return out;
      };
      gs.guard_l = guards(g.lhs());
      gs.guard_r = guards(g.rhs());
      if (!gs.guard_l.empty() && !gs.guard_r.empty()) {
        auto close_over = [&](Formula body) {
          for (auto q = chain.rbegin(); q != chain.rend(); ++q) {
            body = q->first == NodeKind::Exists ? Formula::exists(q->second, body)
                                                : Formula::forall(q->second, body);
          }
          return body;
        };
        gs.left = close_over(g.lhs());
        gs.right = close_over(g.rhs());
      }
    }
    return splits_.emplace(f.id(), std::move(gs)).first->second;
  }

  std::optional<bool> try_guard_split(const Formula& f, const Team& t) {
    const GuardSplit& gs = guard_split_for(f);
    if (!gs.left) return std::nullopt;
    std::vector<bool> in_l(t.size()), in_r(t.size());
    auto holds = [&](const std::vector<Formula>& gs_, const Assignment& s) {
      return std::all_of(gs_.begin(), gs_.end(), [&](const Formula& g) { return eval_fo(m_, s, g); });
    };
    bool unguarded = false;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Assignment s = t.assignment(i);
      in_l[i] = holds(gs.guard_l, s);
      in_r[i] = holds(gs.guard_r, s);
      if (in_l[i] && in_r[i]) return std::nullopt;
      if (!in_l[i] && !in_r[i]) unguarded = true;
    }
    tick();
    if (unguarded) return false;
    return eval(*gs.left, t.select(in_l), nullptr) && eval(*gs.right, t.select(in_r), nullptr);
  }

  const Structure& m_;
  const EvalOptions& o_;
  std::set<std::string> symmetric_;
  std::unordered_map<const void*, GuardSplit> splits_;
  std::unordered_map<const void*, std::optional<Formula>> distributed_;
  std::unordered_map<const void*, Info> info_;
  std::unordered_map<MemoKey, bool, MemoKeyHash> memo_;
};

void check_free_vars(const Team& team, const Formula& f) {
  for (const auto& v : free_variables(f)) {
    if (!team.has_var(v)) {
      fail("free variable '" + v + "' is not in the team domain");
    }
  }
}

}  // namespace

EvalResult evaluate(const Structure& m, const Team& team, const Formula& f, const EvalOptions& opts) {
  require(opts.budget.max_rows > 0 && opts.budget.max_enumerations > 0, "budget must be positive");
  check_free_vars(team, f);
  for (const auto& c : constant_symbols(f)) {
    require(m.has_constant(c), "constant '#" + c + "' is not interpreted by the structure");
  }
  Engine engine(m, opts, f);
  EvalResult res;
  res.verdict = engine.eval(f, team, nullptr);
  if (res.verdict && opts.want_trace) {
    Witness w;
    engine.eval(f, team, &w);
    res.trace = std::move(w);
  }
  res.stats = engine.stats;
  return res;
}

EvalResult eval_lax(const Structure& m, const Team& team, const Formula& f, EvalOptions opts) {
  opts.semantics = Semantics::Lax;
  return evaluate(m, team, f, opts);
}

EvalResult eval_strict(const Structure& m, const Team& team, const Formula& f, EvalOptions opts) {
  opts.semantics = Semantics::Strict;
  return evaluate(m, team, f, opts);
}

namespace {

bool projects_to(const Team& sub, const Team& parent) {
  for (const auto& v : sub.vars()) {
    if (!parent.has_var(v)) return false;
  }
  return restrict_team(parent, sub.vars()) == sub;
}

std::vector<std::string> without(const std::vector<std::string>& vs, const std::string& x) {
  std::vector<std::string> out;
  for (const auto& v : vs) {
    if (v != x) out.push_back(v);
  }
  return out;
}

bool replay(const Structure& m, const Formula& f, const Witness& w, Semantics sem, bool literal) {
  if (w.kind != f.kind()) return false;
  for (const auto& v : free_variables(f)) {
    if (!w.team.has_var(v)) return false;
  }
  const Team& t = w.team;
  if (f.is_atom()) return eval_atom(m, t, f, literal);
  if (w.children.empty()) {
    // First-order subformula settled row by row.
    if (!is_first_order(f)) return false;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!eval_fo(m, t.assignment(i), f)) return false;
    }
    return true;
  }
  switch (f.kind()) {
    case NodeKind::And:
      return w.children.size() == 2 && projects_to(w.children[0].team, t) &&
             projects_to(w.children[1].team, t) && replay(m, f.lhs(), w.children[0], sem, literal) &&
             replay(m, f.rhs(), w.children[1], sem, literal);
    case NodeKind::Or: {
      if (w.aux.size() != 2 || w.children.size() != 2) return false;
      const Team& y = w.aux[0];
      const Team& z = w.aux[1];
      if (y.vars() != t.vars() || z.vars() != t.vars()) return false;
      if (!(team_union(y, z) == t)) return false;
      if (sem == Semantics::Strict && y.size() + z.size() != t.size()) return false;
      return projects_to(w.children[0].team, y) && projects_to(w.children[1].team, z) &&
             replay(m, f.lhs(), w.children[0], sem, literal) &&
             replay(m, f.rhs(), w.children[1], sem, literal);
    }
    case NodeKind::Exists: {
      if (w.aux.size() != 1 || w.children.size() != 1) return false;
      const Team& ext = w.aux[0];
      const std::string& x = f.symbol();
      auto expected = t.vars();
      if (!t.has_var(x)) expected.push_back(x);
      if (ext.vars() != expected) return false;
      const auto base = without(t.vars(), x);
      if (!(restrict_team(ext, base) == restrict_team(t, base))) return false;
      if (sem == Semantics::Strict && ext.size() > t.size()) return false;
      return projects_to(w.children[0].team, ext) && replay(m, f.body(), w.children[0], sem, literal);
    }
    case NodeKind::Forall: {
      if (w.aux.size() != 1 || w.children.size() != 1) return false;
      if (!(w.aux[0] == rebind_all(t, f.symbol(), m.domain_size()))) return false;
      return projects_to(w.children[0].team, w.aux[0]) &&
             replay(m, f.body(), w.children[0], sem, literal);
    }
    default:
      return false;
  }
}

}  // namespace

bool replay_witness(const Structure& m, const Formula& f, const Witness& w, Semantics semantics,
                    bool literal_cind) {
  return replay(m, f, w, semantics, literal_cind);
}

}  // namespace teamlogic
