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


#include "teamlogic/transform.hpp"

#include <algorithm>

#include "teamlogic/error.hpp"

namespace teamlogic {

namespace {

TranslationReport make_report(std::string pass, const Formula& in, const Formula& out,
                              std::vector<std::string> fresh) {
  return TranslationReport{std::move(pass), in, out, std::move(fresh), classify(in), classify(out), {}, {}};
}

Formula quantify(NodeKind q, const std::string& var, Formula body) {
  return q == NodeKind::Forall ? Formula::forall(var, std::move(body))
                               : Formula::exists(var, std::move(body));
}

struct Prefix {
  std::vector<std::pair<NodeKind, std::string>> quantifiers;
  bool has_forall() const {
    return std::any_of(quantifiers.begin(), quantifiers.end(),
                       [](const auto& q) { return q.first == NodeKind::Forall; });
  }
};

Formula close(const Prefix& p, Formula matrix) {
  for (auto it = p.quantifiers.rbegin(); it != p.quantifiers.rend(); ++it) {
    matrix = quantify(it->first, it->second, std::move(matrix));
  }
  return matrix;
}

class Prenexer {
 public:
  explicit Prenexer(FreshNames& names) : names_(names) {}

  std::pair<Prefix, Formula> run(const Formula& f) {
    if (f.is_atom()) return {{}, f};
    if (f.is_quantifier()) {
      auto [p, m] = run(f.body());
      p.quantifiers.insert(p.quantifiers.begin(), {f.kind(), f.symbol()});
      return {p, m};
    }
    auto [p1, m1] = run(f.lhs());
    auto [p2, m2] = run(f.rhs());
    Prefix p = p1;
    p.quantifiers.insert(p.quantifiers.end(), p2.quantifiers.begin(), p2.quantifiers.end());
    if (f.kind() == NodeKind::And) return {p, Formula::conj(m1, m2)};
    if (!p1.has_forall() && !p2.has_forall()) return {p, Formula::disj(m1, m2)};
    const std::string u = names_.fresh("u");
    const std::string v = names_.fresh("v");
    Formula same = Formula::eq(Term::var(u), Term::var(v));
    Formula differ = Formula::neq(Term::var(u), Term::var(v));
    selectors.push_back(same);
    selectors.push_back(differ);
    p.quantifiers.insert(p.quantifiers.begin(), {{NodeKind::Exists, u}, {NodeKind::Exists, v}});
    return {p, Formula::disj(Formula::conj(same, m1), Formula::conj(differ, m2))};
  }

  std::vector<Formula> selectors;

 private:
  FreshNames& names_;
};

Formula rename_rec(const Formula& f, std::map<std::string, Term>& env, std::set<std::string>& seen,
                   FreshNames& names, std::map<std::string, std::string>& renamed) {
  if (f.is_atom()) return substitute(f, env);
  if (f.is_binary()) {
    Formula l = rename_rec(f.lhs(), env, seen, names, renamed);
    Formula r = rename_rec(f.rhs(), env, seen, names, renamed);
    return f.kind() == NodeKind::And ? Formula::conj(l, r) : Formula::disj(l, r);
  }
  const std::string& x = f.symbol();
  std::string target = x;
  if (seen.count(x) != 0) {
    target = names.fresh(x);
    renamed[target] = x;
  }
  seen.insert(target);
  auto saved = env;
  if (target == x) {
    env.erase(x);
  } else {
    env[x] = Term::var(target);
  }
  Formula body = rename_rec(f.body(), env, seen, names, renamed);
  env = std::move(saved);
  return quantify(f.kind(), target, body);
}

Formula negate_rec(const Formula& f) {
  const auto& g = f.groups();
  switch (f.kind()) {
    case NodeKind::Rel:
      return Formula::neg_rel(f.symbol(), g[0]);
    case NodeKind::NegRel:
      return Formula::rel(f.symbol(), g[0]);
    case NodeKind::Eq:
      return Formula::neq(g[0][0], g[1][0]);
    case NodeKind::Neq:
      return Formula::eq(g[0][0], g[1][0]);
    case NodeKind::And:
      return Formula::disj(negate_rec(f.lhs()), negate_rec(f.rhs()));
    case NodeKind::Or:
      return Formula::conj(negate_rec(f.lhs()), negate_rec(f.rhs()));
    case NodeKind::Exists:
      return Formula::forall(f.symbol(), negate_rec(f.body()));
    case NodeKind::Forall:
      return Formula::exists(f.symbol(), negate_rec(f.body()));
    default:
      throw Error(ErrorKind::Fragment, "cannot negate dependency atom " + to_string(f.kind()));
  }
}

Formula elim_rec(const Formula& f, FreshNames& names) {
  if (f.kind() == NodeKind::Inc) {
    std::map<std::string, Term> fresh_for;
    std::vector<Formula> parts;
    std::vector<std::string> introduced;
    auto visit = [&](const Terms& ts) {
      Terms out;
      for (const auto& t : ts) {
        if (t.is_var()) {
          out.push_back(t);
          continue;
        }
        auto it = fresh_for.find(t.name);
        if (it == fresh_for.end()) {
          const std::string u = names.fresh("u");
          it = fresh_for.emplace(t.name, Term::var(u)).first;
          introduced.push_back(u);
          parts.push_back(Formula::eq(Term::var(u), t));
        }
        out.push_back(it->second);
      }
      return out;
    };
    Terms lhs = visit(f.groups()[0]);
    Terms rhs = visit(f.groups()[1]);
    if (introduced.empty()) return f;
    parts.push_back(Formula::inc(lhs, rhs));
    Formula out = Formula::conj_all(std::move(parts));
    for (auto it = introduced.rbegin(); it != introduced.rend(); ++it) out = Formula::exists(*it, out);
    return out;
  }
  if (f.is_atom()) return f;
  if (f.is_binary()) {
    Formula l = elim_rec(f.lhs(), names);
    Formula r = elim_rec(f.rhs(), names);
    return f.kind() == NodeKind::And ? Formula::conj(l, r) : Formula::disj(l, r);
  }
  return quantify(f.kind(), f.symbol(), elim_rec(f.body(), names));
}

}  // namespace

Formula nnf_negate(const Formula& psi) {
  if (!is_first_order(psi)) {
    throw Error(ErrorKind::Fragment, "negation is only defined for first-order formulas");
  }
  return negate_rec(psi);
}

Formula rename_apart(const Formula& f, FreshNames& names, std::map<std::string, std::string>& renamed) {
  names.reserve_all(all_variables(f));
  std::map<std::string, Term> env;
  std::set<std::string> seen = free_variables(f);
  return rename_rec(f, env, seen, names, renamed);
}

TranslationReport prenex(const Formula& f) {
  FreshNames names;
  std::map<std::string, std::string> renamed;
  Formula apart = rename_apart(f, names, renamed);
  Prenexer p(names);
  auto [prefix, matrix] = p.run(apart);
  auto report = make_report("prenex", f, close(prefix, matrix), names.introduced());
  report.renamed = std::move(renamed);
  report.selector_literals = std::move(p.selectors);
  return report;
}

TranslationReport collapse_universals(const Formula& f) {
  require(is_prenex(f), "collapse_universals needs a prenex formula");
  if (!is_inclusion_fragment(f)) {
    throw Error(ErrorKind::Fragment, "collapse_universals is defined for inclusion logic only");
  }
  FreshNames names;
  std::map<std::string, std::string> renamed;
  Formula apart = rename_apart(f, names, renamed);

  std::vector<std::pair<NodeKind, std::string>> prefix;
  Formula matrix = apart;
  while (matrix.is_quantifier()) {
    prefix.emplace_back(matrix.kind(), matrix.symbol());
    matrix = matrix.body();
  }
  const bool any_forall = std::any_of(prefix.begin(), prefix.end(),
                                      [](const auto& q) { return q.first == NodeKind::Forall; });
  if (!any_forall) {
    auto report = make_report("one-forall", f, f, {});
    return report;
  }

  const std::string y = names.fresh("y");
  const auto free = free_variables(f);
  const Terms z = vars({free.begin(), free.end()});
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i].first != NodeKind::Forall) continue;
    Terms lhs = z, rhs = z;
    for (std::size_t j = 0; j < i; ++j) {
      lhs.push_back(Term::var(prefix[j].second));
      rhs.push_back(Term::var(prefix[j].second));
    }
    lhs.push_back(Term::var(y));
    rhs.push_back(Term::var(prefix[i].second));
    parts.push_back(Formula::inc(lhs, rhs));
  }
  parts.push_back(matrix);
  Formula out = Formula::forall(y, Formula::conj_all(std::move(parts)));
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) out = Formula::exists(it->second, out);
  auto report = make_report("one-forall", f, out, names.introduced());
  report.renamed = std::move(renamed);
  return report;
}

TranslationReport neg_tc_encoding(const Formula& psi, const std::vector<std::string>& xs,
                                  const std::vector<std::string>& ys, const std::vector<std::string>& b,
                                  const std::vector<std::string>& c) {
  const std::size_t k = xs.size();
  require(k >= 1, "neg-tc encoding needs k >= 1");
  require(ys.size() == k, "neg-tc encoding needs |x| = |y|");
  require(b.size() == k && c.size() == k, "neg-tc encoding needs k constants for b and for c");
  if (!is_first_order(psi)) throw Error(ErrorKind::Fragment, "neg-tc encoding needs a first-order step formula");
  std::set<std::string> params(xs.begin(), xs.end());
  params.insert(ys.begin(), ys.end());
  require(params.size() == 2 * k, "neg-tc encoding needs disjoint, repetition-free x and y");
  for (const auto& v : free_variables(psi)) {
    require(params.count(v) != 0, "step formula has free variable '" + v + "' outside x and y");
  }

  FreshNames names(all_variables(psi));
  names.reserve_all(params);
  std::vector<std::string> zs, ws;
  for (std::size_t i = 0; i < k; ++i) zs.push_back(names.fresh("z"));
  for (std::size_t i = 0; i < k; ++i) ws.push_back(names.fresh("w"));

  std::map<std::string, Term> subst;
  for (std::size_t i = 0; i < k; ++i) {
    subst[xs[i]] = Term::var(zs[i]);
    subst[ys[i]] = Term::var(ws[i]);
  }
  Formula step_negated = substitute(nnf_negate(psi), subst);

  Terms bt, zt = vars(zs), wt = vars(ws);
  std::vector<Formula> differs;
  for (std::size_t i = 0; i < k; ++i) {
    bt.push_back(Term::constant(b[i]));
    differs.push_back(Formula::neq(Term::var(zs[i]), Term::constant(c[i])));
  }
  Formula closed = Formula::disj(step_negated, Formula::inc(wt, zt));
  for (auto it = ws.rbegin(); it != ws.rend(); ++it) closed = Formula::forall(*it, closed);
  Formula body = Formula::conj_all({Formula::inc(bt, zt), Formula::disj_all(differs), closed});
  for (auto it = zs.rbegin(); it != zs.rend(); ++it) body = Formula::exists(*it, body);

  TranslationReport elim = eliminate_terms_in_inclusions(body);
  std::vector<std::string> fresh = names.introduced();
  fresh.insert(fresh.end(), elim.fresh_variables.begin(), elim.fresh_variables.end());
  return make_report("neg-tc", psi, elim.output, fresh);
}

TranslationReport eliminate_terms_in_inclusions(const Formula& f) {
  FreshNames names(all_variables(f));
  Formula out = elim_rec(f, names);
  return make_report("elim-terms", f, out, names.introduced());
}

}  // namespace teamlogic
