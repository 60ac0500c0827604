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

#include "teamlogic/syntax.hpp"

#include <algorithm>
#include <cctype>

#include "teamlogic/error.hpp"

namespace teamlogic {

struct Formula::Node {
  NodeKind kind;
  std::string symbol;
  std::vector<Terms> groups;
  std::vector<Formula> children;
};

Terms vars(const std::vector<std::string>& names) {
  Terms out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(Term::var(n));
  return out;
}

namespace {

void require_variables(const Terms& ts, const char* atom) {
  for (const auto& t : ts) {
    if (!t.is_var()) {
      throw Error(ErrorKind::Invalid,
                  std::string(atom) + " atom arguments must be variables, got constant #" + t.name);
    }
  }
}

}  // namespace

Formula Formula::rel(std::string name, Terms args) {
  require(!args.empty(), "relation atom needs at least one argument");
  return Formula(std::make_shared<const Node>(Node{NodeKind::Rel, std::move(name), {std::move(args)}, {}}));
}

Formula Formula::neg_rel(std::string name, Terms args) {
  require(!args.empty(), "relation atom needs at least one argument");
  return Formula(
      std::make_shared<const Node>(Node{NodeKind::NegRel, std::move(name), {std::move(args)}, {}}));
}

Formula Formula::eq(Term lhs, Term rhs) {
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Eq, {}, {Terms{std::move(lhs)}, Terms{std::move(rhs)}}, {}}));
}

Formula Formula::neq(Term lhs, Term rhs) {
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Neq, {}, {Terms{std::move(lhs)}, Terms{std::move(rhs)}}, {}}));
}

Formula Formula::inc(Terms lhs, Terms rhs) {
  if (lhs.size() != rhs.size()) throw Error(ErrorKind::Invalid, "inclusion arity mismatch");
  require(!lhs.empty(), "inclusion atom needs at least one variable per side");
  return Formula(
      std::make_shared<const Node>(Node{NodeKind::Inc, {}, {std::move(lhs), std::move(rhs)}, {}}));
}

Formula Formula::dep(Terms antecedent, Term consequent) {
  require_variables(antecedent, "dependence");
  require_variables({consequent}, "dependence");
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Dep, {}, {std::move(antecedent), Terms{std::move(consequent)}}, {}}));
}

Formula Formula::cind(Terms condition, Terms left, Terms right) {
  require_variables(condition, "independence");
  require_variables(left, "independence");
  require_variables(right, "independence");
  require(!left.empty() && !right.empty(), "independence atom needs nonempty argument tuples");
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::CInd, {}, {std::move(condition), std::move(left), std::move(right)}, {}}));
}

Formula Formula::ind(Terms left, Terms right) {
  require_variables(left, "independence");
  require_variables(right, "independence");
  require(!left.empty() && !right.empty(), "independence atom needs nonempty argument tuples");
  return Formula(
      std::make_shared<const Node>(Node{NodeKind::Ind, {}, {std::move(left), std::move(right)}, {}}));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::And, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Or, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::exists(std::string var, Formula body) {
  return Formula(
      std::make_shared<const Node>(Node{NodeKind::Exists, std::move(var), {}, {std::move(body)}}));
}

Formula Formula::forall(std::string var, Formula body) {
  return Formula(
      std::make_shared<const Node>(Node{NodeKind::Forall, std::move(var), {}, {std::move(body)}}));
}

Formula Formula::conj_all(std::vector<Formula> parts) {
  require(!parts.empty(), "empty conjunction");
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
  return acc;
}

Formula Formula::disj_all(std::vector<Formula> parts) {
  require(!parts.empty(), "empty disjunction");
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disj(acc, parts[i]);
  return acc;
}

NodeKind Formula::kind() const { return node_->kind; }
const std::string& Formula::symbol() const { return node_->symbol; }
const std::vector<Terms>& Formula::groups() const { return node_->groups; }
const Formula& Formula::lhs() const { return node_->children.at(0); }
const Formula& Formula::rhs() const { return node_->children.at(1); }
const Formula& Formula::body() const { return node_->children.at(0); }

bool Formula::is_literal() const {
  switch (kind()) {
    case NodeKind::Rel:
    case NodeKind::NegRel:
    case NodeKind::Eq:
    case NodeKind::Neq:
      return true;
    default:
      return false;
  }
}

bool Formula::is_dependency() const {
  switch (kind()) {
    case NodeKind::Inc:
    case NodeKind::Dep:
    case NodeKind::CInd:
    case NodeKind::Ind:
      return true;
    default:
      return false;
  }
}

bool Formula::is_quantifier() const {
  return kind() == NodeKind::Exists || kind() == NodeKind::Forall;
}

bool Formula::is_binary() const { return kind() == NodeKind::And || kind() == NodeKind::Or; }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  return a.kind == b.kind && a.symbol == b.symbol && a.groups == b.groups && a.children == b.children;
}

namespace {

void collect_free(const Formula& f, std::multiset<std::string>& bound, std::set<std::string>& out) {
  if (f.is_atom()) {
    for (const auto& g : f.groups()) {
      for (const auto& t : g) {
        if (t.is_var() && bound.count(t.name) == 0) out.insert(t.name);
      }
    }
    return;
  }
  if (f.is_quantifier()) {
    auto it = bound.insert(f.symbol());
    collect_free(f.body(), bound, out);
    bound.erase(it);
    return;
  }
  collect_free(f.lhs(), bound, out);
  collect_free(f.rhs(), bound, out);
}

template <typename Visit>
void visit_nodes(const Formula& f, const Visit& visit) {
  visit(f);
  if (f.is_quantifier()) {
    visit_nodes(f.body(), visit);
  } else if (f.is_binary()) {
    visit_nodes(f.lhs(), visit);
    visit_nodes(f.rhs(), visit);
  }
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_variables(const Formula& f) {
  std::set<std::string> out;
  visit_nodes(f, [&](const Formula& n) {
    if (n.is_quantifier()) out.insert(n.symbol());
    for (const auto& g : n.groups()) {
      for (const auto& t : g) {
        if (t.is_var()) out.insert(t.name);
      }
    }
  });
  return out;
}

std::set<std::string> constant_symbols(const Formula& f) {
  std::set<std::string> out;
  visit_nodes(f, [&](const Formula& n) {
    for (const auto& g : n.groups()) {
      for (const auto& t : g) {
        if (!t.is_var()) out.insert(t.name);
      }
    }
  });
  return out;
}

std::map<std::string, int> relation_symbols(const Formula& f) {
  std::map<std::string, int> out;
  visit_nodes(f, [&](const Formula& n) {
    if (n.kind() == NodeKind::Rel || n.kind() == NodeKind::NegRel) {
      const int arity = static_cast<int>(n.groups()[0].size());
      auto [it, inserted] = out.emplace(n.symbol(), arity);
      require(inserted || it->second == arity,
              "relation '" + n.symbol() + "' used with inconsistent arities");
    }
  });
  return out;
}

bool is_first_order(const Formula& f) {
  bool ok = true;
  visit_nodes(f, [&](const Formula& n) { ok = ok && !n.is_dependency(); });
  return ok;
}

bool is_inclusion_fragment(const Formula& f) {
  bool ok = true;
  visit_nodes(f, [&](const Formula& n) {
    ok = ok && (!n.is_dependency() || n.kind() == NodeKind::Inc);
  });
  return ok;
}

bool is_downward_closed(const Formula& f) {
  bool ok = true;
  visit_nodes(f, [&](const Formula& n) {
    ok = ok && (!n.is_dependency() || n.kind() == NodeKind::Dep);
  });
  return ok;
}

bool is_quantifier_free(const Formula& f) {
  bool ok = true;
  visit_nodes(f, [&](const Formula& n) { ok = ok && !n.is_quantifier(); });
  return ok;
}

bool is_prenex(const Formula& f) {
  const Formula* cur = &f;
  while (cur->is_quantifier()) cur = &cur->body();
  return is_quantifier_free(*cur);
}

bool inclusion_args_are_variables(const Formula& f) {
  bool ok = true;
  visit_nodes(f, [&](const Formula& n) {
    if (n.kind() != NodeKind::Inc) return;
    for (const auto& g : n.groups()) {
      for (const auto& t : g) ok = ok && t.is_var();
    }
  });
  return ok;
}

int depth(const Formula& f) {
  if (f.is_atom()) return 0;
  if (f.is_quantifier()) return 1 + depth(f.body());
  return 1 + std::max(depth(f.lhs()), depth(f.rhs()));
}

std::size_t node_count(const Formula& f) {
  std::size_t n = 0;
  visit_nodes(f, [&](const Formula&) { ++n; });
  return n;
}

namespace {

Terms substitute_terms(const Terms& ts, const std::map<std::string, Term>& subst) {
  Terms out;
  out.reserve(ts.size());
  for (const auto& t : ts) {
    auto it = t.is_var() ? subst.find(t.name) : subst.end();
    out.push_back(it == subst.end() ? t : it->second);
  }
  return out;
}

}  // namespace

Formula substitute(const Formula& f, const std::map<std::string, Term>& subst) {
  if (subst.empty()) return f;
  switch (f.kind()) {
    case NodeKind::Rel:
      return Formula::rel(f.symbol(), substitute_terms(f.groups()[0], subst));
    case NodeKind::NegRel:
      return Formula::neg_rel(f.symbol(), substitute_terms(f.groups()[0], subst));
    case NodeKind::Eq:
      return Formula::eq(substitute_terms(f.groups()[0], subst)[0],
                         substitute_terms(f.groups()[1], subst)[0]);
    case NodeKind::Neq:
      return Formula::neq(substitute_terms(f.groups()[0], subst)[0],
                          substitute_terms(f.groups()[1], subst)[0]);
    case NodeKind::Inc:
      return Formula::inc(substitute_terms(f.groups()[0], subst),
                          substitute_terms(f.groups()[1], subst));
    case NodeKind::Dep:
      return Formula::dep(substitute_terms(f.groups()[0], subst),
                          substitute_terms(f.groups()[1], subst)[0]);
    case NodeKind::CInd:
      return Formula::cind(substitute_terms(f.groups()[0], subst),
                           substitute_terms(f.groups()[1], subst),
                           substitute_terms(f.groups()[2], subst));
    case NodeKind::Ind:
      return Formula::ind(substitute_terms(f.groups()[0], subst),
                          substitute_terms(f.groups()[1], subst));
    case NodeKind::And:
      return Formula::conj(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
    case NodeKind::Or:
      return Formula::disj(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
    case NodeKind::Exists:
    case NodeKind::Forall: {
      auto inner = subst;
      inner.erase(f.symbol());
      Formula body = substitute(f.body(), inner);
      return f.kind() == NodeKind::Exists ? Formula::exists(f.symbol(), body)
                                          : Formula::forall(f.symbol(), body);
    }
  }
  fail("unreachable node kind");
}

std::vector<Formula> atoms(const Formula& f) {
  std::vector<Formula> out;
  visit_nodes(f, [&](const Formula& n) {
    if (n.is_atom()) out.push_back(n);
  });
  return out;
}

std::string to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Rel: return "rel";
    case NodeKind::NegRel: return "neg_rel";
    case NodeKind::Eq: return "eq";
    case NodeKind::Neq: return "neq";
    case NodeKind::Inc: return "inc";
    case NodeKind::Dep: return "dep";
    case NodeKind::CInd: return "cind";
    case NodeKind::Ind: return "ind";
    case NodeKind::And: return "and";
    case NodeKind::Or: return "or";
    case NodeKind::Exists: return "exists";
    case NodeKind::Forall: return "forall";
  }
  return "?";
}

FragmentProfile classify(const Formula& f) {
  FragmentProfile p;
  visit_nodes(f, [&](const Formula& n) {
    if (n.kind() == NodeKind::Forall) ++p.forall_count;
    if (n.is_atom()) p.atoms_used.insert(to_string(n.kind()));
    switch (n.kind()) {
      case NodeKind::Inc:
        p.max_inc_arity = std::max(p.max_inc_arity, static_cast<int>(n.groups()[0].size()));
        break;
      case NodeKind::Dep:
        p.max_dep_arity = std::max(p.max_dep_arity, static_cast<int>(n.groups()[0].size()));
        break;
      case NodeKind::CInd:
      case NodeKind::Ind: {
        std::set<std::string> distinct;
        for (const auto& g : n.groups()) {
          for (const auto& t : g) distinct.insert(t.name);
        }
        p.max_ind_distinct_vars =
            std::max(p.max_ind_distinct_vars, static_cast<int>(distinct.size()) - 1);
        break;
      }
      default:
        break;
    }
  });
  return p;
}

Formula edge_formula(int k, const std::vector<std::string>& xs, const std::vector<std::string>& ys,
                     const std::string& relation) {
  require(k >= 1, "edge formula needs k >= 1");
  require(xs.size() == static_cast<std::size_t>(k) && ys.size() == static_cast<std::size_t>(k),
          "edge formula needs two variable lists of length k");
  std::set<std::string> seen;
  for (const auto& v : xs) require(seen.insert(v).second, "edge formula variable lists overlap");
  for (const auto& v : ys) require(seen.insert(v).second, "edge formula variable lists overlap");

  std::vector<Formula> parts;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      parts.push_back(Formula::rel(relation, {Term::var(xs[i]), Term::var(ys[j])}));
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      parts.push_back(Formula::conj(Formula::rel(relation, {Term::var(xs[i]), Term::var(xs[j])}),
                                    Formula::rel(relation, {Term::var(ys[i]), Term::var(ys[j])})));
    }
  }
  return Formula::conj_all(std::move(parts));
}

std::string FreshNames::fresh(const std::string& base) {
  const bool digit_tail = !base.empty() && std::isdigit(static_cast<unsigned char>(base.back()));
  const std::string stem = digit_tail ? base + "_" : base;
  int& counter = counters_[stem];
  std::string candidate;
  do {
    candidate = stem + std::to_string(++counter);
  } while (used_.count(candidate) != 0);
  used_.insert(candidate);
  introduced_.push_back(candidate);
  return candidate;
}

}  // namespace teamlogic
