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

#include "teamlogic/structures.hpp"

#include <algorithm>
#include <numeric>

#include "teamlogic/error.hpp"

namespace teamlogic {

namespace {

constexpr std::size_t kDenseLimit = std::size_t{1} << 20;

bool lex_less(std::span<const Element> a, std::span<const Element> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

void Signature::validate() const {
  std::set<std::string> seen;
  for (const auto& [name, arity] : relations) {
    require(arity >= 1, "relation '" + name + "' must have arity >= 1");
    seen.insert(name);
  }
  for (const auto& c : constants) {
    require(seen.insert(c).second, "duplicate symbol name '" + c + "'");
  }
}

Structure::Structure(Signature signature, Element domain_size,
                     std::map<std::string, std::set<Tuple>> relations,
                     std::map<std::string, Element> constants,
                     std::optional<GeneratorShape> shape)
    : signature_(std::move(signature)),
      domain_size_(domain_size),
      constants_(std::move(constants)),
      shape_(shape) {
  signature_.validate();
  require(domain_size_ >= 1, "domain size must be at least 1");
  for (const auto& [name, arity] : signature_.relations) {
    Relation rel;
    rel.arity = arity;
    if (auto it = relations.find(name); it != relations.end()) {
      rel.tuples = std::move(it->second);
      relations.erase(it);
    }
    for (const auto& t : rel.tuples) {
      require(t.size() == static_cast<std::size_t>(arity),
              "tuple of wrong arity in relation '" + name + "'");
      for (Element e : t) {
        require(e < domain_size_, "element out of range in relation '" + name + "'");
      }
    }
    std::size_t cells = 1;
    bool small = true;
    for (int i = 0; i < arity && small; ++i) {
      cells *= domain_size_;
      small = cells <= kDenseLimit;
    }
    if (small) {
      rel.dense.assign(cells, 0);
      for (const auto& t : rel.tuples) {
        std::size_t idx = 0;
        for (Element e : t) idx = idx * domain_size_ + e;
        rel.dense[idx] = 1;
      }
    }
    relations_.emplace(name, std::move(rel));
  }
  require(relations.empty(), "relation '" + (relations.empty() ? std::string() : relations.begin()->first) +
                                 "' is not in the signature");
  for (const auto& c : signature_.constants) {
    auto it = constants_.find(c);
    require(it != constants_.end(), "constant '" + c + "' has no interpretation");
    require(it->second < domain_size_, "constant '" + c + "' out of range");
  }
  require(constants_.size() == signature_.constants.size(),
          "constant interpretation names a symbol outside the signature");
}

const Structure::Relation& Structure::relation(std::string_view name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) fail("unknown relation '" + std::string(name) + "'");
  return it->second;
}

bool Structure::has_relation(std::string_view name) const {
  return relations_.find(name) != relations_.end();
}

int Structure::arity(std::string_view name) const { return relation(name).arity; }

const std::set<Tuple>& Structure::tuples(std::string_view name) const {
  return relation(name).tuples;
}

bool Structure::holds(std::string_view name, std::span<const Element> args) const {
  const Relation& rel = relation(name);
  require(args.size() == static_cast<std::size_t>(rel.arity),
          "relation '" + std::string(name) + "' applied to wrong number of arguments");
  if (!rel.dense.empty()) {
    std::size_t idx = 0;
    for (Element e : args) idx = idx * domain_size_ + e;
    return rel.dense[idx] != 0;
  }
  return rel.tuples.count(Tuple(args.begin(), args.end())) != 0;
}

bool Structure::has_constant(std::string_view name) const {
  return constants_.find(std::string(name)) != constants_.end();
}

Element Structure::constant(std::string_view name) const {
  auto it = constants_.find(std::string(name));
  if (it == constants_.end()) fail("unknown constant '" + std::string(name) + "'");
  return it->second;
}

Structure Structure::with_constants(const std::map<std::string, Element>& overrides) const {
  std::map<std::string, std::set<Tuple>> rels;
  for (const auto& [name, rel] : relations_) rels.emplace(name, rel.tuples);
  auto consts = constants_;
  for (const auto& [name, value] : overrides) {
    require(consts.count(name) != 0, "cannot override unknown constant '" + name + "'");
    consts[name] = value;
  }
  return Structure(signature_, domain_size_, std::move(rels), std::move(consts), shape_);
}

bool Structure::operator==(const Structure& other) const {
  if (!(signature_ == other.signature_) || domain_size_ != other.domain_size_ ||
      constants_ != other.constants_) {
    return false;
  }
  for (const auto& [name, rel] : relations_) {
    if (other.tuples(name) != rel.tuples) return false;
  }
  return true;
}

Assignment::Assignment(std::vector<std::string> vars, Tuple values)
    : vars_(std::move(vars)), values_(std::move(values)) {
  require(vars_.size() == values_.size(), "assignment arity mismatch");
  std::set<std::string_view> seen;
  for (const auto& v : vars_) require(seen.insert(v).second, "duplicate variable '" + v + "'");
}

bool Assignment::binds(std::string_view var) const {
  return std::find(vars_.begin(), vars_.end(), var) != vars_.end();
}

Element Assignment::at(std::string_view var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) fail("variable '" + std::string(var) + "' is unbound");
  return values_[static_cast<std::size_t>(it - vars_.begin())];
}

Assignment Assignment::with(const std::string& var, Element value) const {
  Assignment out = *this;
  auto it = std::find(out.vars_.begin(), out.vars_.end(), var);
  if (it == out.vars_.end()) {
    out.vars_.push_back(var);
    out.values_.push_back(value);
  } else {
    out.values_[static_cast<std::size_t>(it - out.vars_.begin())] = value;
  }
  return out;
}

Team::Team(std::vector<std::string> vars) : vars_(std::move(vars)) {
  std::set<std::string_view> seen;
  for (const auto& v : vars_) require(seen.insert(v).second, "duplicate team variable '" + v + "'");
}

Team::Team(std::vector<std::string> vars, std::vector<Tuple> rows) : Team(std::move(vars)) {
  if (width() == 0) {
    count_ = rows.empty() ? 0 : 1;
    return;
  }
  data_.reserve(rows.size() * width());
  for (const auto& r : rows) {
    require(r.size() == width(), "team row has wrong width");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  count_ = rows.size();
  canonicalize();
}

Team Team::unit() {
  Team t;
  t.count_ = 1;
  return t;
}

Team Team::from_flat(std::vector<std::string> vars, std::vector<Element> data, std::size_t rows) {
  Team t(std::move(vars));
  if (t.width() == 0) {
    t.count_ = rows > 0 ? 1 : 0;
    return t;
  }
  require(data.size() % t.width() == 0, "flat team data is not a whole number of rows");
  t.count_ = data.size() / t.width();
  t.data_ = std::move(data);
  t.canonicalize();
  return t;
}

void Team::canonicalize() {
  const std::size_t w = width();
  if (w == 0 || count_ <= 1) return;
  std::vector<std::size_t> order(count_);
  std::iota(order.begin(), order.end(), 0);
  bool sorted = true;
  for (std::size_t i = 1; i < count_ && sorted; ++i) {
    sorted = lex_less(row(i - 1), row(i));
  }
  if (sorted) return;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(row(a), row(b)); });
  std::vector<Element> out;
  out.reserve(data_.size());
  std::size_t kept = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto r = row(order[i]);
    if (kept > 0 && std::equal(r.begin(), r.end(), out.end() - static_cast<std::ptrdiff_t>(w))) {
      continue;
    }
    out.insert(out.end(), r.begin(), r.end());
    ++kept;
  }
  data_ = std::move(out);
  count_ = kept;
}

Tuple Team::row_tuple(std::size_t i) const {
  auto r = row(i);
  return Tuple(r.begin(), r.end());
}

Assignment Team::assignment(std::size_t i) const { return Assignment(vars_, row_tuple(i)); }

std::optional<std::size_t> Team::column(std::string_view var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

std::size_t Team::column_or_throw(std::string_view var) const {
  auto c = column(var);
  if (!c) fail("variable '" + std::string(var) + "' is not in the team domain");
  return *c;
}

bool Team::contains(std::span<const Element> r) const {
  if (r.size() != width()) return false;
  if (width() == 0) return count_ > 0;
  std::size_t lo = 0, hi = count_;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (lex_less(row(mid), r)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < count_ && std::equal(r.begin(), r.end(), row(lo).begin());
}

bool Team::is_subteam_of(const Team& other) const {
  if (vars_ != other.vars_) return false;
  if (width() == 0) return count_ <= other.count_;
  for (std::size_t i = 0; i < count_; ++i) {
    if (!other.contains(row(i))) return false;
  }
  return true;
}

Team Team::select(const std::vector<bool>& keep) const {
  Team t(vars_);
  if (width() == 0) {
    t.count_ = (count_ > 0 && !keep.empty() && keep[0]) ? 1 : 0;
    return t;
  }
  for (std::size_t i = 0; i < count_; ++i) {
    if (keep[i]) {
      auto r = row(i);
      t.data_.insert(t.data_.end(), r.begin(), r.end());
      ++t.count_;
    }
  }
  return t;
}

Team Team::select_mask(std::uint64_t mask) const {
  std::vector<bool> keep(count_);
  for (std::size_t i = 0; i < count_; ++i) keep[i] = (mask >> i) & 1U;
  return select(keep);
}

std::size_t Team::hash() const {
  std::size_t seed = count_ * 0x9e3779b97f4a7c15ULL + vars_.size();
  for (const auto& v : vars_) seed ^= std::hash<std::string>{}(v) + 0x9e3779b9 + (seed << 6) + (seed >> 2);
  for (Element e : data_) seed ^= e + 0x9e3779b9 + (seed << 6) + (seed >> 2);
  return seed;
}

std::strong_ordering Team::operator<=>(const Team& other) const {
  if (auto c = vars_ <=> other.vars_; c != 0) return c;
  if (auto c = count_ <=> other.count_; c != 0) return c;
  return data_ <=> other.data_;
}

Team extend_team(const Team& team, const std::string& var, const WitnessFn& witnesses) {
  require(!team.has_var(var), "variable '" + var + "' is already in the team domain");
  auto vars = team.vars();
  vars.push_back(var);
  std::vector<Element> data;
  for (std::size_t i = 0; i < team.size(); ++i) {
    auto r = team.row(i);
    auto values = witnesses(r);
    if (values.empty()) fail("empty witness set");
    for (Element a : values) {
      data.insert(data.end(), r.begin(), r.end());
      data.push_back(a);
    }
  }
  return Team::from_flat(std::move(vars), std::move(data));
}

Team duplicate_team(const Team& team, const std::string& var, Element domain_size) {
  require(!team.has_var(var), "variable '" + var + "' is already in the team domain");
  return rebind_all(team, var, domain_size);
}

Team rebind_all(const Team& team, const std::string& var, Element domain_size) {
  auto col = team.column(var);
  auto vars = team.vars();
  if (!col) vars.push_back(var);
  const std::size_t w = vars.size();
  std::vector<Element> data;
  data.reserve(team.size() * domain_size * w);
  for (std::size_t i = 0; i < team.size(); ++i) {
    auto r = team.row(i);
    for (Element a = 0; a < domain_size; ++a) {
      data.insert(data.end(), r.begin(), r.end());
      if (col) {
        data[data.size() - w + *col] = a;
      } else {
        data.push_back(a);
      }
    }
  }
  return Team::from_flat(std::move(vars), std::move(data));
}

Team restrict_team(const Team& team, const std::vector<std::string>& keep) {
  std::vector<std::size_t> cols;
  std::vector<std::string> vars;
  for (const auto& v : keep) {
    require(team.has_var(v), "cannot restrict to '" + v + "': not in the team domain");
  }
  for (std::size_t c = 0; c < team.width(); ++c) {
    if (std::find(keep.begin(), keep.end(), team.vars()[c]) != keep.end()) {
      cols.push_back(c);
      vars.push_back(team.vars()[c]);
    }
  }
  if (cols.size() == team.width()) return team;
  std::vector<Element> data;
  data.reserve(team.size() * cols.size());
  for (std::size_t i = 0; i < team.size(); ++i) {
    auto r = team.row(i);
    for (std::size_t c : cols) data.push_back(r[c]);
  }
  return Team::from_flat(std::move(vars), std::move(data), team.size());
}

Team team_union(const Team& a, const Team& b) {
  require(a.vars() == b.vars(), "union of teams over different domains");
  std::vector<Element> data = a.data();
  data.insert(data.end(), b.data().begin(), b.data().end());
  return Team::from_flat(a.vars(), std::move(data), a.size() + b.size());
}

}  // namespace teamlogic
