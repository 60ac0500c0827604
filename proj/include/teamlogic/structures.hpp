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

#ifndef TEAMLOGIC_STRUCTURES_HPP
#define TEAMLOGIC_STRUCTURES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace teamlogic {

using Element = std::uint32_t;
using Tuple = std::vector<Element>;

struct Signature {
  std::map<std::string, int> relations;  // name -> arity
  std::vector<std::string> constants;

  void validate() const;
  bool operator==(const Signature&) const = default;
};

// Records which generator built a structure, so that the path-swapping
// automorphism and row map can refuse arbitrary inputs.
struct GeneratorShape {
  enum class Kind { TwoPath, CliquePath };
  Kind kind = Kind::TwoPath;
  int k = 1;
  int n = 1;
  int paths = 2;

  bool operator==(const GeneratorShape&) const = default;
};

class Structure {
 public:
  Structure(Signature signature, Element domain_size,
            std::map<std::string, std::set<Tuple>> relations,
            std::map<std::string, Element> constants,
            std::optional<GeneratorShape> shape = std::nullopt);

  const Signature& signature() const { return signature_; }
  Element domain_size() const { return domain_size_; }
  const std::optional<GeneratorShape>& shape() const { return shape_; }

  bool has_relation(std::string_view name) const;
  int arity(std::string_view name) const;
  const std::set<Tuple>& tuples(std::string_view name) const;
  bool holds(std::string_view name, std::span<const Element> args) const;

  bool has_constant(std::string_view name) const;
  Element constant(std::string_view name) const;
  const std::map<std::string, Element>& constants() const { return constants_; }

  // Same relations, some constants reinterpreted. Drops the generator shape
  // only if the domain changed (it cannot here), so the shape is kept.
  Structure with_constants(const std::map<std::string, Element>& overrides) const;

  bool operator==(const Structure& other) const;

 private:
  struct Relation {
    int arity = 0;
    std::set<Tuple> tuples;
    std::vector<char> dense;  // row-major membership table, empty if too big
  };

  const Relation& relation(std::string_view name) const;

  Signature signature_;
  Element domain_size_;
  std::map<std::string, Relation, std::less<>> relations_;
  std::map<std::string, Element> constants_;
  std::optional<GeneratorShape> shape_;
};

// A single assignment: ordered variables with one value each.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::vector<std::string> vars, Tuple values);

  const std::vector<std::string>& vars() const { return vars_; }
  const Tuple& values() const { return values_; }
  bool binds(std::string_view var) const;
  Element at(std::string_view var) const;
  // s(a/x): overwrites x if bound, appends it otherwise.
  Assignment with(const std::string& var, Element value) const;

  bool operator==(const Assignment&) const = default;

 private:
  std::vector<std::string> vars_;
  Tuple values_;
};

// A finite set of assignments over a fixed ordered variable list. Rows are
// kept sorted and unique; the value is immutable once built.
class Team {
 public:
  // The empty team over `vars`.
  explicit Team(std::vector<std::string> vars = {});
  Team(std::vector<std::string> vars, std::vector<Tuple> rows);

  // {∅}: one row, no variables.
  static Team unit();
  // Takes `data` as |rows| * |vars| values in row-major order; sorts and
  // deduplicates. `rows` is only consulted when vars is empty.
  static Team from_flat(std::vector<std::string> vars, std::vector<Element> data,
                        std::size_t rows = 0);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t width() const { return vars_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  std::span<const Element> row(std::size_t i) const {
    return {data_.data() + i * width(), width()};
  }
  Tuple row_tuple(std::size_t i) const;
  Assignment assignment(std::size_t i) const;
  const std::vector<Element>& data() const { return data_; }

  std::optional<std::size_t> column(std::string_view var) const;
  std::size_t column_or_throw(std::string_view var) const;
  bool has_var(std::string_view var) const { return column(var).has_value(); }

  bool contains(std::span<const Element> row) const;
  bool is_subteam_of(const Team& other) const;

  // Rows i with keep[i] set.
  Team select(const std::vector<bool>& keep) const;
  Team select_mask(std::uint64_t mask) const;

  std::size_t hash() const;

  bool operator==(const Team& other) const {
    return vars_ == other.vars_ && count_ == other.count_ && data_ == other.data_;
  }
  std::strong_ordering operator<=>(const Team& other) const;

 private:
  void canonicalize();

  std::vector<std::string> vars_;
  std::size_t count_ = 0;
  std::vector<Element> data_;
};

struct TeamHash {
  std::size_t operator()(const Team& t) const { return t.hash(); }
};

using WitnessFn = std::function<std::vector<Element>(std::span<const Element>)>;

// X[F/x]. Throws on an empty witness set or when x is already bound.
Team extend_team(const Team& team, const std::string& var, const WitnessFn& witnesses);
// X[M/x].
Team duplicate_team(const Team& team, const std::string& var, Element domain_size);
// X ↾ V, columns kept in the order of Dom(X).
Team restrict_team(const Team& team, const std::vector<std::string>& keep);
Team team_union(const Team& a, const Team& b);
// Renames or reorders nothing; drops column `var` then re-adds it with every
// value, i.e. X[M/x] where x may already be bound.
Team rebind_all(const Team& team, const std::string& var, Element domain_size);

}  // namespace teamlogic

#endif  // TEAMLOGIC_STRUCTURES_HPP
