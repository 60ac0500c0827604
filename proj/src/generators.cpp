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

#include "teamlogic/generators.hpp"

#include <random>

#include "teamlogic/error.hpp"

namespace teamlogic {

Element encode_row_side(int k, RowSide rs) {
  require(rs.side != 0 && rs.side >= -k && rs.side <= k, "side out of range");
  require(rs.row >= 1, "row out of range");
  const int base = (rs.row - 1) * 2 * k;
  return static_cast<Element>(rs.side < 0 ? base + k + rs.side : base + k + rs.side - 1);
}

RowSide decode_row_side(int k, Element e) {
  const int idx = static_cast<int>(e);
  const int off = idx % (2 * k);
  const int row = idx / (2 * k) + 1;
  return off < k ? RowSide{row, off - k} : RowSide{row, off - k + 1};
}

Structure two_path_structure(int k, int n) {
  require(k >= 1 && n >= 1, "two-path structure needs k >= 1 and n >= 1");
  std::set<Tuple> edges;
  for (int row = 1; row <= n - 1; ++row) {
    for (int sign : {-1, 1}) {
      Tuple t;
      for (int r : {row, row + 1}) {
        for (int j = 1; j <= k; ++j) t.push_back(encode_row_side(k, {r, sign * j}));
      }
      edges.insert(std::move(t));
    }
  }
  Signature sig;
  sig.relations["E"] = 2 * k;
  std::map<std::string, Element> consts;
  for (int j = 1; j <= k; ++j) {
    sig.constants.push_back("b" + std::to_string(j));
    consts["b" + std::to_string(j)] = encode_row_side(k, {1, j});
  }
  for (int j = 1; j <= k; ++j) {
    sig.constants.push_back("c" + std::to_string(j));
    consts["c" + std::to_string(j)] = encode_row_side(k, {n, j});
  }
  GeneratorShape shape{GeneratorShape::Kind::TwoPath, k, n, 2};
  return Structure(std::move(sig), static_cast<Element>(2 * k * n), {{"E", std::move(edges)}},
                   std::move(consts), shape);
}

namespace {

Element clique_vertex(int k, int paths, int path, int row, int j) {
  if (paths == 1) return static_cast<Element>((row - 1) * k + (j - 1));
  return encode_row_side(k, {row, path == 1 ? j : -j});
}

}  // namespace

Structure clique_path_graph(int k, int n, int paths) {
  require(k >= 1 && n >= 1, "clique-path graph needs k >= 1 and n >= 1");
  require(paths == 1 || paths == 2, "clique-path graph supports 1 or 2 paths");
  std::set<Tuple> edges;
  for (int path = 1; path <= paths; ++path) {
    for (int row = 1; row <= n - 1; ++row) {
      std::vector<Element> members;
      for (int r : {row, row + 1}) {
        for (int j = 1; j <= k; ++j) members.push_back(clique_vertex(k, paths, path, r, j));
      }
      for (Element u : members) {
        for (Element v : members) {
          if (u != v) edges.insert({u, v});
        }
      }
    }
  }
  Signature sig;
  sig.relations["E"] = 2;
  std::map<std::string, Element> consts;
  auto add = [&](const std::string& name, Element e) {
    sig.constants.push_back(name);
    consts[name] = e;
  };
  for (int j = 1; j <= k; ++j) add("b" + std::to_string(j), clique_vertex(k, paths, 1, 1, j));
  for (int j = 1; j <= k; ++j) add("c" + std::to_string(j), clique_vertex(k, paths, 1, n, j));
  if (paths == 2) {
    for (int j = 1; j <= k; ++j) add("cp" + std::to_string(j), clique_vertex(k, paths, 2, n, j));
  }
  GeneratorShape shape{GeneratorShape::Kind::CliquePath, k, n, paths};
  return Structure(std::move(sig), static_cast<Element>(k * n * paths), {{"E", std::move(edges)}},
                   std::move(consts), shape);
}

int row_of(const Structure& s, Element e) {
  const auto& shape = s.shape();
  require(shape.has_value(), "row map is only defined on generated two-path structures");
  require(e < s.domain_size(), "element out of range");
  const int block = shape->paths == 2 ? 2 * shape->k : shape->k;
  return static_cast<int>(e) / block + 1;
}

std::vector<Element> epsilon_map(const Structure& s) {
  const auto& shape = s.shape();
  require(shape.has_value() && shape->paths == 2,
          "epsilon is only defined on generated structures with two paths");
  const int k = shape->k;
  std::vector<Element> perm(s.domain_size());
  for (Element e = 0; e < s.domain_size(); ++e) {
    RowSide rs = decode_row_side(k, e);
    perm[e] = encode_row_side(k, {rs.row, -rs.side});
  }
  return perm;
}

Structure random_graph(Element nodes, double edge_prob, std::uint64_t seed,
                       const std::map<std::string, Element>& constants) {
  require(nodes >= 1, "random graph needs at least one node");
  require(edge_prob >= 0.0 && edge_prob <= 1.0, "edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::set<Tuple> edges;
  for (Element u = 0; u < nodes; ++u) {
    for (Element v = 0; v < nodes; ++v) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < edge_prob) edges.insert({u, v});
    }
  }
  Signature sig;
  sig.relations["E"] = 2;
  for (const auto& [name, node] : constants) {
    require(node < nodes, "constant '" + name + "' maps to an out-of-range node");
    sig.constants.push_back(name);
  }
  return Structure(std::move(sig), nodes, {{"E", std::move(edges)}}, constants);
}

}  // namespace teamlogic
