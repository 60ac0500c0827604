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

#ifndef TEAMLOGIC_GENERATORS_HPP
#define TEAMLOGIC_GENERATORS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "teamlogic/structures.hpp"

namespace teamlogic {

// Elements of the two-path structure are pairs (row, side) with row in
// 1..n and side in {-k..-1, 1..k}. They are flattened as
//   (row-1)*2k + (k+side)      for side < 0
//   (row-1)*2k + (k+side-1)    for side > 0
// so each row occupies a contiguous block of 2k indices, negative side first.
struct RowSide {
  int row;
  int side;
  bool operator==(const RowSide&) const = default;
};

Element encode_row_side(int k, RowSide rs);
RowSide decode_row_side(int k, Element e);

// Two disjoint paths of length n linked by a 2k-ary relation "E". Constants
// b1..bk sit at (1,1..k) and c1..ck at (n,1..k).
Structure two_path_structure(int k, int n);

// Binary-graph realization: consecutive rows of one path form a 2k-clique.
// paths = 2 uses the two-path element encoding (path 1 = positive side);
// paths = 1 uses (row-1)*k + (j-1). Constants b1..bk at row 1 of path 1,
// c1..ck at row n of path 1, and for paths = 2 cp1..cpk at row n of path 2.
Structure clique_path_graph(int k, int n, int paths);

// Row of an element of a generated structure (1-based).
int row_of(const Structure& s, Element e);

// The self-inverse, row-preserving swap of the two paths: (I,j) -> (I,-j).
// Entry e of the result is the image of element e.
std::vector<Element> epsilon_map(const Structure& s);

// Random digraph on `nodes` vertices with binary relation "E". The stream is
// std::mt19937_64 seeded with `seed`; pairs (u,v) are visited in row-major
// order and each draws one 64-bit word w, keeping the edge iff
// (w >> 11) * 2^-53 < edge_prob.
Structure random_graph(Element nodes, double edge_prob, std::uint64_t seed,
                       const std::map<std::string, Element>& constants = {});

}  // namespace teamlogic

#endif  // TEAMLOGIC_GENERATORS_HPP
