// Copyright 2026 The treewalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TREEWALK_LOWERBOUND_HPP_
#define TREEWALK_LOWERBOUND_HPP_

#include <cstdint>

#include "treewalk/graph.hpp"

namespace treewalk {

// The quadratic lower-bound family: a chain of k four-cycles on v_1..v_4k
// hung from v_0 by (v_0, v_1) and (v_0, v_2), consecutive cycles linked by
// (v_{4i+4}, v_{4i+5}) and (v_{4i+3}, v_{4i+6}). tree_a is the Hamiltonian
// path v_0 v_1 ... v_4k; tree_b is built from the cycle edges (v_{4i+1},
// v_{4i+4}), (v_{4i+2}, v_{4i+3}) plus the base and link edges. Both trees
// are rooted at v_0.
struct LowerBoundInstance {
  std::int64_t k;
  Graph graph;
  Vertex a;
  RootedSpanningTree tree_a;
  RootedSpanningTree tree_b;
};

// Throws InvalidInput when k < 1.
LowerBoundInstance make_gk(std::int64_t k);

// Path edge e_i = (v_i, v_{i+1}) of tree_a.
inline Edge gk_path_edge(Vertex i) { return {i, i + 1}; }

// 2k(k-1), the sum over i < k of 4k - (4i + 4). Throws InvalidInput when
// k < 1.
std::int64_t lower_bound_value(std::int64_t k);

}  // namespace treewalk

#endif  // TREEWALK_LOWERBOUND_HPP_
