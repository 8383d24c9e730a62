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

#ifndef TREEWALK_PARTITION_HPP_
#define TREEWALK_PARTITION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "treewalk/graph.hpp"

namespace treewalk {

// Split of the vertex set into two connected parts.
struct Partition2 {
  std::vector<Vertex> first;   // sorted, contains u1
  std::vector<Vertex> second;  // sorted, contains u2
  // "st-edge" when (u1, u2) is an edge of g, "virtual-edge" when the
  // numbering was computed on g plus the edge (u1, u2).
  std::string strategy;
};

// Connected partition with |first| = n1, u1 in first and u2 in second:
// the first n1 vertices of an st-numbering from u1 to u2. Both sides stay
// connected because every vertex after the first has a lower neighbor and
// every vertex before the last has a higher one.
// Throws NotBiconnected or InvalidInput (u1 == u2, n1 outside [1, n-1]).
Partition2 partition2(const Graph& g, Vertex u1, Vertex u2, Vertex n1);

// Empty when p satisfies every partition requirement, otherwise the first
// violated one.
std::optional<std::string> partition_violation(const Graph& g, Vertex u1,
                                               Vertex u2, Vertex n1,
                                               const Partition2& p);

}  // namespace treewalk

#endif  // TREEWALK_PARTITION_HPP_
