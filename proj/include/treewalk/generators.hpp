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

#ifndef TREEWALK_GENERATORS_HPP_
#define TREEWALK_GENERATORS_HPP_

#include <random>

#include "treewalk/graph.hpp"

namespace treewalk {

// Random biconnected graph on n >= 3 vertices grown by an open ear
// decomposition (a cycle, then paths between distinct existing vertices),
// followed by random chords. Vertex ids are shuffled.
Graph random_biconnected_graph(Vertex n, std::mt19937_64& rng,
                               double chord_density = 0.15);

// Uniform spanning tree rooted at root (Wilson's algorithm).
RootedSpanningTree random_spanning_tree(const Graph& g, Vertex root,
                                        std::mt19937_64& rng);

}  // namespace treewalk

#endif  // TREEWALK_GENERATORS_HPP_
