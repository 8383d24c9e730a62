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

#include "treewalk/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "treewalk/error.hpp"

namespace treewalk {

Graph random_biconnected_graph(Vertex n, std::mt19937_64& rng,
                               double chord_density) {
  if (n < 3) throw InvalidInput("biconnected graphs need at least 3 vertices");
  auto uniform = [&](Vertex lo, Vertex hi) {
    return std::uniform_int_distribution<Vertex>(lo, hi)(rng);
  };

  std::set<Edge> edges;
  const Vertex cycle = uniform(3, std::max<Vertex>(3, n / 2));
  for (Vertex i = 0; i < cycle; ++i) edges.insert(make_edge(i, (i + 1) % cycle));
  Vertex used = cycle;
  while (used < n) {
    const Vertex length = uniform(1, std::min<Vertex>(n - used, 4));
    const Vertex x = uniform(0, used - 1);
    Vertex y = uniform(0, used - 2);
    if (y >= x) ++y;
    Vertex previous = x;
    for (Vertex i = 0; i < length; ++i) {
      edges.insert(make_edge(previous, used));
      previous = used++;
    }
    edges.insert(make_edge(previous, y));
  }

  const auto max_edges = static_cast<std::size_t>(n) * (n - 1) / 2;
  const auto chords = static_cast<std::size_t>(
      chord_density * static_cast<double>(max_edges - edges.size()));
  for (std::size_t i = 0; i < chords && edges.size() < max_edges; ++i) {
    const Vertex u = uniform(0, n - 1);
    const Vertex v = uniform(0, n - 1);
    if (u != v) edges.insert(make_edge(u, v));
  }

  std::vector<Vertex> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::vector<Edge> shuffled;
  shuffled.reserve(edges.size());
  for (const auto& [u, v] : edges) shuffled.push_back({relabel[u], relabel[v]});
  return Graph(n, shuffled);
}

RootedSpanningTree random_spanning_tree(const Graph& g, Vertex root,
                                        std::mt19937_64& rng) {
  if (!g.contains(root)) throw InvalidInput("root out of range");
  if (!is_connected(g)) throw InvalidInput("graph is disconnected");
  const Vertex n = g.num_vertices();
  std::vector<bool> in_tree(n, false);
  std::vector<Vertex> next(n, kNoVertex);
  in_tree[root] = true;
  for (Vertex start = 0; start < n; ++start) {
    // Loop-erased random walk: overwriting next[] erases loops.
    for (Vertex u = start; !in_tree[u]; u = next[u]) {
      const auto adjacent = g.neighbors(u);
      next[u] = adjacent[std::uniform_int_distribution<std::size_t>(
          0, adjacent.size() - 1)(rng)];
    }
    for (Vertex u = start; !in_tree[u]; u = next[u]) in_tree[u] = true;
  }
  return RootedSpanningTree(root, std::move(next));
}

}  // namespace treewalk
