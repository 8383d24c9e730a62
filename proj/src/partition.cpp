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

#include "treewalk/partition.hpp"

#include <algorithm>

#include "treewalk/connectivity.hpp"
#include "treewalk/error.hpp"

namespace treewalk {

namespace {

bool induces_connected(const Graph& g, const std::vector<Vertex>& part) {
  if (part.empty()) return false;
  std::vector<bool> inside(g.num_vertices(), false);
  for (Vertex v : part) inside[v] = true;
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<Vertex> stack = {part.front()};
  seen[part.front()] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (inside[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == part.size();
}

}  // namespace

Partition2 partition2(const Graph& g, Vertex u1, Vertex u2, Vertex n1) {
  const Vertex n = g.num_vertices();
  if (!g.contains(u1) || !g.contains(u2) || u1 == u2) {
    throw InvalidInput("u1 and u2 must be distinct vertices");
  }
  if (n1 < 1 || n1 > n - 1) {
    throw InvalidInput("n1 must lie in [1, " + std::to_string(n - 1) + "]");
  }
  if (!is_biconnected(g)) throw NotBiconnected("graph is not biconnected");

  Partition2 p;
  std::vector<Vertex> order;
  if (g.has_edge(u1, u2)) {
    p.strategy = "st-edge";
    const StNumbering num = st_numbering(g, u1, u2);
    order.assign(num.order().begin(), num.order().end());
  } else {
    // Adding an edge keeps the graph biconnected; the extra edge joins the
    // two ends of the numbering, so neither side relies on it.
    p.strategy = "virtual-edge";
    std::vector<Edge> edges = g.edges();
    edges.push_back(make_edge(u1, u2));
    const Graph augmented(n, edges);
    const StNumbering num = st_numbering(augmented, u1, u2);
    order.assign(num.order().begin(), num.order().end());
  }
  p.first.assign(order.begin(), order.begin() + n1);
  p.second.assign(order.begin() + n1, order.end());
  std::sort(p.first.begin(), p.first.end());
  std::sort(p.second.begin(), p.second.end());
  if (auto why = partition_violation(g, u1, u2, n1, p)) {
    throw Error("partition failed validation: " + *why);
  }
  return p;
}

std::optional<std::string> partition_violation(const Graph& g, Vertex u1,
                                               Vertex u2, Vertex n1,
                                               const Partition2& p) {
  const Vertex n = g.num_vertices();
  if (static_cast<Vertex>(p.first.size()) != n1) {
    return "first part has " + std::to_string(p.first.size()) +
           " vertices, expected " + std::to_string(n1);
  }
  std::vector<int> owner(n, 0);
  for (Vertex v : p.first) {
    if (!g.contains(v) || owner[v] != 0) return "first part is not a set";
    owner[v] = 1;
  }
  for (Vertex v : p.second) {
    if (!g.contains(v)) return "second part has an invalid vertex";
    if (owner[v] != 0) return "parts overlap at vertex " + std::to_string(v);
    owner[v] = 2;
  }
  if (std::count(owner.begin(), owner.end(), 0) != 0) {
    return "parts do not cover every vertex";
  }
  if (owner[u1] != 1) return "u1 is not in the first part";
  if (owner[u2] != 2) return "u2 is not in the second part";
  if (!induces_connected(g, p.first)) return "first part is disconnected";
  if (!induces_connected(g, p.second)) return "second part is disconnected";
  return std::nullopt;
}

}  // namespace treewalk
