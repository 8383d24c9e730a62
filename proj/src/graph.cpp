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

#include "treewalk/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "treewalk/error.hpp"

namespace treewalk {

namespace {

class UnionFind {
 public:
  explicit UnionFind(Vertex n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void merge(Vertex u, Vertex v) {
    u = find(u);
    v = find(v);
    if (u == v) return;
    if (size_[u] < size_[v]) std::swap(u, v);
    parent_[v] = u;
    size_[u] += size_[v];
  }

  Vertex component_size(Vertex v) { return size_[find(v)]; }

 private:
  std::vector<Vertex> parent_;
  std::vector<Vertex> size_;
};

void check_same_shape(const RootedSpanningTree& t_a,
                      const RootedSpanningTree& t_b, Vertex a) {
  if (t_a.num_vertices() != t_b.num_vertices()) {
    throw InvalidInput("trees have different vertex counts");
  }
  if (t_a.root() != a || t_b.root() != a) {
    throw InvalidInput("trees are not rooted at vertex " + std::to_string(a));
  }
}

}  // namespace

Graph::Graph(Vertex n, std::span<const Edge> edges) : n_(n), adjacency_() {
  if (n < 2) throw InvalidInput("graph needs at least 2 vertices");
  adjacency_.resize(n);
  edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (!contains(u) || !contains(v)) {
      throw InvalidInput("edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ") has an endpoint out of range");
    }
    if (u == v) {
      throw InvalidInput("self-loop at vertex " + std::to_string(u));
    }
    edges_.push_back(make_edge(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidInput("duplicate edge (" + std::to_string(dup->first) + "," +
                       std::to_string(dup->second) + ")");
  }
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

bool is_connected(const Graph& g) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<Vertex> stack = {0};
  seen[0] = true;
  Vertex reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.num_vertices();
}

RootedSpanningTree::RootedSpanningTree(Vertex root, std::vector<Vertex> parent)
    : root_(root), parent_(std::move(parent)) {
  const auto n = static_cast<Vertex>(parent_.size());
  if (root < 0 || root >= n) {
    throw InvalidInput("root " + std::to_string(root) + " out of range");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == root) {
      if (parent_[v] != kNoVertex) throw InvalidInput("root has a parent");
    } else if (parent_[v] < 0 || parent_[v] >= n) {
      throw InvalidInput("vertex " + std::to_string(v) +
                         " has no valid parent");
    }
  }
}

RootedSpanningTree RootedSpanningTree::from_edges(Vertex n, Vertex root,
                                                  std::span<const Edge> edges) {
  if (root < 0 || root >= n) throw InvalidInput("root out of range");
  if (static_cast<Vertex>(edges.size()) != n - 1) {
    throw InvalidInput("a spanning tree on " + std::to_string(n) +
                       " vertices needs " + std::to_string(n - 1) + " edges");
  }
  std::vector<std::vector<Vertex>> adjacency(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
      throw InvalidInput("bad tree edge");
    }
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack = {root};
  seen[root] = true;
  Vertex reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      ++reached;
      stack.push_back(w);
    }
  }
  if (reached != n) throw InvalidInput("tree edges do not span all vertices");
  return RootedSpanningTree(root, std::move(parent));
}

std::vector<Edge> RootedSpanningTree::edges() const {
  std::vector<Edge> out;
  out.reserve(parent_.size());
  for (Vertex v = 0; v < num_vertices(); ++v) {
    if (v != root_) out.push_back(make_edge(v, parent_[v]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool RootedSpanningTree::is_leaf(Vertex v) const {
  return std::find(parent_.begin(), parent_.end(), v) == parent_.end();
}

RootedSpanningTree RootedSpanningTree::reparented(Vertex v, Vertex p) const {
  RootedSpanningTree copy = *this;
  copy.parent_[v] = p;
  return copy;
}

std::string RootedSpanningTree::to_string() const {
  std::ostringstream out;
  out << "{root " << root_;
  for (Vertex v = 0; v < num_vertices(); ++v) {
    if (v != root_) out << ", " << v << "->" << parent_[v];
  }
  out << "}";
  return out.str();
}

std::optional<std::string> spanning_tree_violation(
    const Graph& g, const RootedSpanningTree& t) {
  const Vertex n = g.num_vertices();
  if (t.num_vertices() != n) {
    return "tree has " + std::to_string(t.num_vertices()) +
           " vertices, graph has " + std::to_string(n);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == t.root()) continue;
    if (!g.has_edge(v, t.parent(v))) {
      return "(" + std::to_string(v) + "," + std::to_string(t.parent(v)) +
             ") is not a graph edge";
    }
  }
  // 0 = unvisited, 1 = on the current parent chain, 2 = reaches the root.
  std::vector<char> state(n, 0);
  state[t.root()] = 2;
  std::vector<Vertex> chain;
  for (Vertex v = 0; v < n; ++v) {
    Vertex u = v;
    while (state[u] == 0) {
      state[u] = 1;
      chain.push_back(u);
      u = t.parent(u);
    }
    if (state[u] == 1) {
      return "cycle through vertex " + std::to_string(u) +
             "; root unreachable";
    }
    for (Vertex w : chain) state[w] = 2;
    chain.clear();
  }
  return std::nullopt;
}

RootedSpanningTree apply_leaf_move(const RootedSpanningTree& t,
                                   const LeafMove& m, const Graph& g) {
  const Vertex v = m.vertex;
  if (v < 0 || v >= t.num_vertices()) {
    throw InvalidMove("vertex " + std::to_string(v) + " out of range");
  }
  if (v == t.root()) throw InvalidMove("cannot move the root");
  if (m.new_parent == v) throw InvalidMove("cannot attach a vertex to itself");
  if (t.parent(v) != m.old_parent) {
    throw InvalidMove("vertex " + std::to_string(v) + " has parent " +
                      std::to_string(t.parent(v)) + ", not " +
                      std::to_string(m.old_parent));
  }
  if (!t.is_leaf(v)) {
    throw InvalidMove("vertex " + std::to_string(v) + " is not a leaf");
  }
  if (!g.has_edge(v, m.new_parent)) {
    throw InvalidMove("(" + std::to_string(v) + "," +
                      std::to_string(m.new_parent) + ") is not a graph edge");
  }
  RootedSpanningTree result = t.reparented(v, m.new_parent);
  assert(!is_spanning_tree(g, t) || is_spanning_tree(g, result));
  return result;
}

bool trees_adjacent(const RootedSpanningTree& t_a,
                    const RootedSpanningTree& t_b, Vertex a) {
  check_same_shape(t_a, t_b, a);
  const Vertex n = t_a.num_vertices();
  UnionFind forest(n);
  for (Vertex v = 0; v < n; ++v) {
    if (v == a) continue;
    const Vertex p = t_a.parent(v);
    if (t_b.has_edge(v, p)) forest.merge(v, p);
  }
  return forest.component_size(a) >= n - 1;
}

bool trees_adjacent_via_move(const RootedSpanningTree& t_a,
                             const RootedSpanningTree& t_b, Vertex a) {
  check_same_shape(t_a, t_b, a);
  Vertex differing = kNoVertex;
  for (Vertex v = 0; v < t_a.num_vertices(); ++v) {
    if (t_a.parent(v) == t_b.parent(v)) continue;
    if (differing != kNoVertex) return false;
    differing = v;
  }
  if (differing == kNoVertex) return true;
  return t_a.is_leaf(differing) && t_b.is_leaf(differing);
}

}  // namespace treewalk
