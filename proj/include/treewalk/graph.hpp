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

#ifndef TREEWALK_GRAPH_HPP_
#define TREEWALK_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace treewalk {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

// Undirected edge, stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  // Throws InvalidInput on self-loops, duplicates, out-of-range ids or n < 2.
  Graph(Vertex n, std::span<const Edge> edges);
  Graph(Vertex n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  Vertex num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  // Normalized and sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(Vertex u, Vertex v) const;

  bool operator==(const Graph&) const = default;

 private:
  Vertex n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Returns true iff every vertex is reachable from vertex 0.
bool is_connected(const Graph& g);

// Spanning tree stored as a parent map rooted at a distinguished vertex.
// The constructor checks only the shape of the map (sizes and ranges);
// validity against a host graph is the job of is_spanning_tree.
class RootedSpanningTree {
 public:
  // parent[root] must be kNoVertex, every other entry in [0, n).
  RootedSpanningTree(Vertex root, std::vector<Vertex> parent);

  // Builds the parent map from an undirected edge list by orienting every
  // edge towards root. Throws InvalidInput unless the edges form a spanning
  // tree on n vertices.
  static RootedSpanningTree from_edges(Vertex n, Vertex root,
                                       std::span<const Edge> edges);

  Vertex root() const { return root_; }
  Vertex num_vertices() const { return static_cast<Vertex>(parent_.size()); }
  Vertex parent(Vertex v) const { return parent_[v]; }
  std::span<const Vertex> parents() const { return parent_; }

  // Undirected (child, parent) pairs, normalized and sorted.
  std::vector<Edge> edges() const;
  bool has_edge(Vertex u, Vertex v) const {
    return (u != root_ && parent_[u] == v) || (v != root_ && parent_[v] == u);
  }
  bool is_leaf(Vertex v) const;

  // Copy with parent(v) replaced by p; no validity checks.
  RootedSpanningTree reparented(Vertex v, Vertex p) const;

  std::string to_string() const;

  bool operator==(const RootedSpanningTree&) const = default;

 private:
  Vertex root_;
  std::vector<Vertex> parent_;
};

struct LeafMove {
  Vertex vertex = kNoVertex;
  Vertex old_parent = kNoVertex;
  Vertex new_parent = kNoVertex;

  LeafMove reversed() const { return {vertex, new_parent, old_parent}; }
  bool operator==(const LeafMove&) const = default;
};

// Empty when t is a spanning tree of g, otherwise a description of the first
// violated invariant.
std::optional<std::string> spanning_tree_violation(const Graph& g,
                                                   const RootedSpanningTree& t);
inline bool is_spanning_tree(const Graph& g, const RootedSpanningTree& t) {
  return !spanning_tree_violation(g, t).has_value();
}

// Detaches leaf m.vertex from m.old_parent and attaches it to m.new_parent.
// Throws InvalidMove when the move is not a legal leaf move in g.
RootedSpanningTree apply_leaf_move(const RootedSpanningTree& t,
                                   const LeafMove& m, const Graph& g);

// Tree adjacency from the intersection: true iff the component of a in the
// forest of edges common to both trees has at least n-1 vertices.
bool trees_adjacent(const RootedSpanningTree& t_a,
                    const RootedSpanningTree& t_b, Vertex a);

// Tree adjacency from the leaf-move formulation: the parent maps are equal,
// or differ at exactly one vertex v != a that is a leaf in both trees.
bool trees_adjacent_via_move(const RootedSpanningTree& t_a,
                             const RootedSpanningTree& t_b, Vertex a);

}  // namespace treewalk

#endif  // TREEWALK_GRAPH_HPP_
