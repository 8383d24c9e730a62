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

#include "treewalk/connectivity.hpp"

#include <algorithm>
#include <list>
#include <string>

#include "treewalk/error.hpp"

namespace treewalk {

namespace {

// Iterative depth-first search recording preorder, parents and lowpoints.
// The root's first child is forced to `first_child` when it is given.
struct DfsTree {
  std::vector<Vertex> preorder;  // vertices in discovery order
  std::vector<Vertex> pre;       // discovery index, -1 when unreached
  std::vector<Vertex> parent;
  std::vector<Vertex> low;       // smallest discovery index reachable
  std::vector<Vertex> root_children;
};

DfsTree depth_first(const Graph& g, Vertex root, Vertex first_child) {
  const Vertex n = g.num_vertices();
  DfsTree dfs;
  dfs.pre.assign(n, -1);
  dfs.parent.assign(n, kNoVertex);
  dfs.low.assign(n, 0);
  dfs.preorder.reserve(n);

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  auto discover = [&](Vertex v, Vertex p) {
    dfs.pre[v] = static_cast<Vertex>(dfs.preorder.size());
    dfs.low[v] = dfs.pre[v];
    dfs.parent[v] = p;
    dfs.preorder.push_back(v);
    stack.push_back({v, 0});
    if (p == root) dfs.root_children.push_back(v);
  };

  discover(root, kNoVertex);
  if (first_child != kNoVertex) discover(first_child, root);
  while (!stack.empty()) {
    Frame& frame = stack.back();
    const auto adjacent = g.neighbors(frame.v);
    if (frame.next < adjacent.size()) {
      const Vertex w = adjacent[frame.next++];
      if (dfs.pre[w] < 0) {
        discover(w, frame.v);
      } else if (w != dfs.parent[frame.v]) {
        dfs.low[frame.v] = std::min(dfs.low[frame.v], dfs.pre[w]);
      }
      continue;
    }
    const Vertex v = frame.v;
    stack.pop_back();
    if (const Vertex p = dfs.parent[v]; p != kNoVertex) {
      dfs.low[p] = std::min(dfs.low[p], dfs.low[v]);
    }
  }
  return dfs;
}

bool no_cut_vertex(const DfsTree& dfs) {
  if (dfs.root_children.size() > 1) return false;
  for (Vertex v : dfs.preorder) {
    const Vertex p = dfs.parent[v];
    if (p == kNoVertex || dfs.parent[p] == kNoVertex) continue;
    // A child whose subtree cannot climb above p makes p a cut vertex.
    if (dfs.low[v] >= dfs.pre[p]) return false;
  }
  return true;
}

}  // namespace

bool is_biconnected(const Graph& g) {
  if (g.num_vertices() < 3) return false;
  const DfsTree dfs = depth_first(g, 0, kNoVertex);
  if (static_cast<Vertex>(dfs.preorder.size()) != g.num_vertices()) {
    return false;
  }
  return no_cut_vertex(dfs);
}

StNumbering::StNumbering(std::vector<Vertex> order)
    : order_(std::move(order)), position_(order_.size(), 0) {
  const auto n = static_cast<Vertex>(order_.size());
  for (Vertex i = 0; i < n; ++i) {
    const Vertex v = order_[i];
    if (v < 0 || v >= n || position_[v] != 0) {
      throw InvalidInput("numbering is not a permutation");
    }
    position_[v] = i + 1;
  }
}

// Lowpoint-sign construction: a DFS rooted at s whose first tree edge is
// (s, t) fixes preorder and lowpoints; each remaining vertex is then placed
// next to its DFS parent, on the side that its lowpoint's sign selects.
StNumbering st_numbering(const Graph& g, Vertex s, Vertex t) {
  if (!g.has_edge(s, t)) {
    throw InvalidInput("(" + std::to_string(s) + "," + std::to_string(t) +
                       ") is not an edge");
  }
  if (g.num_vertices() < 3) throw NotBiconnected("graph is a single edge");

  const DfsTree dfs = depth_first(g, s, t);
  if (static_cast<Vertex>(dfs.preorder.size()) != g.num_vertices() ||
      !no_cut_vertex(dfs)) {
    throw NotBiconnected("graph is not biconnected");
  }

  const Vertex n = g.num_vertices();
  std::list<Vertex> sequence = {s, t};
  std::vector<std::list<Vertex>::iterator> where(n, sequence.end());
  where[s] = sequence.begin();
  where[t] = std::next(sequence.begin());
  // true = minus.
  std::vector<bool> minus(n, false);
  minus[s] = true;
  for (Vertex v : dfs.preorder) {
    if (v == s || v == t) continue;
    const Vertex p = dfs.parent[v];
    const Vertex low_vertex = dfs.preorder[dfs.low[v]];
    if (minus[low_vertex]) {
      where[v] = sequence.insert(where[p], v);
      minus[p] = false;
    } else {
      where[v] = sequence.insert(std::next(where[p]), v);
      minus[p] = true;
    }
  }
  return StNumbering(std::vector<Vertex>(sequence.begin(), sequence.end()));
}

bool validate_st_numbering(const Graph& g, std::span<const Vertex> order,
                           Vertex s, Vertex t) {
  const Vertex n = g.num_vertices();
  if (static_cast<Vertex>(order.size()) != n) return false;
  std::vector<Vertex> position(n, 0);
  for (Vertex i = 0; i < n; ++i) {
    const Vertex v = order[i];
    if (v < 0 || v >= n || position[v] != 0) return false;
    position[v] = i + 1;
  }
  if (order.front() != s || order.back() != t || !g.has_edge(s, t)) {
    return false;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    bool lower = false;
    bool higher = false;
    for (Vertex w : g.neighbors(v)) {
      lower |= position[w] < position[v];
      higher |= position[w] > position[v];
    }
    if (!lower || !higher) return false;
  }
  return true;
}

}  // namespace treewalk
