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

#include <doctest.h>

#include <functional>
#include <random>

#include "support/corpus.hpp"
#include "treewalk/error.hpp"
#include "treewalk/generators.hpp"
#include "treewalk/graph.hpp"
#include "treewalk/lowerbound.hpp"

namespace treewalk {
namespace {

using testing::cycle;
using testing::triangle;

RootedSpanningTree tree(Vertex root, std::vector<Vertex> parent) {
  return RootedSpanningTree(root, std::move(parent));
}

// Every parent map over graph edges that reaches the root, by brute force
// over the product of neighbor choices.
std::vector<RootedSpanningTree> brute_force_trees(const Graph& g, Vertex root) {
  const Vertex n = g.num_vertices();
  std::vector<RootedSpanningTree> out;
  std::vector<Vertex> parent(n, kNoVertex);
  std::function<void(Vertex)> assign = [&](Vertex v) {
    if (v == n) {
      for (Vertex u = 0; u < n; ++u) {
        Vertex w = u;
        for (Vertex steps = 0; w != root && steps <= n; ++steps) w = parent[w];
        if (w != root) return;
      }
      out.emplace_back(root, parent);
      return;
    }
    if (v == root) {
      assign(v + 1);
      return;
    }
    for (Vertex w : g.neighbors(v)) {
      parent[v] = w;
      assign(v + 1);
    }
    parent[v] = kNoVertex;
  };
  assign(0);
  return out;
}

TEST_CASE("graph rejects malformed edge lists") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), InvalidInput);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidInput);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidInput);
  CHECK_THROWS_AS(Graph(1, {}), InvalidInput);
}

TEST_CASE("adjacency lists are sorted and consistent with the edge set") {
  const Graph g(5, {{4, 0}, {2, 0}, {0, 1}, {3, 2}});
  CHECK(std::vector<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()) ==
        std::vector<Vertex>{1, 2, 4});
  std::size_t total = 0;
  for (Vertex v = 0; v < 5; ++v) total += g.degree(v);
  CHECK(total == 2 * g.num_edges());
  CHECK(g.has_edge(2, 3));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(g.edges().front() == Edge{0, 1});
}

TEST_CASE("is_spanning_tree") {
  const Graph tri = triangle();
  CHECK(is_spanning_tree(tri, tree(0, {kNoVertex, 0, 0})));
  // Cycle 1 <-> 2 never reaches the root.
  CHECK_FALSE(is_spanning_tree(tri, tree(0, {kNoVertex, 2, 1})));
  // (0, 2) is not an edge of the 4-cycle.
  CHECK_FALSE(is_spanning_tree(cycle(4), tree(0, {kNoVertex, 0, 0, 2})));
  CHECK(spanning_tree_violation(cycle(4), tree(0, {kNoVertex, 0, 0, 2}))
            ->find("not a graph edge") != std::string::npos);
  CHECK_FALSE(is_spanning_tree(cycle(4), tree(0, {kNoVertex, 0, 1})));
}

TEST_CASE("tree shape checks") {
  CHECK_THROWS_AS(tree(0, {1, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(tree(0, {kNoVertex, 5, 0}), InvalidInput);
  CHECK_THROWS_AS(tree(3, {kNoVertex, 0, 0}), InvalidInput);
  const Edge path[] = {{0, 1}, {1, 2}};
  CHECK(RootedSpanningTree::from_edges(3, 2, path) == tree(2, {1, 2, kNoVertex}));
  const Edge broken[] = {{0, 1}, {0, 1}};
  CHECK_THROWS_AS(RootedSpanningTree::from_edges(3, 0, broken), InvalidInput);
}

TEST_CASE("apply_leaf_move") {
  const Graph tri = triangle();
  const auto t = tree(0, {kNoVertex, 2, 0});
  CHECK(apply_leaf_move(t, {1, 2, 0}, tri) == tree(0, {kNoVertex, 0, 0}));
  CHECK(apply_leaf_move(t, {1, 2, 2}, tri) == t);

  const auto chain = tree(0, {kNoVertex, 0, 1});
  CHECK_THROWS_AS(apply_leaf_move(chain, {1, 0, 2}, tri), InvalidMove);
  CHECK_THROWS_AS(apply_leaf_move(chain, {0, kNoVertex, 1}, tri), InvalidMove);
  CHECK_THROWS_AS(apply_leaf_move(chain, {2, 0, 0}, tri), InvalidMove);
  CHECK_THROWS_AS(apply_leaf_move(chain, {2, 1, 2}, tri), InvalidMove);
  // (3, 1) is not an edge of the 4-cycle.
  CHECK_THROWS_AS(apply_leaf_move(tree(0, {kNoVertex, 0, 1, 0}), {3, 0, 1},
                                  cycle(4)),
                  InvalidMove);
}

TEST_CASE("trees_adjacent examples") {
  const Graph tri = triangle();
  const auto star = tree(0, {kNoVertex, 0, 0});
  const auto hang = tree(0, {kNoVertex, 0, 1});
  CHECK(trees_adjacent(star, hang, 0));
  CHECK(trees_adjacent_via_move(star, hang, 0));
  CHECK(trees_adjacent(hang, hang, 0));
  CHECK(trees_adjacent_via_move(hang, hang, 0));

  // G_1: path 0-1-2-3-4 against {01, 02, 14, 23}; the common edges 01 and 23
  // leave only {0, 1} in the root's component.
  const LowerBoundInstance g1 = make_gk(1);
  CHECK_FALSE(trees_adjacent(g1.tree_a, g1.tree_b, 0));
  CHECK_FALSE(trees_adjacent_via_move(g1.tree_a, g1.tree_b, 0));

  // Two parents differ.
  const Graph k4 = testing::complete(4);
  CHECK_FALSE(trees_adjacent_via_move(tree(0, {kNoVertex, 0, 0, 0}),
                                      tree(0, {kNoVertex, 0, 1, 1}), 0));
  // One non-leaf parent differs: 1 carries 2 in both trees.
  const auto a = tree(0, {kNoVertex, 0, 1, 0});
  const auto b = tree(0, {kNoVertex, 3, 1, 0});
  REQUIRE(is_spanning_tree(k4, a));
  REQUIRE(is_spanning_tree(k4, b));
  CHECK_FALSE(trees_adjacent_via_move(a, b, 0));
  CHECK_FALSE(trees_adjacent(a, b, 0));

  CHECK_THROWS_AS(trees_adjacent(star, tree(1, {1, kNoVertex, 1}), 0),
                  InvalidInput);
  CHECK_THROWS_AS(trees_adjacent_via_move(star, tree(0, {kNoVertex, 0}), 0),
                  InvalidInput);
}

TEST_CASE("both adjacency checks agree on every rooted tree pair of small graphs") {
  for (const auto& [name, g] : testing::corpus()) {
    if (g.num_vertices() > 5) continue;
    for (Vertex root = 0; root < g.num_vertices(); ++root) {
      const auto trees = brute_force_trees(g, root);
      for (const auto& x : trees) {
        for (const auto& y : trees) {
          const bool by_intersection = trees_adjacent(x, y, root);
          CHECK(by_intersection == trees_adjacent_via_move(x, y, root));
          CHECK(by_intersection == trees_adjacent(y, x, root));
        }
      }
    }
  }
}

TEST_CASE("random leaf moves keep spanning trees and adjacency") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    const Graph g = random_biconnected_graph(
        std::uniform_int_distribution<Vertex>(4, 20)(rng), rng);
    RootedSpanningTree t = random_spanning_tree(g, 0, rng);
    for (int step = 0; step < 40; ++step) {
      std::vector<LeafMove> legal;
      for (Vertex v = 1; v < g.num_vertices(); ++v) {
        if (!t.is_leaf(v)) continue;
        for (Vertex w : g.neighbors(v)) legal.push_back({v, t.parent(v), w});
      }
      REQUIRE_FALSE(legal.empty());
      const LeafMove m = legal[std::uniform_int_distribution<std::size_t>(
          0, legal.size() - 1)(rng)];
      const RootedSpanningTree next = apply_leaf_move(t, m, g);
      CHECK(is_spanning_tree(g, next));
      CHECK(trees_adjacent(t, next, 0));
      CHECK(apply_leaf_move(next, m.reversed(), g) == t);
      t = next;
    }
  }
}

TEST_CASE("single-edge graph has one tree, adjacent only to itself") {
  const Graph edge(2, {{0, 1}});
  const auto only = tree(0, {kNoVertex, 0});
  CHECK(is_spanning_tree(edge, only));
  CHECK(trees_adjacent(only, only, 0));
  CHECK(brute_force_trees(edge, 0).size() == 1);
}

}  // namespace
}  // namespace treewalk
