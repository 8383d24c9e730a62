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

#include <algorithm>
#include <numeric>
#include <random>

#include "support/corpus.hpp"
#include "treewalk/connectivity.hpp"
#include "treewalk/error.hpp"
#include "treewalk/generators.hpp"
#include "treewalk/lowerbound.hpp"

namespace treewalk {
namespace {

using testing::cycle;
using testing::path;
using testing::triangle;

bool connected_without(const Graph& g, Vertex removed) {
  const Vertex n = g.num_vertices();
  const Vertex start = removed == 0 ? 1 : 0;
  std::vector<bool> seen(n, false);
  seen[start] = true;
  std::vector<Vertex> stack = {start};
  Vertex reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (w != removed && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n - (removed == kNoVertex ? 0 : 1);
}

bool brute_force_biconnected(const Graph& g) {
  if (g.num_vertices() < 3 || !connected_without(g, kNoVertex)) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!connected_without(g, v)) return false;
  }
  return true;
}

// The definition read literally, independent of validate_st_numbering.
bool is_st_order(const Graph& g, const std::vector<Vertex>& order, Vertex s,
                 Vertex t) {
  const auto n = static_cast<Vertex>(order.size());
  if (order.front() != s || order.back() != t || !g.has_edge(s, t)) return false;
  for (Vertex i = 1; i + 1 < n; ++i) {
    bool below = false;
    bool above = false;
    for (Vertex j = 0; j < n; ++j) {
      if (!g.has_edge(order[i], order[j])) continue;
      below |= j < i;
      above |= j > i;
    }
    if (!below || !above) return false;
  }
  return true;
}

TEST_CASE("is_biconnected examples") {
  CHECK(is_biconnected(triangle()));
  CHECK_FALSE(is_biconnected(path(3)));
  CHECK_FALSE(is_biconnected(Graph(2, {{0, 1}})));
  for (int k = 1; k <= 3; ++k) CHECK(is_biconnected(make_gk(k).graph));
  CHECK_FALSE(is_biconnected(Graph(4, {{0, 1}, {1, 2}, {2, 0}})));
}

TEST_CASE("is_biconnected agrees with deleting each vertex") {
  for (const auto& [name, g] : testing::corpus()) {
    if (g.num_vertices() > 7) continue;
    CAPTURE(name);
    CHECK(is_biconnected(g) == brute_force_biconnected(g));
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Vertex n = std::uniform_int_distribution<Vertex>(3, 7)(rng);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (std::bernoulli_distribution(0.45)(rng)) edges.push_back({u, v});
      }
    }
    const Graph g(n, edges);
    CHECK(is_biconnected(g) == brute_force_biconnected(g));
  }
}

TEST_CASE("st_numbering examples") {
  CHECK(st_numbering(triangle(), 0, 2).order()[1] == 1);
  const StNumbering c4 = st_numbering(cycle(4), 0, 3);
  CHECK(c4.first() == 0);
  CHECK(c4.last() == 3);
  CHECK(validate_st_numbering(cycle(4), c4, 0, 3));
  CHECK(c4.position(c4.at(2)) == 2);
  CHECK_THROWS_AS(st_numbering(path(3), 0, 1), NotBiconnected);
  CHECK_THROWS_AS(st_numbering(cycle(4), 0, 2), InvalidInput);
  CHECK_THROWS_AS(st_numbering(Graph(2, {{0, 1}}), 0, 1), NotBiconnected);
}

TEST_CASE("st_numbering is deterministic") {
  const Graph g = make_gk(3).graph;
  CHECK(st_numbering(g, 0, 1) == st_numbering(g, 0, 1));
}

TEST_CASE("validate_st_numbering examples") {
  const Graph c4 = cycle(4);
  const std::vector<Vertex> straight = {0, 1, 2, 3};
  const std::vector<Vertex> crossed = {0, 2, 1, 3};
  CHECK(validate_st_numbering(c4, straight, 0, 3));
  CHECK_FALSE(validate_st_numbering(c4, crossed, 0, 3));
  CHECK_FALSE(validate_st_numbering(c4, straight, 1, 3));
  CHECK_FALSE(validate_st_numbering(c4, std::vector<Vertex>{0, 1, 1, 3}, 0, 3));
  CHECK_FALSE(validate_st_numbering(c4, std::vector<Vertex>{0, 1, 3}, 0, 3));
  // (0, 2) is not an edge.
  CHECK_FALSE(validate_st_numbering(c4, std::vector<Vertex>{0, 1, 3, 2}, 0, 2));
}

TEST_CASE("validate_st_numbering accepts exactly the st-orders on small graphs") {
  for (const auto& [name, g] : testing::corpus()) {
    if (g.num_vertices() > 5) continue;
    CAPTURE(name);
    std::vector<Vertex> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    do {
      for (const auto& [u, v] : g.edges()) {
        for (const auto& [s, t] : {Edge{u, v}, Edge{v, u}}) {
          CHECK(validate_st_numbering(g, order, s, t) ==
                is_st_order(g, order, s, t));
        }
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("st_numbering is valid for every edge of random biconnected graphs") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_biconnected_graph(
        std::uniform_int_distribution<Vertex>(3, 40)(rng), rng);
    for (const auto& [u, v] : g.edges()) {
      CHECK(validate_st_numbering(g, st_numbering(g, u, v), u, v));
      CHECK(validate_st_numbering(g, st_numbering(g, v, u), v, u));
    }
  }
}

}  // namespace
}  // namespace treewalk
