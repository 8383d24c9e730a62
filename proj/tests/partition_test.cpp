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

#include <random>

#include "support/corpus.hpp"
#include "treewalk/error.hpp"
#include "treewalk/generators.hpp"
#include "treewalk/lowerbound.hpp"
#include "treewalk/partition.hpp"

namespace treewalk {
namespace {

TEST_CASE("partition2 examples") {
  const Partition2 single = partition2(testing::triangle(), 0, 1, 1);
  CHECK(single.first == std::vector<Vertex>{0});
  CHECK(single.second == std::vector<Vertex>{1, 2});
  CHECK(single.strategy == "st-edge");

  const Graph c4 = testing::cycle(4);
  const Partition2 halves = partition2(c4, 0, 3, 2);
  CHECK(halves.first.size() == 2);
  CHECK_FALSE(partition_violation(c4, 0, 3, 2, halves));

  const LowerBoundInstance g2 = make_gk(2);
  const Partition2 p = partition2(g2.graph, 0, 8, 4);
  CHECK(p.strategy == "virtual-edge");
  CHECK_FALSE(partition_violation(g2.graph, 0, 8, 4, p));
}

TEST_CASE("partition2 errors") {
  const Graph c4 = testing::cycle(4);
  CHECK_THROWS_AS(partition2(c4, 0, 0, 2), InvalidInput);
  CHECK_THROWS_AS(partition2(c4, 0, 1, 0), InvalidInput);
  CHECK_THROWS_AS(partition2(c4, 0, 1, 4), InvalidInput);
  CHECK_THROWS_AS(partition2(testing::path(4), 0, 3, 2), NotBiconnected);
}

TEST_CASE("partition_violation catches each broken requirement") {
  const Graph c4 = testing::cycle(4);
  CHECK(partition_violation(c4, 0, 2, 2, {{0, 1}, {2}, ""}));
  CHECK(partition_violation(c4, 0, 2, 2, {{0, 1}, {1, 2, 3}, ""}));
  CHECK(partition_violation(c4, 0, 2, 2, {{2, 3}, {0, 1}, ""}));
  // {0, 2} is not connected in the 4-cycle.
  const auto disconnected =
      partition_violation(c4, 0, 1, 2, {{0, 2}, {1, 3}, ""});
  REQUIRE(disconnected);
  CHECK(disconnected->find("disconnected") != std::string::npos);
  CHECK_FALSE(partition_violation(c4, 0, 2, 2, {{0, 1}, {2, 3}, ""}));
}

TEST_CASE("partition2 on random instances with every size") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 40; ++round) {
    const Vertex n = std::uniform_int_distribution<Vertex>(3, 25)(rng);
    const Graph g = random_biconnected_graph(n, rng);
    const Vertex u1 = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    Vertex u2 = std::uniform_int_distribution<Vertex>(0, n - 2)(rng);
    if (u2 >= u1) ++u2;
    for (Vertex n1 = 1; n1 < n; ++n1) {
      const Partition2 p = partition2(g, u1, u2, n1);
      CHECK_FALSE(partition_violation(g, u1, u2, n1, p));
    }
  }
}

}  // namespace
}  // namespace treewalk
