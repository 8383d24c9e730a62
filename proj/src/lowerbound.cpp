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

#include "treewalk/lowerbound.hpp"

#include <limits>
#include <string>
#include <vector>

#include "treewalk/error.hpp"

namespace treewalk {

namespace {

constexpr std::int64_t kMaxK = (std::numeric_limits<Vertex>::max() - 1) / 4;

void require_k(std::int64_t k) {
  if (k < 1) throw InvalidInput("k must be at least 1, got " + std::to_string(k));
}

}  // namespace

LowerBoundInstance make_gk(std::int64_t k) {
  require_k(k);
  if (k > kMaxK) throw InvalidInput("k too large");
  const auto n = static_cast<Vertex>(4 * k + 1);
  const auto kk = static_cast<Vertex>(k);

  std::vector<Edge> links;
  for (Vertex i = 0; i + 2 <= kk; ++i) {
    links.push_back({4 * i + 4, 4 * i + 5});
    links.push_back({4 * i + 3, 4 * i + 6});
  }

  std::vector<Edge> edges = {{0, 1}, {0, 2}};
  for (Vertex i = 0; i < kk; ++i) {
    edges.push_back({4 * i + 1, 4 * i + 2});
    edges.push_back({4 * i + 2, 4 * i + 3});
    edges.push_back({4 * i + 3, 4 * i + 4});
    edges.push_back(make_edge(4 * i + 4, 4 * i + 1));
  }
  edges.insert(edges.end(), links.begin(), links.end());

  std::vector<Edge> path;
  for (Vertex i = 0; i < n - 1; ++i) path.push_back(gk_path_edge(i));

  std::vector<Edge> tree_b = {{0, 1}, {0, 2}};
  for (Vertex i = 0; i < kk; ++i) {
    tree_b.push_back({4 * i + 1, 4 * i + 4});
    tree_b.push_back({4 * i + 2, 4 * i + 3});
  }
  tree_b.insert(tree_b.end(), links.begin(), links.end());

  return LowerBoundInstance{
      k, Graph(n, edges), 0, RootedSpanningTree::from_edges(n, 0, path),
      RootedSpanningTree::from_edges(n, 0, tree_b)};
}

std::int64_t lower_bound_value(std::int64_t k) {
  require_k(k);
  if (k > (std::int64_t{1} << 30)) throw InvalidInput("k too large");
  return 2 * k * (k - 1);
}

}  // namespace treewalk
