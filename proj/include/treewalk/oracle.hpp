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

#ifndef TREEWALK_ORACLE_HPP_
#define TREEWALK_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "treewalk/error.hpp"
#include "treewalk/graph.hpp"
#include "treewalk/walk.hpp"

namespace treewalk {

inline constexpr std::uint64_t kDefaultStateCap = 10'000'000;

// The tree-adjacency graph was found disconnected. Cannot happen for a
// biconnected host graph.
class TreeGraphDisconnected : public Error {
 public:
  using Error::Error;
};

// Fixed-length encoding of a parent map: the root, then the parent of every
// vertex in id order (the root's own slot holds the root).
class TreeKey {
 public:
  explicit TreeKey(const RootedSpanningTree& t);

  RootedSpanningTree tree() const;
  const std::u16string& bytes() const { return code_; }

  bool operator==(const TreeKey&) const = default;

 private:
  friend class TreeStateSpace;
  explicit TreeKey(std::u16string code) : code_(std::move(code)) {}
  std::u16string code_;
};

struct TreeKeyHash {
  std::size_t operator()(const TreeKey& key) const {
    return std::hash<std::u16string>{}(key.bytes());
  }
};

// All spanning trees of g rooted at root, each exactly once. Empty when g is
// disconnected. Throws CapExceeded when there are more than cap trees.
std::vector<RootedSpanningTree> enumerate_spanning_trees(
    const Graph& g, Vertex root, std::uint64_t cap = kDefaultStateCap);

// Matrix-tree theorem with fraction-free elimination in exact integers.
boost::multiprecision::cpp_int count_spanning_trees_kirchhoff(const Graph& g);

// Every tree reachable from t by one leaf move (a leaf other than the root
// moved to a different graph neighbor).
std::vector<RootedSpanningTree> adjacent_trees(const Graph& g,
                                               const RootedSpanningTree& t);

// Minimum number of leaf moves from t to t_prime, by breadth-first search.
// Throws CapExceeded, or TreeGraphDisconnected if t_prime is unreachable.
std::uint64_t tree_distance(const Graph& g, Vertex a,
                            const RootedSpanningTree& t,
                            const RootedSpanningTree& t_prime,
                            std::uint64_t cap = kDefaultStateCap);

// A shortest sequence from t to t_prime, recovered from BFS predecessors.
WalkSequence shortest_walk(const Graph& g, Vertex a,
                           const RootedSpanningTree& t,
                           const RootedSpanningTree& t_prime,
                           std::uint64_t cap = kDefaultStateCap);

struct Eccentricity {
  std::uint64_t eccentricity = 0;  // largest distance from the start tree
  std::uint64_t reached = 0;       // trees reachable from the start tree
};

// Full breadth-first search from t. On a biconnected graph `reached` is the
// number of spanning trees.
Eccentricity tree_eccentricity(const Graph& g, Vertex a,
                               const RootedSpanningTree& t,
                               std::uint64_t cap = kDefaultStateCap);

// Largest distance between any two spanning trees rooted at a.
std::uint64_t tree_graph_diameter(const Graph& g, Vertex a,
                                  std::uint64_t cap = kDefaultStateCap);

// removal_times[i] is the smallest 1-based step t with probes[i] in tree t and
// absent from tree t + 1, or nullopt. length is the number of trees.
struct WalkAnalysis {
  std::vector<std::optional<std::size_t>> removal_times;
  std::size_t length = 0;
};

// Throws InvalidInput when two probes share a finite removal time, which no
// sequence of adjacent trees allows.
WalkAnalysis removal_times(const WalkSequence& seq, std::span<const Edge> probes);

}  // namespace treewalk

#endif  // TREEWALK_ORACLE_HPP_
