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

#ifndef TREEWALK_WALK_HPP_
#define TREEWALK_WALK_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treewalk/connectivity.hpp"
#include "treewalk/graph.hpp"

namespace treewalk {

using VertexMask = std::vector<bool>;

// Edge of the target tree leaving the grown member set.
struct BoundaryEdge {
  Vertex inside = kNoVertex;
  Vertex outside = kNoVertex;
  bool operator==(const BoundaryEdge&) const = default;
};

// k-th stage of the growth of the target tree from its root: `members` holds
// k vertices forming a subtree of the target, `boundary` the edge that adds
// the next vertex (absent once every vertex is a member).
struct MilestoneState {
  Vertex k = 0;
  VertexMask members;
  std::optional<BoundaryEdge> boundary;
};

// Trees connected by leaf moves: moves[i] turns trees[i] into trees[i + 1].
struct WalkSequence {
  std::vector<RootedSpanningTree> trees;
  std::vector<LeafMove> moves;

  const RootedSpanningTree& source() const { return trees.front(); }
  const RootedSpanningTree& target() const { return trees.back(); }
  std::size_t num_moves() const { return moves.size(); }
};

// T+: v_n hangs from v_1, every other non-root vertex from its neighbor with
// the highest position. Rooted at v_1.
RootedSpanningTree canonical_tree(const Graph& g, const StNumbering& num);

// Members keep their parent from t_prime; every other vertex follows the
// canonical rule. With members = {root} this is canonical_tree.
RootedSpanningTree milestone_tree(const Graph& g, const StNumbering& num,
                                  const RootedSpanningTree& t_prime,
                                  const VertexMask& members);

// Among target-tree edges from members to non-members, the one whose outer
// endpoint has the highest position.
BoundaryEdge select_boundary_edge(const RootedSpanningTree& t_prime,
                                  const VertexMask& members,
                                  const StNumbering& num);

// The n stages S_1 = {root} through S_n = all vertices.
std::vector<MilestoneState> milestones(const RootedSpanningTree& t_prime,
                                       const StNumbering& num);

struct GapResult {
  BoundaryEdge boundary;
  std::vector<LeafMove> moves;
  RootedSpanningTree next;
};

// Leaf moves from the milestone tree of `members` to the milestone tree of
// members plus the next boundary vertex. Moves that would not change the
// parent are not emitted. Every processed vertex must be a leaf; otherwise
// LeafClaimViolation is thrown (and counted, see leaf_claim_violations).
GapResult gap_sequence(const RootedSpanningTree& t_k, const VertexMask& members,
                       const RootedSpanningTree& t_prime,
                       const StNumbering& num, const Graph& g);

// Concatenation of all gaps, from canonical_tree(g, num) to t_prime.
// At most n(n-1) moves.
WalkSequence walk_from_canonical(const Graph& g, const StNumbering& num,
                                 const RootedSpanningTree& t_prime);

// Walk from `from` to `to` through the canonical tree of the st-numbering
// on the edge (a, lowest-id neighbor of a). At most 2n(n-1) moves.
// Throws NotBiconnected or InvalidInput.
WalkSequence walk(const Graph& g, Vertex a, const RootedSpanningTree& from,
                  const RootedSpanningTree& to);

// Number of leaf-claim violations observed by gap_sequence in this process.
std::uint64_t leaf_claim_violations();

struct WalkReport {
  bool passed = false;
  std::size_t num_trees = 0;
  std::size_t num_moves = 0;
  bool source_matches = true;
  bool target_matches = true;
  // Per-tree spanning validity and per-step checks, index-aligned with the
  // sequence.
  std::vector<bool> tree_valid;
  std::vector<bool> step_adjacent;
  std::vector<bool> step_adjacent_via_move;
  std::vector<bool> step_move_consistent;
  std::vector<std::string> failures;

  std::string to_string() const;
};

struct ExpectedEndpoints {
  std::optional<RootedSpanningTree> source;
  std::optional<RootedSpanningTree> target;
};

// Checks every tree, every step (both adjacency formulations and the
// recorded move) and, when given, the endpoints. Never throws on bad
// sequences; failures are listed in the report.
WalkReport verify_walk(const Graph& g, Vertex a, const WalkSequence& seq,
                       const ExpectedEndpoints& expected = {});

}  // namespace treewalk

#endif  // TREEWALK_WALK_HPP_
