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

#include "treewalk/walk.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "treewalk/error.hpp"

namespace treewalk {

namespace {

std::atomic<std::uint64_t> g_leaf_claim_violations{0};

Vertex highest_neighbor(const Graph& g, const StNumbering& num, Vertex v) {
  const auto adjacent = g.neighbors(v);
  return *std::max_element(adjacent.begin(), adjacent.end(),
                           [&](Vertex x, Vertex y) {
                             return num.position(x) < num.position(y);
                           });
}

Vertex lowest_neighbor(const Graph& g, const StNumbering& num, Vertex v) {
  const auto adjacent = g.neighbors(v);
  return *std::min_element(adjacent.begin(), adjacent.end(),
                           [&](Vertex x, Vertex y) {
                             return num.position(x) < num.position(y);
                           });
}

void require_numbering(const Graph& g, const StNumbering& num) {
  if (num.size() != g.num_vertices() ||
      !validate_st_numbering(g, num, num.first(), num.last())) {
    throw InvalidInput("numbering is not an st-numbering of the graph");
  }
}

void require_tree(const Graph& g, const RootedSpanningTree& t,
                  const char* name) {
  if (auto why = spanning_tree_violation(g, t)) {
    throw InvalidInput(std::string(name) + " is not a spanning tree: " + *why);
  }
}

// Follows a fixed walk through a parent map and records the moves.
class TreeCursor {
 public:
  explicit TreeCursor(const RootedSpanningTree& start)
      : root_(start.root()),
        parent_(start.parents().begin(), start.parents().end()),
        children_(parent_.size(), 0) {
    for (Vertex v = 0; v < static_cast<Vertex>(parent_.size()); ++v) {
      if (v != root_) ++children_[parent_[v]];
    }
  }

  void reattach(Vertex v, Vertex new_parent) {
    if (children_[v] != 0) {
      ++g_leaf_claim_violations;
      throw LeafClaimViolation(v, snapshot().to_string());
    }
    const Vertex old_parent = parent_[v];
    if (old_parent == new_parent) return;
    moves_.push_back({v, old_parent, new_parent});
    --children_[old_parent];
    ++children_[new_parent];
    parent_[v] = new_parent;
  }

  RootedSpanningTree snapshot() const {
    return RootedSpanningTree(root_, parent_);
  }
  std::vector<LeafMove> take_moves() { return std::move(moves_); }

 private:
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> children_;
  std::vector<LeafMove> moves_;
};

}  // namespace

RootedSpanningTree canonical_tree(const Graph& g, const StNumbering& num) {
  require_numbering(g, num);
  const Vertex n = g.num_vertices();
  std::vector<Vertex> parent(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    if (v == num.first()) continue;
    parent[v] = v == num.last() ? num.first() : highest_neighbor(g, num, v);
  }
  return RootedSpanningTree(num.first(), std::move(parent));
}

RootedSpanningTree milestone_tree(const Graph& g, const StNumbering& num,
                                  const RootedSpanningTree& t_prime,
                                  const VertexMask& members) {
  const Vertex n = g.num_vertices();
  std::vector<Vertex> parent(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    if (v == num.first()) continue;
    if (members[v]) {
      parent[v] = t_prime.parent(v);
    } else {
      parent[v] = v == num.last() ? num.first() : highest_neighbor(g, num, v);
    }
  }
  return RootedSpanningTree(num.first(), std::move(parent));
}

BoundaryEdge select_boundary_edge(const RootedSpanningTree& t_prime,
                                  const VertexMask& members,
                                  const StNumbering& num) {
  BoundaryEdge best;
  for (Vertex v = 0; v < t_prime.num_vertices(); ++v) {
    if (members[v]) continue;
    // An outside vertex touches the connected member set only through its
    // parent edge, since the root is a member.
    const Vertex p = t_prime.parent(v);
    if (!members[p]) continue;
    if (best.outside == kNoVertex ||
        num.position(v) > num.position(best.outside)) {
      best = {p, v};
    }
  }
  if (best.outside == kNoVertex) {
    throw Error("no boundary edge leaves the member set");
  }
  return best;
}

std::vector<MilestoneState> milestones(const RootedSpanningTree& t_prime,
                                       const StNumbering& num) {
  const Vertex n = t_prime.num_vertices();
  std::vector<MilestoneState> out;
  out.reserve(n);
  VertexMask members(n, false);
  members[t_prime.root()] = true;
  for (Vertex k = 1; k <= n; ++k) {
    MilestoneState state{k, members, std::nullopt};
    if (k < n) {
      state.boundary = select_boundary_edge(t_prime, members, num);
      members[state.boundary->outside] = true;
    }
    out.push_back(std::move(state));
  }
  return out;
}

GapResult gap_sequence(const RootedSpanningTree& t_k, const VertexMask& members,
                       const RootedSpanningTree& t_prime,
                       const StNumbering& num, const Graph& g) {
  const Vertex n = g.num_vertices();
  if (!members[num.first()] || t_k.root() != num.first() ||
      t_prime.root() != num.first()) {
    throw InvalidInput("member set and trees must contain the root v_1");
  }
  if (t_k != milestone_tree(g, num, t_prime, members)) {
    throw InvalidInput("tree is not the milestone tree of the member set");
  }
  const BoundaryEdge boundary = select_boundary_edge(t_prime, members, num);

  TreeCursor cursor(t_k);
  std::vector<Vertex> lowered;
  for (Vertex position = 1; position <= n; ++position) {
    const Vertex v = num.at(position);
    if (members[v]) continue;
    if (v == boundary.outside) {
      cursor.reattach(v, boundary.inside);
      break;
    }
    if (v == num.last()) {
      throw Error("v_n reached before the boundary vertex");
    }
    const Vertex low = lowest_neighbor(g, num, v);
    if (num.position(low) >= position) {
      throw Error("vertex " + std::to_string(v) + " has no lower neighbor");
    }
    cursor.reattach(v, low);
    lowered.push_back(v);
  }
  for (auto it = lowered.rbegin(); it != lowered.rend(); ++it) {
    cursor.reattach(*it, highest_neighbor(g, num, *it));
  }

  GapResult result{boundary, cursor.take_moves(), cursor.snapshot()};
  VertexMask grown = members;
  grown[boundary.outside] = true;
  if (result.next != milestone_tree(g, num, t_prime, grown)) {
    throw Error("gap did not end at the next milestone tree");
  }
  return result;
}

WalkSequence walk_from_canonical(const Graph& g, const StNumbering& num,
                                 const RootedSpanningTree& t_prime) {
  require_numbering(g, num);
  require_tree(g, t_prime, "target");
  if (t_prime.root() != num.first()) {
    throw InvalidInput("target must be rooted at the first numbered vertex");
  }
  const Vertex n = g.num_vertices();
  WalkSequence seq;
  seq.trees.push_back(canonical_tree(g, num));
  VertexMask members(n, false);
  members[num.first()] = true;
  for (Vertex k = 1; k < n; ++k) {
    GapResult gap = gap_sequence(seq.trees.back(), members, t_prime, num, g);
    for (const LeafMove& m : gap.moves) {
      seq.trees.push_back(seq.trees.back().reparented(m.vertex, m.new_parent));
      seq.moves.push_back(m);
    }
    members[gap.boundary.outside] = true;
  }
  if (seq.trees.back() != t_prime) {
    throw Error("walk did not end at the target tree");
  }
  return seq;
}

WalkSequence walk(const Graph& g, Vertex a, const RootedSpanningTree& from,
                  const RootedSpanningTree& to) {
  if (!g.contains(a)) throw InvalidInput("root out of range");
  if (from.root() != a || to.root() != a) {
    throw InvalidInput("both trees must be rooted at " + std::to_string(a));
  }
  require_tree(g, from, "source");
  require_tree(g, to, "target");
  if (g.num_vertices() > 2 && !is_biconnected(g)) {
    throw NotBiconnected("graph is not biconnected");
  }
  if (from == to) return WalkSequence{{from}, {}};

  const StNumbering num = st_numbering(g, a, g.neighbors(a).front());
  WalkSequence back = walk_from_canonical(g, num, from);
  WalkSequence forth = walk_from_canonical(g, num, to);

  WalkSequence seq;
  seq.trees.reserve(back.trees.size() + forth.trees.size() - 1);
  seq.moves.reserve(back.moves.size() + forth.moves.size());
  seq.trees.assign(back.trees.rbegin(), back.trees.rend());
  for (auto it = back.moves.rbegin(); it != back.moves.rend(); ++it) {
    seq.moves.push_back(it->reversed());
  }
  seq.trees.insert(seq.trees.end(), forth.trees.begin() + 1,
                   forth.trees.end());
  seq.moves.insert(seq.moves.end(), forth.moves.begin(), forth.moves.end());
  return seq;
}

std::uint64_t leaf_claim_violations() { return g_leaf_claim_violations; }

std::string WalkReport::to_string() const {
  std::ostringstream out;
  out << "trees: " << num_trees << "\n";
  out << "moves: " << num_moves << "\n";
  out << "source: " << (source_matches ? "match" : "endpoint mismatch") << "\n";
  out << "target: " << (target_matches ? "match" : "endpoint mismatch") << "\n";
  const auto count = [](const std::vector<bool>& flags) {
    return std::count(flags.begin(), flags.end(), true);
  };
  out << "valid trees: " << count(tree_valid) << "/" << tree_valid.size()
      << "\n";
  out << "adjacent steps (intersection): " << count(step_adjacent) << "/"
      << step_adjacent.size() << "\n";
  out << "adjacent steps (leaf move): " << count(step_adjacent_via_move) << "/"
      << step_adjacent_via_move.size() << "\n";
  out << "consistent moves: " << count(step_move_consistent) << "/"
      << step_move_consistent.size() << "\n";
  for (const std::string& failure : failures) out << "FAIL " << failure << "\n";
  out << (passed ? "PASS" : "FAIL") << "\n";
  return out.str();
}

WalkReport verify_walk(const Graph& g, Vertex a, const WalkSequence& seq,
                       const ExpectedEndpoints& expected) {
  WalkReport report;
  report.num_trees = seq.trees.size();
  report.num_moves = seq.moves.size();
  if (seq.trees.empty()) {
    report.failures.push_back("empty sequence");
    return report;
  }
  if (seq.moves.size() + 1 != seq.trees.size()) {
    report.failures.push_back("move count does not match tree count");
  }
  if (expected.source && seq.source() != *expected.source) {
    report.source_matches = false;
    report.failures.push_back("endpoint mismatch: first tree is not the source");
  }
  if (expected.target && seq.target() != *expected.target) {
    report.target_matches = false;
    report.failures.push_back("endpoint mismatch: last tree is not the target");
  }

  bool shapes_ok = true;
  for (std::size_t i = 0; i < seq.trees.size(); ++i) {
    const RootedSpanningTree& t = seq.trees[i];
    auto why = spanning_tree_violation(g, t);
    if (!why && t.root() != a) why = "not rooted at " + std::to_string(a);
    report.tree_valid.push_back(!why);
    if (why) {
      shapes_ok = shapes_ok && t.num_vertices() == g.num_vertices() &&
                  t.root() == a;
      report.failures.push_back("tree " + std::to_string(i) + ": " + *why);
    }
  }

  const std::size_t steps = seq.trees.size() - 1;
  for (std::size_t i = 0; i < steps; ++i) {
    const RootedSpanningTree& before = seq.trees[i];
    const RootedSpanningTree& after = seq.trees[i + 1];
    bool adjacent = false;
    bool via_move = false;
    if (shapes_ok && report.tree_valid[i] && report.tree_valid[i + 1]) {
      adjacent = trees_adjacent(before, after, a);
      via_move = trees_adjacent_via_move(before, after, a);
    }
    bool consistent = false;
    if (i < seq.moves.size()) {
      try {
        consistent = apply_leaf_move(before, seq.moves[i], g) == after;
      } catch (const InvalidMove&) {
        consistent = false;
      }
    }
    report.step_adjacent.push_back(adjacent);
    report.step_adjacent_via_move.push_back(via_move);
    report.step_move_consistent.push_back(consistent);
    if (!adjacent || !via_move) {
      report.failures.push_back("step " + std::to_string(i) +
                                ": trees are not adjacent");
    }
    if (!consistent) {
      report.failures.push_back("step " + std::to_string(i) +
                                ": recorded move does not produce next tree");
    }
  }
  report.passed = report.failures.empty();
  return report;
}

}  // namespace treewalk
