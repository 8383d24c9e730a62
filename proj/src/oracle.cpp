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

#include "treewalk/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace treewalk {

namespace {

using boost::multiprecision::cpp_int;

constexpr char16_t kMaxCode = std::numeric_limits<char16_t>::max();

void require_rooted(const Graph& g, Vertex a, const RootedSpanningTree& t) {
  if (t.root() != a) {
    throw InvalidInput("tree not rooted at " + std::to_string(a));
  }
  if (auto why = spanning_tree_violation(g, t)) {
    throw InvalidInput("not a spanning tree: " + *why);
  }
}

// Union-find without path compression so that unions can be rolled back.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(Vertex n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  Vertex find(Vertex v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  // Returns false when u and v are already joined.
  bool merge(Vertex u, Vertex v) {
    u = find(u);
    v = find(v);
    if (u == v) return false;
    if (size_[u] < size_[v]) std::swap(u, v);
    parent_[v] = u;
    size_[u] += size_[v];
    history_.push_back(v);
    return true;
  }

  void rollback() {
    const Vertex v = history_.back();
    history_.pop_back();
    size_[parent_[v]] -= size_[v];
    parent_[v] = v;
  }

 private:
  std::vector<Vertex> parent_;
  std::vector<Vertex> size_;
  std::vector<Vertex> history_;
};

class TreeEnumerator {
 public:
  TreeEnumerator(const Graph& g, Vertex root, std::uint64_t cap)
      : g_(g), root_(root), cap_(cap), forest_(g.num_vertices()) {}

  std::vector<RootedSpanningTree> run() {
    if (is_connected(g_)) extend(0);
    return std::move(trees_);
  }

 private:
  // Decides edges[i..] given the forest built from edges[0..i).
  void extend(std::size_t i) {
    const auto& edges = g_.edges();
    const std::size_t needed = g_.num_vertices() - 1 - chosen_.size();
    if (needed == 0) {
      record();
      return;
    }
    if (edges.size() - i < needed) return;
    const auto [u, v] = edges[i];
    if (forest_.merge(u, v)) {
      chosen_.push_back(edges[i]);
      extend(i + 1);
      chosen_.pop_back();
      forest_.rollback();
    }
    if (still_connectable(i + 1)) extend(i + 1);
  }

  // Whether the chosen forest plus edges[from..] still spans the graph.
  bool still_connectable(std::size_t from) const {
    const Vertex n = g_.num_vertices();
    std::vector<Vertex> parent(n);
    for (Vertex v = 0; v < n; ++v) parent[v] = forest_.find(v);
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    Vertex components = 0;
    for (Vertex v = 0; v < n; ++v) components += parent[v] == v;
    const auto& edges = g_.edges();
    for (std::size_t j = from; j < edges.size() && components > 1; ++j) {
      const Vertex x = find(edges[j].first);
      const Vertex y = find(edges[j].second);
      if (x != y) {
        parent[x] = y;
        --components;
      }
    }
    return components == 1;
  }

  void record() {
    if (trees_.size() >= cap_) throw CapExceeded(trees_.size() + 1, cap_);
    trees_.push_back(
        RootedSpanningTree::from_edges(g_.num_vertices(), root_, chosen_));
  }

  const Graph& g_;
  Vertex root_;
  std::uint64_t cap_;
  RollbackUnionFind forest_;
  std::vector<Edge> chosen_;
  std::vector<RootedSpanningTree> trees_;
};

}  // namespace

// Indexed set of encoded trees with leaf-move neighbor generation.
class TreeStateSpace {
 public:
  TreeStateSpace(const Graph& g, std::uint64_t cap) : g_(g), cap_(cap) {}

  // Index of code, inserting it when new. Sets `inserted`.
  std::uint32_t intern(const std::u16string& code, bool& inserted) {
    auto [it, fresh] = index_.try_emplace(code, 0);
    inserted = fresh;
    if (fresh) {
      if (codes_.size() >= cap_) throw CapExceeded(codes_.size() + 1, cap_);
      it->second = static_cast<std::uint32_t>(codes_.size());
      codes_.push_back(&it->first);
    }
    return it->second;
  }

  std::optional<std::uint32_t> find(const std::u16string& code) const {
    auto it = index_.find(code);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::u16string& code(std::uint32_t i) const { return *codes_[i]; }
  std::size_t size() const { return codes_.size(); }

  template <typename Visit>
  void for_each_neighbor(const std::u16string& code, Visit&& visit) const {
    const Vertex n = g_.num_vertices();
    const Vertex root = code[0];
    children_.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      if (v != root) ++children_[code[1 + v]];
    }
    std::u16string next = code;
    for (Vertex v = 0; v < n; ++v) {
      if (v == root || children_[v] != 0) continue;
      const Vertex current = code[1 + v];
      for (Vertex w : g_.neighbors(v)) {
        if (w == current) continue;
        next[1 + v] = static_cast<char16_t>(w);
        visit(next);
      }
      next[1 + v] = static_cast<char16_t>(current);
    }
  }

  static TreeKey key(std::u16string code) { return TreeKey(std::move(code)); }

 private:
  const Graph& g_;
  std::uint64_t cap_;
  // Map nodes are stable, so codes_ can point at the keys.
  std::unordered_map<std::u16string, std::uint32_t> index_;
  std::vector<const std::u16string*> codes_;
  mutable std::vector<Vertex> children_;
};

namespace {

struct BfsResult {
  std::uint64_t distance;
  std::vector<std::u16string> path;
};

// Searches from t until t_prime is found, or over the whole component when
// t_prime is absent (then `distance` is the eccentricity and `path` empty).
BfsResult bfs(const Graph& g, Vertex a, const RootedSpanningTree& t,
              const RootedSpanningTree* t_prime, std::uint64_t cap,
              bool keep_path, std::uint64_t* reached = nullptr) {
  require_rooted(g, a, t);
  if (t_prime) require_rooted(g, a, *t_prime);
  const std::u16string source = TreeKey(t).bytes();
  const std::u16string target = t_prime ? TreeKey(*t_prime).bytes() : u"";
  if (source == target) return {0, {source}};

  TreeStateSpace space(g, cap);
  std::vector<std::uint32_t> distance;
  std::vector<std::uint32_t> predecessor;
  bool inserted = false;
  space.intern(source, inserted);
  distance.push_back(0);
  if (keep_path) predecessor.push_back(0);

  std::deque<std::uint32_t> queue = {0};
  std::optional<std::uint32_t> found;
  while (!queue.empty() && !found) {
    const std::uint32_t current = queue.front();
    queue.pop_front();
    const std::u16string code = space.code(current);
    space.for_each_neighbor(code, [&](const std::u16string& next) {
      if (found) return;
      const std::uint32_t id = space.intern(next, inserted);
      if (!inserted) return;
      distance.push_back(distance[current] + 1);
      if (keep_path) predecessor.push_back(current);
      if (next == target) found = id;
      queue.push_back(id);
    });
  }
  if (!t_prime) {
    if (reached) *reached = space.size();
    return {distance.back(), {}};
  }
  if (!found) {
    throw TreeGraphDisconnected("target tree unreachable from source tree");
  }
  BfsResult result{distance[*found], {}};
  if (keep_path) {
    for (std::uint32_t id = *found;; id = predecessor[id]) {
      result.path.push_back(space.code(id));
      if (id == 0) break;
    }
    std::reverse(result.path.begin(), result.path.end());
  }
  return result;
}

}  // namespace

TreeKey::TreeKey(const RootedSpanningTree& t) {
  const Vertex n = t.num_vertices();
  if (n >= kMaxCode) throw InvalidInput("tree too large to encode");
  code_.resize(n + 1);
  code_[0] = static_cast<char16_t>(t.root());
  for (Vertex v = 0; v < n; ++v) {
    code_[1 + v] = static_cast<char16_t>(v == t.root() ? t.root() : t.parent(v));
  }
}

RootedSpanningTree TreeKey::tree() const {
  const Vertex root = code_[0];
  std::vector<Vertex> parent(code_.begin() + 1, code_.end());
  parent[root] = kNoVertex;
  return RootedSpanningTree(root, std::move(parent));
}

std::vector<RootedSpanningTree> enumerate_spanning_trees(const Graph& g,
                                                         Vertex root,
                                                         std::uint64_t cap) {
  if (!g.contains(root)) throw InvalidInput("root out of range");
  return TreeEnumerator(g, root, cap).run();
}

cpp_int count_spanning_trees_kirchhoff(const Graph& g) {
  // Laplacian with row and column 0 removed.
  const Vertex size = g.num_vertices() - 1;
  std::vector<std::vector<cpp_int>> m(size, std::vector<cpp_int>(size, 0));
  for (Vertex v = 1; v <= size; ++v) {
    m[v - 1][v - 1] = static_cast<long>(g.degree(v));
    for (Vertex w : g.neighbors(v)) {
      if (w != 0) m[v - 1][w - 1] = -1;
    }
  }
  // Bareiss elimination: every intermediate entry is a minor, so the
  // divisions below are exact.
  cpp_int previous = 1;
  int sign = 1;
  for (Vertex k = 0; k < size; ++k) {
    if (m[k][k] == 0) {
      Vertex pivot = k + 1;
      while (pivot < size && m[pivot][k] == 0) ++pivot;
      if (pivot == size) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (Vertex i = k + 1; i < size; ++i) {
      for (Vertex j = k + 1; j < size; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  return sign * m[size - 1][size - 1];
}

std::vector<RootedSpanningTree> adjacent_trees(const Graph& g,
                                               const RootedSpanningTree& t) {
  TreeStateSpace space(g, 0);
  std::vector<RootedSpanningTree> out;
  space.for_each_neighbor(TreeKey(t).bytes(), [&](const std::u16string& code) {
    out.push_back(TreeStateSpace::key(code).tree());
  });
  return out;
}

std::uint64_t tree_distance(const Graph& g, Vertex a,
                            const RootedSpanningTree& t,
                            const RootedSpanningTree& t_prime,
                            std::uint64_t cap) {
  return bfs(g, a, t, &t_prime, cap, false).distance;
}

WalkSequence shortest_walk(const Graph& g, Vertex a,
                           const RootedSpanningTree& t,
                           const RootedSpanningTree& t_prime,
                           std::uint64_t cap) {
  const BfsResult result = bfs(g, a, t, &t_prime, cap, true);
  WalkSequence seq;
  for (const std::u16string& code : result.path) {
    seq.trees.push_back(TreeStateSpace::key(code).tree());
  }
  for (std::size_t i = 0; i + 1 < seq.trees.size(); ++i) {
    const auto& before = seq.trees[i];
    const auto& after = seq.trees[i + 1];
    for (Vertex v = 0; v < before.num_vertices(); ++v) {
      if (before.parent(v) != after.parent(v)) {
        seq.moves.push_back({v, before.parent(v), after.parent(v)});
        break;
      }
    }
  }
  return seq;
}

Eccentricity tree_eccentricity(const Graph& g, Vertex a,
                               const RootedSpanningTree& t,
                               std::uint64_t cap) {
  Eccentricity out;
  out.eccentricity = bfs(g, a, t, nullptr, cap, false, &out.reached).distance;
  return out;
}

std::uint64_t tree_graph_diameter(const Graph& g, Vertex a, std::uint64_t cap) {
  const auto trees = enumerate_spanning_trees(g, a, cap);
  if (trees.empty()) throw InvalidInput("graph has no spanning tree");
  TreeStateSpace space(g, cap);
  bool inserted = false;
  for (const auto& t : trees) space.intern(TreeKey(t).bytes(), inserted);

  const std::size_t count = trees.size();
  std::vector<std::vector<std::uint32_t>> adjacency(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    space.for_each_neighbor(space.code(i), [&](const std::u16string& code) {
      const auto j = space.find(code);
      if (!j) throw Error("leaf move produced a tree missed by enumeration");
      adjacency[i].push_back(*j);
    });
  }

  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::uint64_t diameter = 0;
  std::vector<std::uint32_t> distance(count);
  std::vector<std::uint32_t> queue(count);
  for (std::uint32_t source = 0; source < count; ++source) {
    std::fill(distance.begin(), distance.end(), kUnseen);
    distance[source] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = source;
    while (head < tail) {
      const std::uint32_t v = queue[head++];
      for (std::uint32_t w : adjacency[v]) {
        if (distance[w] == kUnseen) {
          distance[w] = distance[v] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != count) {
      throw TreeGraphDisconnected("tree-adjacency graph is disconnected");
    }
    diameter = std::max<std::uint64_t>(diameter, distance[queue[tail - 1]]);
  }
  return diameter;
}

WalkAnalysis removal_times(const WalkSequence& seq,
                           std::span<const Edge> probes) {
  WalkAnalysis analysis;
  analysis.length = seq.trees.size();
  const Vertex n = seq.trees.empty() ? 0 : seq.trees.front().num_vertices();
  for (const Edge& e : probes) {
    if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n) {
      throw InvalidInput("probe edge out of range");
    }
    std::optional<std::size_t> time;
    for (std::size_t t = 0; t + 1 < seq.trees.size(); ++t) {
      if (seq.trees[t].has_edge(e.first, e.second) &&
          !seq.trees[t + 1].has_edge(e.first, e.second)) {
        time = t + 1;
        break;
      }
    }
    analysis.removal_times.push_back(time);
  }
  std::vector<std::size_t> finite;
  for (const auto& time : analysis.removal_times) {
    if (time) finite.push_back(*time);
  }
  std::sort(finite.begin(), finite.end());
  if (std::adjacent_find(finite.begin(), finite.end()) != finite.end()) {
    throw InvalidInput("two probed edges leave the sequence at the same step");
  }
  return analysis;
}

}  // namespace treewalk
