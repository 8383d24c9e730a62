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

#ifndef TREEWALK_CONNECTIVITY_HPP_
#define TREEWALK_CONNECTIVITY_HPP_

#include <span>
#include <vector>

#include "treewalk/graph.hpp"

namespace treewalk {

// True iff g is connected, has no cut vertex and at least 3 vertices.
// A single edge is deliberately reported as not biconnected.
bool is_biconnected(const Graph& g);

// Ordering v_1..v_n of the vertices. Positions are 1-based.
class StNumbering {
 public:
  // Throws InvalidInput unless order is a permutation of 0..n-1.
  explicit StNumbering(std::vector<Vertex> order);

  Vertex size() const { return static_cast<Vertex>(order_.size()); }
  Vertex at(Vertex position) const { return order_[position - 1]; }
  Vertex position(Vertex v) const { return position_[v]; }
  Vertex first() const { return order_.front(); }
  Vertex last() const { return order_.back(); }
  std::span<const Vertex> order() const { return order_; }

  bool operator==(const StNumbering&) const = default;

 private:
  std::vector<Vertex> order_;
  std::vector<Vertex> position_;
};

// st-numbering for the edge (s, t): s first, t last, and every other vertex
// has a neighbor on each side. Deterministic for a fixed graph.
// Throws NotBiconnected or InvalidInput when (s, t) is not an edge.
StNumbering st_numbering(const Graph& g, Vertex s, Vertex t);

// Checks all st-numbering conditions against g. Accepts arbitrary input.
bool validate_st_numbering(const Graph& g, std::span<const Vertex> order,
                           Vertex s, Vertex t);
inline bool validate_st_numbering(const Graph& g, const StNumbering& num,
                                  Vertex s, Vertex t) {
  return validate_st_numbering(g, num.order(), s, t);
}

}  // namespace treewalk

#endif  // TREEWALK_CONNECTIVITY_HPP_
