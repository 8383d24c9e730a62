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

#include "treewalk/error.hpp"
#include "treewalk/generators.hpp"
#include "treewalk/io.hpp"
#include "treewalk/lowerbound.hpp"

namespace treewalk {
namespace {

int parse_error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST_CASE("parse_graph accepts the triangle with comments and blank lines") {
  const Graph g = parse_graph("# triangle\n3 3\n0 1\n\n1 2\n2 0\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  CHECK(g == Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST_CASE("parse_graph ignores edge order") {
  CHECK(parse_graph("3 2\n2 1\n0 1\n") == parse_graph("3 2\n0 1\n1 2\n"));
}

TEST_CASE("parse_graph reads the G_2 file") {
  const Graph g = parse_graph(format_graph(make_gk(2).graph));
  CHECK(g.num_vertices() == 9);
  CHECK(g.num_edges() == 12);
}

TEST_CASE("parse_graph errors name the offending line") {
  CHECK(parse_error_line("2 1\n0 0\n") == 2);
  CHECK(parse_error_line("3 2\n0 1\n1 0\n") == 3);
  CHECK(parse_error_line("3 1\n0 3\n") == 2);
  CHECK(parse_error_line("3 2\n0 1\n") == 2);
  CHECK(parse_error_line("3 1\n0 1\n1 2\n") == 3);
  CHECK(parse_error_line("# c\n3 x\n") == 2);
  CHECK(parse_error_line("3 1\n0 1 2\n") == 2);
  CHECK(parse_error_line("") == 0);
  try {
    parse_graph("2 1\n0 0\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
  }
}

TEST_CASE("tree files") {
  const RootedSpanningTree t = parse_tree("3 0\n1 0\n2 1\n");
  CHECK(t == RootedSpanningTree(0, {kNoVertex, 0, 1}));
  CHECK(parse_tree(format_tree(t)) == t);
  CHECK_THROWS_AS(parse_tree("3 0\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("3 0\n1 0\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("3 0\n0 1\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("3 0\n1 0\n2 1\n1 2\n"), ParseError);
}

TEST_CASE("move streams and graph files round-trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_biconnected_graph(5 + i, rng);
    CHECK(parse_graph(format_graph(g)) == g);
    const RootedSpanningTree t = random_spanning_tree(g, 0, rng);
    const std::vector<LeafMove> moves = {{1, 2, 3}, {4, 0, 1}};
    const MoveStream stream = parse_move_stream(format_move_stream(t, moves));
    CHECK(stream.initial == t);
    CHECK(stream.moves == moves);
  }
  CHECK_THROWS_AS(parse_move_stream("2 0\n1 0\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_move_stream("2 0\n1 0\n1 0 7\n"), ParseError);
}

}  // namespace
}  // namespace treewalk
