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

#include "treewalk/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "treewalk/error.hpp"

namespace treewalk {

namespace {

struct Line {
  int number;
  std::vector<long long> values;
};

// Splits text into non-empty, non-comment lines of decimal integers.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{}
                                         : text.substr(end + 1);
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || raw[first] == '#') continue;
    Line line{number, {}};
    std::size_t i = first;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      long long value = 0;
      auto [ptr, ec] = std::from_chars(raw.data() + i, raw.data() + raw.size(),
                                       value);
      const auto consumed = static_cast<std::size_t>(ptr - (raw.data() + i));
      if (ec != std::errc() ||
          (i + consumed < raw.size() && raw[i + consumed] != ' ' &&
           raw[i + consumed] != '\t' && raw[i + consumed] != '\r')) {
        throw ParseError(number, "expected decimal integers, got \"" +
                                     std::string(raw) + "\"");
      }
      line.values.push_back(value);
      i += consumed;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

void expect_arity(const Line& line, std::size_t arity) {
  if (line.values.size() != arity) {
    throw ParseError(line.number, "expected " + std::to_string(arity) +
                                      " integers, got " +
                                      std::to_string(line.values.size()));
  }
}

constexpr long long kMaxVertices = 1 << 24;

struct TreeParse {
  RootedSpanningTree tree;
  std::size_t next_line;
};

TreeParse parse_tree_lines(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(0, "missing header \"n root\"");
  expect_arity(lines[0], 2);
  const long long n = lines[0].values[0];
  const long long root = lines[0].values[1];
  if (n < 2 || n > kMaxVertices) {
    throw ParseError(lines[0].number, "vertex count out of range");
  }
  if (root < 0 || root >= n) {
    throw ParseError(lines[0].number, "root out of range");
  }
  if (lines.size() < static_cast<std::size_t>(n)) {
    throw ParseError(lines.back().number,
                     "expected " + std::to_string(n - 1) + " parent lines");
  }
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<bool> assigned(n, false);
  for (long long i = 1; i < n; ++i) {
    const Line& line = lines[i];
    expect_arity(line, 2);
    const long long child = line.values[0];
    const long long p = line.values[1];
    if (child < 0 || child >= n || p < 0 || p >= n) {
      throw ParseError(line.number, "vertex id out of range");
    }
    if (child == root) throw ParseError(line.number, "root cannot have a parent");
    if (assigned[child]) {
      throw ParseError(line.number, "vertex " + std::to_string(child) +
                                        " already has a parent");
    }
    if (child == p) throw ParseError(line.number, "vertex is its own parent");
    assigned[child] = true;
    parent[child] = static_cast<Vertex>(p);
  }
  return {RootedSpanningTree(static_cast<Vertex>(root), std::move(parent)),
          static_cast<std::size_t>(n)};
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing header \"n m\"");
  expect_arity(lines[0], 2);
  const long long n = lines[0].values[0];
  const long long m = lines[0].values[1];
  if (n < 2 || n > kMaxVertices) {
    throw ParseError(lines[0].number, "vertex count must be at least 2");
  }
  if (m < 0) throw ParseError(lines[0].number, "negative edge count");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    const int where = lines.size() > static_cast<std::size_t>(m) + 1
                          ? lines[m + 1].number
                          : lines.back().number;
    throw ParseError(where, "header declares " + std::to_string(m) +
                                " edges, found " +
                                std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_arity(line, 2);
    const long long u = line.values[0];
    const long long v = line.values[1];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(line.number, "vertex id out of range");
    }
    if (u == v) throw ParseError(line.number, "self-loop");
    const Edge e = make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) throw ParseError(line.number, "duplicate edge");
    edges.push_back(e);
  }
  return Graph(static_cast<Vertex>(n), edges);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

RootedSpanningTree parse_tree(std::string_view text) {
  const auto lines = tokenize(text);
  auto parsed = parse_tree_lines(lines);
  if (parsed.next_line != lines.size()) {
    throw ParseError(lines[parsed.next_line].number,
                     "unexpected line after tree");
  }
  return std::move(parsed.tree);
}

std::string format_tree(const RootedSpanningTree& t) {
  std::ostringstream out;
  out << t.num_vertices() << ' ' << t.root() << '\n';
  for (Vertex v = 0; v < t.num_vertices(); ++v) {
    if (v != t.root()) out << v << ' ' << t.parent(v) << '\n';
  }
  return out.str();
}

MoveStream parse_move_stream(std::string_view text) {
  const auto lines = tokenize(text);
  auto parsed = parse_tree_lines(lines);
  std::vector<LeafMove> moves;
  for (std::size_t i = parsed.next_line; i < lines.size(); ++i) {
    expect_arity(lines[i], 3);
    const auto& x = lines[i].values;
    for (long long value : x) {
      if (value < 0 || value >= parsed.tree.num_vertices()) {
        throw ParseError(lines[i].number, "vertex id out of range");
      }
    }
    moves.push_back({static_cast<Vertex>(x[0]), static_cast<Vertex>(x[1]),
                     static_cast<Vertex>(x[2])});
  }
  return {std::move(parsed.tree), std::move(moves)};
}

std::string format_move_stream(const RootedSpanningTree& initial,
                               const std::vector<LeafMove>& moves) {
  std::string out = format_tree(initial);
  for (const LeafMove& m : moves) {
    out += std::to_string(m.vertex) + ' ' + std::to_string(m.old_parent) +
           ' ' + std::to_string(m.new_parent) + '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << contents;
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace treewalk
