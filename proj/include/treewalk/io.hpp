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

#ifndef TREEWALK_IO_HPP_
#define TREEWALK_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "treewalk/graph.hpp"

namespace treewalk {

// Graph file: optional '#' comment lines, then "n m", then m lines "u v".
// Throws ParseError naming the offending line.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

// Tree file: "n root", then n-1 lines "child parent".
RootedSpanningTree parse_tree(std::string_view text);
std::string format_tree(const RootedSpanningTree& t);

// Move stream: a tree in the tree file format followed by any number of
// lines "v old_parent new_parent".
struct MoveStream {
  RootedSpanningTree initial;
  std::vector<LeafMove> moves;
};
MoveStream parse_move_stream(std::string_view text);
std::string format_move_stream(const RootedSpanningTree& initial,
                               const std::vector<LeafMove>& moves);

// Throws Error when the file cannot be read.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace treewalk

#endif  // TREEWALK_IO_HPP_
