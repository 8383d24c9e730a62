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

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "treewalk/connectivity.hpp"
#include "treewalk/error.hpp"
#include "treewalk/experiment.hpp"
#include "treewalk/generators.hpp"
#include "treewalk/io.hpp"
#include "treewalk/lowerbound.hpp"
#include "treewalk/oracle.hpp"
#include "treewalk/partition.hpp"
#include "treewalk/walk.hpp"

namespace treewalk::cli {

namespace {

constexpr std::int64_t kMaxGeneratedK = 10'000;

std::uint64_t default_cap() {
  if (const char* env = std::getenv("TREEWALK_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("TREEWALK_CAP is not a number: ") + env);
    }
  }
  return kDefaultStateCap;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  return read_file(path);
}

Graph load_graph(const std::string& path) {
  try {
    return parse_graph(read_input(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

RootedSpanningTree load_tree(const Graph& g, const std::string& path) {
  RootedSpanningTree t = parse_tree(read_input(path));
  if (auto why = spanning_tree_violation(g, t)) {
    throw InvalidInput(path + ": not a spanning tree: " + *why);
  }
  return t;
}

std::string join(const std::vector<Vertex>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string format_trees(const WalkSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.trees.size(); ++i) {
    if (i > 0) out += '\n';
    out += format_tree(seq.trees[i]);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Spanning-tree walks by leaf moves in biconnected graphs",
               "treewalk"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::uint64_t cap = 0;
  std::string graph_path;

  auto* stnum = app.add_subcommand("stnum", "Print an st-numbering");
  Vertex st_s = 0;
  Vertex st_t = 0;
  stnum->add_option("graph", graph_path, "Graph file")->required();
  stnum->add_option("s", st_s, "First vertex")->required();
  stnum->add_option("t", st_t, "Last vertex")->required();
  stnum->callback([&] {
    action = [&] {
      const Graph g = load_graph(graph_path);
      if (!g.contains(st_s) || !g.contains(st_t)) {
        throw InvalidInput("vertex out of range");
      }
      const StNumbering num = st_numbering(g, st_s, st_t);
      out << join({num.order().begin(), num.order().end()}) << '\n';
      return kSuccess;
    };
  });

  auto* walk_cmd = app.add_subcommand("walk", "Construct a walk between trees");
  Vertex root = 0;
  std::string from_path;
  std::string to_path;
  std::string format = "moves";
  walk_cmd->add_option("--graph", graph_path, "Graph file")->required();
  walk_cmd->add_option("--root", root, "Distinguished vertex")->required();
  walk_cmd->add_option("--from", from_path, "Source tree file")->required();
  walk_cmd->add_option("--to", to_path, "Target tree file")->required();
  walk_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"moves", "trees"}));
  walk_cmd->callback([&] {
    action = [&] {
      const Graph g = load_graph(graph_path);
      const WalkSequence seq =
          walk(g, root, load_tree(g, from_path), load_tree(g, to_path));
      out << (format == "moves" ? format_move_stream(seq.source(), seq.moves)
                                : format_trees(seq));
      return kSuccess;
    };
  });

  auto* verify_cmd =
      app.add_subcommand("verify", "Verify a move stream against a graph");
  std::string moves_path = "-";
  verify_cmd->add_option("--graph", graph_path, "Graph file")->required();
  verify_cmd->add_option("--moves", moves_path, "Move stream ('-' = stdin)");
  verify_cmd->add_option("--from", from_path, "Expected source tree");
  verify_cmd->add_option("--to", to_path, "Expected target tree");
  verify_cmd->callback([&] {
    action = [&] {
      const Graph g = load_graph(graph_path);
      const MoveStream stream = parse_move_stream(read_input(moves_path));
      WalkSequence seq{{stream.initial}, stream.moves};
      // Trees are replayed without validation; the report judges them.
      for (const LeafMove& m : stream.moves) {
        const RootedSpanningTree& last = seq.trees.back();
        if (m.vertex == last.root()) {
          seq.trees.push_back(last);
        } else {
          seq.trees.push_back(last.reparented(m.vertex, m.new_parent));
        }
      }
      ExpectedEndpoints expected;
      if (!from_path.empty()) expected.source = parse_tree(read_input(from_path));
      if (!to_path.empty()) expected.target = parse_tree(read_input(to_path));
      const WalkReport report =
          verify_walk(g, stream.initial.root(), seq, expected);
      out << report.to_string();
      return report.passed ? kSuccess : kValidation;
    };
  });

  auto* gen_gk = app.add_subcommand("gen-gk", "Write the lower-bound instance");
  std::int64_t k = 1;
  std::string out_dir;
  gen_gk->add_option("--k", k, "Family parameter")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, kMaxGeneratedK));
  gen_gk->add_option("--out-dir", out_dir, "Output directory")->required();
  gen_gk->callback([&] {
    action = [&] {
      const LowerBoundInstance gk = make_gk(k);
      const std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      write_file(dir / "graph.txt", format_graph(gk.graph));
      write_file(dir / "tree_a.txt", format_tree(gk.tree_a));
      write_file(dir / "tree_b.txt", format_tree(gk.tree_b));
      out << (dir / "graph.txt").string() << '\n'
          << (dir / "tree_a.txt").string() << '\n'
          << (dir / "tree_b.txt").string() << '\n';
      return kSuccess;
    };
  });

  auto* gen_random = app.add_subcommand(
      "gen-random", "Write a random biconnected graph and two spanning trees");
  Vertex random_n = 8;
  std::uint64_t seed = 0;
  gen_random->add_option("--n", random_n, "Vertex count")
      ->required()
      ->check(CLI::Range(3, 1 << 16));
  gen_random->add_option("--seed", seed, "Generator seed");
  gen_random->add_option("--root", root, "Root of both trees");
  gen_random->add_option("--out-dir", out_dir, "Output directory")->required();
  gen_random->callback([&] {
    action = [&] {
      std::mt19937_64 rng(seed);
      const Graph g = random_biconnected_graph(random_n, rng);
      if (!g.contains(root)) throw InvalidInput("root out of range");
      const std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      write_file(dir / "graph.txt", format_graph(g));
      write_file(dir / "tree_a.txt",
                 format_tree(random_spanning_tree(g, root, rng)));
      write_file(dir / "tree_b.txt",
                 format_tree(random_spanning_tree(g, root, rng)));
      return kSuccess;
    };
  });

  auto* lower = app.add_subcommand("lower-bound", "Print 2k(k-1)");
  lower->add_option("--k", k, "Family parameter")
      ->required()
      ->check(CLI::PositiveNumber);
  lower->callback([&] {
    action = [&] {
      out << lower_bound_value(k) << '\n';
      return kSuccess;
    };
  });

  auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth");
  oracle->require_subcommand(1);
  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--cap", cap, "State cap (default: TREEWALK_CAP or 1e7)");
  };

  auto* distance = oracle->add_subcommand("distance", "Exact tree distance");
  std::string path_out;
  distance->add_option("--graph", graph_path, "Graph file")->required();
  distance->add_option("--root", root, "Distinguished vertex")->required();
  distance->add_option("--from", from_path, "Source tree file")->required();
  distance->add_option("--to", to_path, "Target tree file")->required();
  distance->add_option("--path", path_out, "Write a shortest move stream");
  add_cap(distance);
  distance->callback([&] {
    action = [&] {
      const Graph g = load_graph(graph_path);
      const RootedSpanningTree t = load_tree(g, from_path);
      const RootedSpanningTree t_prime = load_tree(g, to_path);
      if (path_out.empty()) {
        out << tree_distance(g, root, t, t_prime, cap) << '\n';
      } else {
        const WalkSequence seq = shortest_walk(g, root, t, t_prime, cap);
        write_file(path_out, format_move_stream(seq.source(), seq.moves));
        out << seq.num_moves() << '\n';
      }
      return kSuccess;
    };
  });

  auto* diameter = oracle->add_subcommand("diameter", "Tree-graph diameter");
  diameter->add_option("--graph", graph_path, "Graph file")->required();
  diameter->add_option("--root", root, "Distinguished vertex")->required();
  add_cap(diameter);
  diameter->callback([&] {
    action = [&] {
      const Graph g = load_graph(graph_path);
      out << tree_graph_diameter(g, root, cap) << '\n';
      return kSuccess;
    };
  });

  auto* count = oracle->add_subcommand(
      "count", "Spanning-tree count: enumerated, then matrix-tree");
  count->add_option("--graph", graph_path, "Graph file")->required();
  add_cap(count);
  count->callback([&] {
    action = [&] {
      const Graph g = load_graph(graph_path);
      const auto enumerated = enumerate_spanning_trees(g, 0, cap).size();
      const auto kirchhoff = count_spanning_trees_kirchhoff(g);
      out << enumerated << '\n' << kirchhoff << '\n';
      return kirchhoff == enumerated ? kSuccess : kValidation;
    };
  });

  auto* partition = app.add_subcommand(
      "partition", "Split into two connected parts of prescribed sizes");
  Vertex u1 = 0;
  Vertex u2 = 0;
  Vertex n1 = 1;
  partition->add_option("--graph", graph_path, "Graph file")->required();
  partition->add_option("--u1", u1, "Vertex of the first part")->required();
  partition->add_option("--u2", u2, "Vertex of the second part")->required();
  partition->add_option("--n1", n1, "Size of the first part")->required();
  partition->callback([&] {
    action = [&] {
      const Graph g = load_graph(graph_path);
      const Partition2 p = partition2(g, u1, u2, n1);
      out << join(p.first) << '\n' << join(p.second) << '\n';
      err << "strategy: " << p.strategy << '\n';
      return kSuccess;
    };
  });

  auto* experiment = app.add_subcommand(
      "experiment", "Growth table for the lower-bound family");
  std::int64_t k_max = 5;
  bool json = false;
  experiment->add_option("--k-max", k_max, "Largest k")
      ->check(CLI::Range(std::int64_t{1}, kMaxGeneratedK));
  experiment->add_flag("--json", json, "One JSON record per line");
  add_cap(experiment);
  experiment->callback([&] {
    action = [&] {
      const auto rows = experiment_table(k_max, cap);
      out << (json ? format_rows_jsonl(rows) : format_rows_tsv(rows));
      return kSuccess;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    cap = default_cap();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return action();
  } catch (const CapExceeded& e) {
    err << "ERROR cap-exceeded (" << e.what() << ")\n";
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
}

}  // namespace treewalk::cli
