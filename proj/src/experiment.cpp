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

#include "treewalk/experiment.hpp"

#include <sstream>

#include <json.hpp>

#include "treewalk/error.hpp"
#include "treewalk/lowerbound.hpp"
#include "treewalk/oracle.hpp"
#include "treewalk/walk.hpp"

namespace treewalk {

std::vector<ExperimentRow> experiment_table(std::int64_t k_max,
                                            std::uint64_t cap) {
  if (k_max < 1) throw InvalidInput("k_max must be at least 1");
  std::vector<ExperimentRow> rows;
  bool oracle_enabled = true;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const LowerBoundInstance gk = make_gk(k);
    ExperimentRow row;
    row.k = k;
    row.n = gk.graph.num_vertices();
    row.lower_bound = lower_bound_value(k);
    row.walk_bound = 2ull * row.n * (row.n - 1);

    const WalkSequence seq = walk(gk.graph, gk.a, gk.tree_a, gk.tree_b);
    const WalkReport report =
        verify_walk(gk.graph, gk.a, seq, {gk.tree_a, gk.tree_b});
    if (!report.passed) {
      throw Error("walk for k=" + std::to_string(k) + " failed verification\n" +
                  report.to_string());
    }
    row.walk_moves = seq.num_moves();

    if (oracle_enabled) {
      try {
        row.oracle_distance =
            tree_distance(gk.graph, gk.a, gk.tree_a, gk.tree_b, cap);
      } catch (const CapExceeded&) {
        oracle_enabled = false;
      }
    }

    const auto lower = static_cast<std::uint64_t>(row.lower_bound);
    const std::uint64_t middle = row.oracle_distance.value_or(lower);
    if (!(lower <= middle && middle <= row.walk_moves &&
          row.walk_moves <= row.walk_bound)) {
      throw Error("bound chain violated for k=" + std::to_string(k));
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_rows_tsv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << "k\tn\tlower_bound\toracle_distance\twalk_moves\twalk_bound\n";
  for (const auto& row : rows) {
    out << row.k << '\t' << row.n << '\t' << row.lower_bound << '\t';
    if (row.oracle_distance) {
      out << *row.oracle_distance;
    } else {
      out << '-';
    }
    out << '\t' << row.walk_moves << '\t' << row.walk_bound << '\n';
  }
  return out.str();
}

std::string format_rows_jsonl(const std::vector<ExperimentRow>& rows) {
  std::string out;
  for (const auto& row : rows) {
    nlohmann::json record = {{"k", row.k},
                             {"n", row.n},
                             {"lower_bound", row.lower_bound},
                             {"oracle_distance", nullptr},
                             {"walk_moves", row.walk_moves},
                             {"walk_bound", row.walk_bound}};
    if (row.oracle_distance) record["oracle_distance"] = *row.oracle_distance;
    out += record.dump() + '\n';
  }
  return out;
}

}  // namespace treewalk
