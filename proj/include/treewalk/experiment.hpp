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

#ifndef TREEWALK_EXPERIMENT_HPP_
#define TREEWALK_EXPERIMENT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treewalk/graph.hpp"

namespace treewalk {

// One row of the growth table for the lower-bound family at parameter k.
// lower_bound <= oracle_distance <= walk_moves <= walk_bound.
struct ExperimentRow {
  std::int64_t k = 0;
  Vertex n = 0;
  std::int64_t lower_bound = 0;
  std::optional<std::uint64_t> oracle_distance;  // absent when over the cap
  std::uint64_t walk_moves = 0;
  std::uint64_t walk_bound = 0;
};

// Rows for k = 1..k_max. Every constructed walk is verified and every row's
// inequality chain checked; a violation throws Error. Once the oracle exceeds
// cap it is skipped for all larger k.
std::vector<ExperimentRow> experiment_table(std::int64_t k_max,
                                            std::uint64_t cap);

// Tab-separated with a header row.
std::string format_rows_tsv(const std::vector<ExperimentRow>& rows);
// One JSON object per line.
std::string format_rows_jsonl(const std::vector<ExperimentRow>& rows);

}  // namespace treewalk

#endif  // TREEWALK_EXPERIMENT_HPP_
