// Copyright 2026 The arbcolor Authors
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

#ifndef ARBCOLOR_SEQUENTIAL_HPP
#define ARBCOLOR_SEQUENTIAL_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "arbcolor/coloring.hpp"
#include "arbcolor/fan_path.hpp"

namespace arbcolor {

/// What one single-edge step did.
struct StepTrace {
  EdgeId edge = kNoEdge;
  Vertex center = 0;           // min-degree endpoint
  std::uint32_t fan_size = 0;  // leaves x_0..x_t
  std::uint32_t path_length = 0;
  Color missing_color = kUncolored;  // c_0
  std::uint64_t elapsed_ns = 0;      // 0 unless timing was requested
};

struct StepSummary {
  std::size_t steps = 0;
  double mean_fan_size = 0.0;
  double mean_path_length = 0.0;
  std::uint32_t max_fan_size = 0;
  std::uint32_t max_path_length = 0;
};

StepSummary summarize(const std::vector<StepTrace>& steps);

/// Reusable per-run state for the single-edge step.
struct EdgeColorer {
  FanScratch scratch;
  Fan fan;
  AlternatingPath path;
  bool time_steps = false;
};

/// Colors one uniformly random uncolored edge: fan at the endpoint of
/// smaller degree (lower id on ties), c_0 uniform over M(center).
StepTrace color_one_edge(PartialColoring& chi, Rng& rng, EdgeColorer& ctx);
StepTrace color_one_edge(PartialColoring& chi, Rng& rng);

/// Repeats color_one_edge until every edge is colored. When `trace` is
/// non-null one StepTrace per step is appended.
void color_edges(PartialColoring& chi, Rng& rng,
                 std::vector<StepTrace>* trace = nullptr,
                 bool time_steps = false);

/// Deterministic single-edge step: lower-id endpoint as center and the
/// head of its free list as c_0. Throws AlreadyColored.
StepTrace color_one_edge_deterministic(PartialColoring& chi, EdgeId e,
                                       FanScratch& scratch);
StepTrace color_one_edge_deterministic(PartialColoring& chi, EdgeId e);

/// Colors the uncolored edges in increasing id order.
void color_edges_deterministic(PartialColoring& chi);

/// One JSON object per line.
void write_step_traces(const std::vector<StepTrace>& steps, std::ostream& out);

}  // namespace arbcolor

#endif  // ARBCOLOR_SEQUENTIAL_HPP
