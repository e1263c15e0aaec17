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

#include "arbcolor/sequential.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include <json.hpp>

namespace arbcolor {

StepSummary summarize(const std::vector<StepTrace>& steps) {
  StepSummary s;
  s.steps = steps.size();
  if (steps.empty()) return s;
  double fan = 0, path = 0;
  for (const StepTrace& t : steps) {
    fan += t.fan_size;
    path += t.path_length;
    s.max_fan_size = std::max(s.max_fan_size, t.fan_size);
    s.max_path_length = std::max(s.max_path_length, t.path_length);
  }
  s.mean_fan_size = fan / steps.size();
  s.mean_path_length = path / steps.size();
  return s;
}

StepTrace color_one_edge(PartialColoring& chi, Rng& rng, EdgeColorer& ctx) {
  using Clock = std::chrono::steady_clock;
  const Clock::time_point start = ctx.time_steps ? Clock::now() : Clock::time_point{};

  const Graph& g = chi.graph();
  const EdgeId e = chi.random_uncolored_edge(rng);
  const Endpoints& ends = g.endpoints(e);
  Vertex u = std::min(ends.u, ends.v);
  Vertex v = std::max(ends.u, ends.v);
  if (chi.degree(v) < chi.degree(u)) std::swap(u, v);

  Fan& fan = ctx.fan;
  AlternatingPath& path = ctx.path;
  make_primed_fan(chi, e, u, ctx.scratch, fan);
  const Color c0 = chi.random_missing_color(u, rng);
  maximal_alternating_path(chi, u, c0, fan.primed_color, path);
  extend_coloring(chi, fan, path);

  StepTrace trace;
  trace.edge = e;
  trace.center = u;
  trace.fan_size = static_cast<std::uint32_t>(fan.leaves.size());
  trace.path_length = static_cast<std::uint32_t>(path.length());
  trace.missing_color = c0;
  if (ctx.time_steps) {
    trace.elapsed_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)
            .count());
  }
  return trace;
}

StepTrace color_one_edge(PartialColoring& chi, Rng& rng) {
  EdgeColorer ctx;
  return color_one_edge(chi, rng, ctx);
}

void color_edges(PartialColoring& chi, Rng& rng, std::vector<StepTrace>* trace,
                 bool time_steps) {
  EdgeColorer ctx;
  ctx.time_steps = time_steps;
  if (trace != nullptr) trace->reserve(trace->size() + chi.uncolored_count());
  while (chi.uncolored_count() > 0) {
    StepTrace step = color_one_edge(chi, rng, ctx);
    if (trace != nullptr) trace->push_back(step);
  }
}

StepTrace color_one_edge_deterministic(PartialColoring& chi, EdgeId e,
                                       FanScratch& scratch) {
  if (chi.is_colored(e)) {
    throw ColoringError(ColoringError::Kind::AlreadyColored,
                        "edge " + std::to_string(e) + " is already colored");
  }
  const Endpoints& ends = chi.graph().endpoints(e);
  const Vertex u = std::min(ends.u, ends.v);
  const Fan fan = make_primed_fan(chi, e, u, scratch);
  const Color c0 = chi.some_missing_color(u);
  const AlternatingPath path =
      maximal_alternating_path(chi, u, c0, fan.primed_color);
  extend_coloring(chi, fan, path);

  StepTrace trace;
  trace.edge = e;
  trace.center = u;
  trace.fan_size = static_cast<std::uint32_t>(fan.leaves.size());
  trace.path_length = static_cast<std::uint32_t>(path.length());
  trace.missing_color = c0;
  return trace;
}

StepTrace color_one_edge_deterministic(PartialColoring& chi, EdgeId e) {
  FanScratch scratch;
  return color_one_edge_deterministic(chi, e, scratch);
}

void color_edges_deterministic(PartialColoring& chi) {
  FanScratch scratch;
  const std::size_t m = chi.graph().edge_count();
  for (EdgeId e = 0; e < m; ++e) {
    if (!chi.is_colored(e)) color_one_edge_deterministic(chi, e, scratch);
  }
}

void write_step_traces(const std::vector<StepTrace>& steps, std::ostream& out) {
  for (const StepTrace& t : steps) {
    nlohmann::ordered_json j;
    j["edge"] = t.edge;
    j["center"] = t.center;
    j["fan_size"] = t.fan_size;
    j["path_length"] = t.path_length;
    j["missing_color"] = t.missing_color;
    j["elapsed_ns"] = t.elapsed_ns;
    out << j.dump() << '\n';
  }
}

}  // namespace arbcolor
