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


// Runs the eleven acceptance checks and prints one PASS/FAIL line each.
// Exit status is the number of failed checks.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "arbcolor/generators.hpp"
#include "arbcolor/oracles.hpp"
#include "arbcolor/recursive.hpp"
#include "arbcolor/report.hpp"
#include "arbcolor/sequential.hpp"

using namespace arbcolor;

namespace {

// Pinned tolerances.
constexpr double kExhaustiveSeconds = 120.0;
constexpr std::size_t kSampledColorings = 600;
constexpr double kScalingSpread = 3.0;
constexpr double kDeltaSlowdown = 2.0;
constexpr double kFanPathFactor = 10.0;
constexpr std::size_t kFanPathCalls = 1000;
constexpr unsigned kRepetitions = 5;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// n on a geometric ladder from 10 to 10^4.
std::uint64_t ladder(int i, int count) {
  return static_cast<std::uint64_t>(std::llround(10.0 * std::pow(1000.0, i / double(count - 1))));
}

// The instance used for family f at index i, n <= 10^4.
GenSpec instance(Family f, int i, int count) {
  GenSpec s;
  s.family = f;
  s.n = std::max<std::uint64_t>(ladder(i, count), 4);
  s.seed = 1000 + i;
  switch (f) {
    case Family::Star:
      break;
    case Family::ForestUnion:
      s.alpha = 1 + i % 4;
      break;
    case Family::StarPlusForests:
      s.alpha = 2 + i % 3;
      s.star_size = i % 2 ? s.n / 3 : 0;
      break;
    case Family::ErdosRenyi:
      s.m = std::min<std::uint64_t>(s.n * (1 + i % 5), s.n * (s.n - 1) / 2);
      break;
    case Family::PreferentialAttachment:
      s.degree = 1 + i % 4;
      break;
    case Family::Grid:
      s.rows = std::max<std::uint64_t>(1, std::llround(std::sqrt(double(s.n)) / (1 + i % 3)));
      s.cols = s.n / s.rows;
      break;
  }
  return s;
}

const Family kFamilies[] = {Family::Star,       Family::ForestUnion,
                            Family::StarPlusForests, Family::ErdosRenyi,
                            Family::PreferentialAttachment, Family::Grid};

Outcome exhaustive_pipeline() {
  const auto t0 = std::chrono::steady_clock::now();
  const OracleReport r = exhaustive_extend_suite();
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = r.ok() && secs < kExhaustiveSeconds && r.instances == (1u << 15) - 1;
  o.detail = std::to_string(r.instances) + " graphs, " + std::to_string(r.checks) +
             " extensions, " + std::to_string(r.violations.size()) + " violations, " +
             fmt("%.1fs", secs);
  if (!r.ok()) o.detail += "; first: " + r.violations.front().detail;
  return o;
}

Outcome end_to_end() {
  std::size_t runs = 0, bad = 0;
  std::string first;
  for (Family f : kFamilies) {
    for (int i = 0; i < 100; ++i) {
      const GenSpec spec = instance(f, i, 100);
      const Graph g = generate(spec);
      const std::uint32_t delta = g.max_degree();
      for (Algo a : {Algo::Naive, Algo::ColorEdges, Algo::Recursive}) {
        const RunResult res = run_algorithm(g, a, spec.seed);
        const ProperReport p = verify_proper(g, res.colors, delta + 1);
        ++runs;
        if (!p.proper || p.uncolored != 0 || !p.out_of_palette.empty()) {
          ++bad;
          if (first.empty()) first = to_json(spec).dump() + " " + to_string(a);
        }
      }
    }
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = std::to_string(runs) + " runs, " + std::to_string(bad) + " violations";
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

Outcome edge_belonging() {
  Rng rng(77);
  OracleReport total;
  std::size_t colored_edges = 0;
  for (std::size_t k = 0; k < kSampledColorings; ++k) {
    const std::uint64_t n = 2 + rng() % 19;
    const std::uint64_t m = rng() % (n * (n - 1) / 2 + 1);
    const std::uint64_t seed = rng();
    const Graph g = gen_erdos_renyi(n, m, seed);
    const Color palette = g.max_degree() + 1 + static_cast<Color>(rng() % 3);
    const double skip = (rng() % 5) / 10.0;
    const std::vector<Color> colors = sample_partial_coloring(g, palette, skip, rng);
    if (!is_proper_raw(g, colors, palette)) {
      total.violations.push_back({seed, "sampler produced an improper coloring"});
      continue;
    }
    colored_edges += std::count_if(colors.begin(), colors.end(),
                                   [](Color c) { return c != kUncolored; });
    total.absorb(check_edge_belonging(g, colors, palette, seed));
  }
  Outcome o;
  o.pass = total.ok() && total.instances >= 500;
  o.detail = std::to_string(total.instances) + " colorings, " +
             std::to_string(colored_edges) + " colored edges, " +
             std::to_string(total.checks) + " checks, " +
             std::to_string(total.violations.size()) + " violations";
  if (!total.ok()) o.detail += "; first: " + total.violations.front().detail;
  return o;
}

Outcome euler_balance() {
  std::size_t graphs = 0, bad = 0;
  std::string first;
  for (Family f : kFamilies) {
    for (int i = 0; i < 100; ++i) {
      const GenSpec spec = instance(f, i, 100);
      const Graph g = generate(spec);
      const std::vector<std::uint8_t> side = euler_sides(g);
      std::vector<long> d1(g.vertex_count(), 0);
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (side[e] == 0) {
          ++d1[g.endpoints(e).u];
          ++d1[g.endpoints(e).v];
        }
      }
      ++graphs;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const long d = g.degree(v);
        const long d2 = d - d1[v];
        // 2 d_i in [d - 2, d + 2], kept in integers.
        if (2 * d1[v] < d - 2 || 2 * d1[v] > d + 2 || 2 * d2 < d - 2 || 2 * d2 > d + 2) {
          ++bad;
          if (first.empty())
            first = to_json(spec).dump() + " vertex " + std::to_string(v);
          break;
        }
      }
    }
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(bad) + " violations";
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

struct TracedRun {
  std::string label;
  Graph graph;
  RecursionTrace trace;
};

// Recursive runs with n up to 10^4, some forced deeper with a small base-case
// bound.
std::vector<TracedRun> traced_runs() {
  std::vector<TracedRun> runs;
  for (Family f : kFamilies) {
    for (int i = 0; i < 8; ++i) {
      GenSpec spec = instance(f, 60 + 5 * i, 100);
      if (f == Family::ErdosRenyi) spec.m = spec.n * 8;
      if (f == Family::PreferentialAttachment) spec.degree = 4;
      TracedRun run{to_json(spec).dump(), generate(spec), {}};
      RecursiveOptions opt;
      opt.trace = &run.trace;
      if (i % 2) opt.base_threshold = 3.0 + i;
      Rng rng(spec.seed);
      recursive_color_edges(run.graph, rng, opt);
      if (i % 2) run.label += " base_threshold=" + std::to_string(3 + i);
      runs.push_back(std::move(run));
    }
  }
  return runs;
}

Outcome level_invariants(const std::vector<TracedRun>& runs) {
  std::size_t levels = 0, deep = 0, bad = 0;
  std::string first;
  for (const TracedRun& run : runs) {
    const std::vector<LevelStats> stats = collect_level_stats(run.graph, run.trace);
    levels += stats.size();
    deep = std::max(deep, stats.size());
    for (const LevelStats& s : stats) {
      if (!s.ok()) {
        ++bad;
        if (first.empty())
          first = run.label + " level " + std::to_string(s.level) +
                  (s.violations.empty() ? "" : ": " + s.violations.front());
      }
    }
  }
  Outcome o;
  o.pass = bad == 0 && deep > 1;
  o.detail = std::to_string(runs.size()) + " runs, " + std::to_string(levels) +
             " levels (deepest " + std::to_string(deep) + "), " + std::to_string(bad) +
             " violations";
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

Outcome prune_bound(const std::vector<TracedRun>& runs) {
  std::size_t nodes = 0, pruned = 0, bad = 0;
  std::string first;
  for (const TracedRun& run : runs) {
    for (const RecursionNode& node : run.trace.nodes) {
      ++nodes;
      if (!node.base_case) ++pruned;
    }
    const std::vector<std::string> v = check_prune_bounds(run.trace);
    bad += v.size();
    if (!v.empty() && first.empty()) first = run.label + ": " + v.front();
  }
  Outcome o;
  o.pass = bad == 0 && pruned > 0;
  o.detail = std::to_string(nodes) + " nodes, " + std::to_string(pruned) + " pruned, " +
             std::to_string(bad) + " violations";
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

Outcome weight_bound() {
  std::size_t graphs = 0, bad = 0;
  double worst = 0.0;
  std::string first;
  for (Family f : kFamilies) {
    for (int i = 0; i < 100; ++i) {
      const GenSpec spec = instance(f, i, 100);
      const auto alpha = known_arboricity(spec);
      if (!alpha) continue;
      const Graph g = generate(spec);
      ++graphs;
      const Weight w = graph_weight(g);
      const Weight bound = 2 * static_cast<Weight>(g.edge_count()) * *alpha;
      if (bound > 0) worst = std::max(worst, double(w) / double(bound));
      if (w > bound) {
        ++bad;
        if (first.empty()) first = to_json(spec).dump();
      }
    }
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = std::to_string(graphs) + " graphs, max W/(2m alpha) " + fmt("%.3f", worst) +
             ", " + std::to_string(bad) + " violations";
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

// Repetitions are interleaved across the sweep so that slow periods on a
// shared machine hit every point alike. Returns the median per point.
std::vector<std::uint64_t> sweep_walls(const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) run_algorithm(g, Algo::ColorEdges, 0);  // warm-up
  std::vector<std::vector<std::uint64_t>> t(graphs.size());
  for (unsigned r = 0; r < kRepetitions; ++r)
    for (std::size_t i = 0; i < graphs.size(); ++i)
      t[i].push_back(run_algorithm(graphs[i], Algo::ColorEdges, 1 + r).wall_us);
  std::vector<std::uint64_t> out;
  for (const auto& v : t) out.push_back(median(v));
  return out;
}

Outcome scaling_e1() {
  std::vector<Graph> graphs;
  for (int k = 12; k <= 17; ++k) graphs.push_back(gen_star_plus_forests(std::uint64_t{1} << k, 2, 100 + k));
  const std::vector<std::uint64_t> walls = sweep_walls(graphs);
  std::vector<double> ratio;
  std::string detail;
  for (int k = 12; k <= 17; ++k) {
    const Graph& g = graphs[k - 12];
    const double r = 1000.0 * walls[k - 12] / (double(g.edge_count()) * k);
    ratio.push_back(r);
    detail += (detail.empty() ? "" : " ") + std::to_string(k) + ":" + fmt("%.3f", r);
  }
  const auto [lo, hi] = std::minmax_element(ratio.begin(), ratio.end());
  Outcome o;
  o.pass = *hi <= kScalingSpread * *lo;
  o.detail = "ns/(m log2 n) by log2 n " + detail + "; spread " + fmt("%.2f", *hi / *lo);
  return o;
}

Outcome scaling_e2() {
  const std::uint64_t n = 100001;
  const std::uint64_t sizes[] = {316, 1000, 3162, 10000, 31623, n - 1};
  std::vector<Graph> graphs;
  for (std::uint64_t s : sizes) graphs.push_back(gen_star_plus_forests(n, 2, 7, s));
  const std::vector<std::uint64_t> walls = sweep_walls(graphs);
  std::string detail;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    detail += (detail.empty() ? "" : " ") + std::string("delta=") +
              std::to_string(graphs[i].max_degree()) + ":" + fmt("%.1fms", walls[i] / 1000.0);
  Outcome o;
  const double growth = double(walls.back()) / double(std::max<std::uint64_t>(walls.front(), 1));
  o.pass = growth <= kDeltaSlowdown;
  o.detail = "m=" + std::to_string(graphs.front().edge_count()) + " " + detail +
             "; largest/smallest " + fmt("%.2f", growth);
  return o;
}

Outcome fan_path_cost() {
  // The first call on an empty coloring, repeated over fresh colorings.
  const std::uint64_t sizes[] = {1000, 4000, 16000};
  double worst = 0.0;
  std::size_t calls = 0;
  bool pass = true;
  std::string detail;
  for (std::uint64_t n : sizes) {
    const Graph g = gen_star_plus_forests(n, 2, n);
    const double bound = kFanPathFactor * double(graph_weight(g)) / double(g.edge_count());
    Rng rng(n);
    EdgeColorer ctx;
    double sum = 0.0;
    for (std::size_t k = 0; k < kFanPathCalls; ++k) {
      PartialColoring chi(g, g.max_degree() + 1);
      const StepTrace s = color_one_edge(chi, rng, ctx);
      sum += s.fan_size + s.path_length;
    }
    calls += kFanPathCalls;
    const double mean = sum / kFanPathCalls;
    worst = std::max(worst, mean / bound * kFanPathFactor);
    pass = pass && mean <= bound;
    // Whole runs for context: per-call cost scaled by l / W, where l is the
    // number of uncolored edges before the call.
    std::vector<StepTrace> trace;
    PartialColoring chi(g, g.max_degree() + 1);
    Rng run_rng(n + 1);
    color_edges(chi, run_rng, &trace);
    double scaled = 0.0;
    for (std::size_t i = 0; i < trace.size(); ++i)
      scaled += double(trace[i].fan_size + trace[i].path_length) * double(trace.size() - i);
    scaled /= double(trace.size()) * double(graph_weight(g));
    detail += (detail.empty() ? "" : "; ") + std::string("n=") + std::to_string(n) +
              " mean " + fmt("%.3f", mean) + " bound " + fmt("%.2f", bound) +
              " full-run mean cost*l/W " + fmt("%.3f", scaled);
  }
  Outcome o;
  o.pass = pass && calls >= 1000;
  o.detail = std::to_string(calls) + " calls at l=m; " + detail;
  return o;
}

Outcome determinism() {
  const GenSpec specs[] = {
      {Family::StarPlusForests, 5000, 0, 2, 1, 0, 0, 0, 3},
      {Family::PreferentialAttachment, 5000, 0, 1, 3, 0, 0, 0, 4},
      {Family::ErdosRenyi, 3000, 9000, 1, 1, 0, 0, 0, 5},
  };
  std::size_t groups = 0, bad = 0;
  for (const GenSpec& spec : specs) {
    const Graph g = generate(spec);
    for (Algo a : {Algo::Naive, Algo::ColorEdges, Algo::Recursive, Algo::RecursiveSizePrune}) {
      std::vector<std::string> dumps, reports;
      for (int r = 0; r < 3; ++r) {
        RunOptions opt;
        opt.trace = true;
        const RunResult res = run_algorithm(g, a, 42, opt);
        dumps.push_back(write_coloring(res.colors));
        reports.push_back(strip_timing(make_run_report(g, to_json(spec), a, 42, res)).dump());
      }
      ++groups;
      if (dumps[0] != dumps[1] || dumps[1] != dumps[2] || reports[0] != reports[1] ||
          reports[1] != reports[2])
        ++bad;
    }
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = std::to_string(groups) + " (graph, algorithm) groups x 3 runs, " +
             std::to_string(bad) + " mismatches";
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& check) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2d %s: %s (%s) [%.1fs]\n", id, name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  };

  report(1, "exhaustive single-edge extension", exhaustive_pipeline);
  report(2, "end-to-end proper colorings", end_to_end);
  report(3, "edge belonging", edge_belonging);
  report(4, "euler balance", euler_balance);
  std::vector<TracedRun> runs;
  const auto t0 = std::chrono::steady_clock::now();
  runs = traced_runs();
  std::printf("(traced recursive runs: %.1fs)\n", seconds_since(t0));
  report(5, "recursion level invariants", [&] { return level_invariants(runs); });
  report(6, "prune weight bound", [&] { return prune_bound(runs); });
  report(7, "weight bound W <= 2 m alpha", weight_bound);
  report(8, "near-linear scaling", scaling_e1);
  report(9, "max-degree independence", scaling_e2);
  report(10, "fan and path cost", fan_path_cost);
  report(11, "determinism", determinism);
  std::printf("%d of 11 criteria failed\n", failed);
  return failed;
}
