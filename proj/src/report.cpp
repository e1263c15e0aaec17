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


#include "arbcolor/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <thread>

namespace arbcolor {

std::string to_string(Algo a) {
  switch (a) {
    case Algo::Naive: return "naive";
    case Algo::ColorEdges: return "color-edges";
    case Algo::Recursive: return "recursive";
    case Algo::RecursiveSizePrune: return "recursive-size-prune-ablation";
  }
  return "unknown";
}

Algo parse_algo(const std::string& name) {
  for (Algo a : {Algo::Naive, Algo::ColorEdges, Algo::Recursive,
                 Algo::RecursiveSizePrune}) {
    if (to_string(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

RunResult run_algorithm(const Graph& g, Algo algo, std::uint64_t seed,
                        const RunOptions& options) {
  using Clock = std::chrono::steady_clock;
  RunResult r;
  r.palette = g.max_degree() + 1;
  Rng rng(seed);
  PartialColoring chi(g, r.palette);

  const Clock::time_point start = Clock::now();
  switch (algo) {
    case Algo::Naive:
      color_edges_deterministic(chi);
      break;
    case Algo::ColorEdges:
      color_edges(chi, rng, options.trace ? &r.steps : nullptr);
      break;
    case Algo::Recursive:
    case Algo::RecursiveSizePrune: {
      RecursiveOptions ro;
      ro.prune_by = algo == Algo::RecursiveSizePrune ? PruneBy::Size
                                                     : options.prune_by;
      ro.trace = options.trace ? &r.recursion : nullptr;
      chi = recursive_color_edges(g, rng, ro);
      break;
    }
  }
  const Clock::time_point stop = Clock::now();
  r.wall_us = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count());
  r.colors.assign(chi.colors().begin(), chi.colors().end());
  return r;
}

nlohmann::ordered_json make_run_report(const Graph& g, const nlohmann::json& input,
                                       Algo algo, std::uint64_t seed,
                                       const RunResult& result) {
  const GraphStats stats = compute_stats(g);
  const ProperReport verdict = verify_proper(g, result.colors, result.palette);

  nlohmann::ordered_json j;
  j["schema"] = kRunReportSchema;
  j["input"] = input;
  j["algorithm"] = to_string(algo);
  j["seed"] = seed;
  j["graph"] = {{"n", stats.n},
                {"m", stats.m},
                {"max_degree", stats.max_degree},
                {"graph_weight", stats.graph_weight},
                {"degeneracy", stats.degeneracy},
                {"normalized_weight", stats.normalized_weight}};
  j["palette"] = result.palette;
  j["wall_us"] = result.wall_us;
  j["colors_used"] = verdict.colors_used;
  j["max_color"] = verdict.max_color;
  j["uncolored"] = verdict.uncolored;
  j["proper"] = verdict.proper && verdict.uncolored == 0;
  nlohmann::ordered_json bad = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < verdict.violations.size() && i < 16; ++i) {
    const Violation& v = verdict.violations[i];
    bad.push_back({{"vertex", v.vertex},
                   {"color", v.color},
                   {"edges", {v.first, v.second}}});
  }
  j["violations"] = std::move(bad);

  if (!result.steps.empty()) {
    const StepSummary s = summarize(result.steps);
    j["steps"] = {{"count", s.steps},
                  {"mean_fan_size", s.mean_fan_size},
                  {"mean_path_length", s.mean_path_length},
                  {"max_fan_size", s.max_fan_size},
                  {"max_path_length", s.max_path_length}};
  }
  if (!result.recursion.nodes.empty()) {
    const std::vector<LevelStats> levels =
        collect_level_stats(g, result.recursion);
    nlohmann::ordered_json lv = recursion_trace_json(levels)["levels"];
    j["levels"] = std::move(lv);
    const std::vector<std::string> prune = check_prune_bounds(result.recursion);
    j["prune_bound_violations"] = prune;
  }
  return j;
}

nlohmann::ordered_json strip_timing(nlohmann::ordered_json report) {
  report.erase("wall_us");
  return report;
}

BenchManifest parse_manifest(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("manifest must be an object");
  if (j.contains("schema") && j["schema"] != kManifestSchema) {
    throw std::invalid_argument("unsupported manifest schema");
  }
  BenchManifest m;
  for (const nlohmann::json& g : j.at("graphs")) m.graphs.push_back(gen_spec_from_json(g));
  if (j.contains("algorithms")) {
    for (const nlohmann::json& a : j["algorithms"]) {
      m.algorithms.push_back(parse_algo(a.get<std::string>()));
    }
  } else {
    m.algorithms.push_back(Algo::ColorEdges);
  }
  if (j.contains("seeds")) {
    m.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
  } else {
    m.seeds.push_back(1);
  }
  m.repetitions = j.value("repetitions", 5u);
  if (m.repetitions == 0) throw std::invalid_argument("repetitions must be >= 1");
  return m;
}

std::uint64_t median(std::vector<std::uint64_t> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const std::size_t h = values.size() / 2;
  return values.size() % 2 == 1 ? values[h] : (values[h - 1] + values[h]) / 2;
}

namespace {

void run_graph_cells(const BenchManifest& man, std::size_t gi,
                     std::vector<BenchRow>& rows) {
  const std::size_t per_graph = man.algorithms.size() * man.seeds.size();
  const GenSpec& spec = man.graphs[gi];
  std::size_t at = gi * per_graph;
  for (Algo algo : man.algorithms) {
    for (std::uint64_t seed : man.seeds) {
      BenchRow& row = rows[at++];
      row.spec = spec;
      row.algo = algo;
      row.seed = seed;
      row.alpha_known = known_arboricity(spec);
    }
  }
  at = gi * per_graph;

  Graph g;
  try {
    g = generate(spec);
  } catch (const std::exception& e) {
    for (std::size_t i = 0; i < per_graph; ++i) {
      rows[at + i].status = std::string("error: ") + e.what();
    }
    return;
  }
  const GraphStats stats = compute_stats(g);
  for (std::size_t i = 0; i < per_graph; ++i) {
    BenchRow& row = rows[at + i];
    row.n = stats.n;
    row.m = stats.m;
    row.delta = stats.max_degree;
    row.degeneracy = stats.degeneracy;
    row.weight = stats.graph_weight;
    try {
      std::vector<std::uint64_t> times;
      bool proper = true;
      for (unsigned r = 0; r < man.repetitions; ++r) {
        const RunResult res = run_algorithm(g, row.algo, row.seed);
        times.push_back(res.wall_us);
        const ProperReport v = verify_proper(g, res.colors, res.palette);
        proper = proper && v.proper && v.uncolored == 0;
      }
      row.wall_us = median(times);
      row.status = proper ? "ok" : "improper";
    } catch (const std::exception& e) {
      row.status = std::string("error: ") + e.what();
    }
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchManifest& man, unsigned jobs) {
  std::vector<BenchRow> rows(man.graphs.size() * man.algorithms.size() *
                             man.seeds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t gi = next++; gi < man.graphs.size(); gi = next++) {
      run_graph_cells(man, gi, rows);
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, man.graphs.size()));
  if (jobs == 1) {
    worker();
    return rows;
  }
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << kBenchCsvHeader << '\n';
  char ms[32];
  for (const BenchRow& r : rows) {
    std::snprintf(ms, sizeof ms, "%llu.%03llu",
                  static_cast<unsigned long long>(r.wall_us / 1000),
                  static_cast<unsigned long long>(r.wall_us % 1000));
    out << to_string(r.spec.family) << ',' << r.n << ',' << r.m << ','
        << r.delta << ',';
    if (r.alpha_known) out << *r.alpha_known;
    out << ',' << r.degeneracy << ',' << r.weight << ',' << to_string(r.algo)
        << ',' << r.seed << ',' << ms << ',' << csv_field(r.status) << '\n';
  }
}

}  // namespace arbcolor
