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


#ifndef ARBCOLOR_REPORT_HPP
#define ARBCOLOR_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arbcolor/coloring.hpp"
#include "arbcolor/generators.hpp"
#include "arbcolor/graph.hpp"
#include "arbcolor/recursive.hpp"
#include "arbcolor/sequential.hpp"

namespace arbcolor {

inline constexpr const char* kRunReportSchema = "arbcolor.run_report/1";
inline constexpr const char* kManifestSchema = "arbcolor.bench_manifest/1";
inline constexpr const char* kBenchCsvHeader =
    "family,n,m,delta,alpha_known,degeneracy,W,algo,seed,wall_ms,status";

enum class Algo { Naive, ColorEdges, Recursive, RecursiveSizePrune };

std::string to_string(Algo a);
/// naive | color-edges | recursive | recursive-size-prune-ablation
Algo parse_algo(const std::string& name);

struct RunOptions {
  bool trace = false;  // collect step traces / recursion trace
  PruneBy prune_by = PruneBy::Weight;  // for Algo::Recursive
};

struct RunResult {
  std::vector<Color> colors;
  Color palette = 0;
  std::uint64_t wall_us = 0;  // the coloring call only
  std::vector<StepTrace> steps;      // color-edges with trace
  RecursionTrace recursion;          // recursive with trace
};

/// Runs one algorithm on an empty (Δ+1)-coloring seeded with `seed`.
RunResult run_algorithm(const Graph& g, Algo algo, std::uint64_t seed,
                        const RunOptions& options = {});

/// Versioned per-run JSON. The verdict is recomputed by verify_proper.
/// `input` describes where the graph came from (path or GenSpec).
nlohmann::ordered_json make_run_report(const Graph& g, const nlohmann::json& input,
                                       Algo algo, std::uint64_t seed,
                                       const RunResult& result);

/// Fields that vary between identical runs.
nlohmann::ordered_json strip_timing(nlohmann::ordered_json report);

struct BenchManifest {
  std::vector<GenSpec> graphs;
  std::vector<Algo> algorithms;
  std::vector<std::uint64_t> seeds;
  unsigned repetitions = 5;
};

BenchManifest parse_manifest(const nlohmann::json& j);

struct BenchRow {
  GenSpec spec;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint32_t delta = 0;
  std::optional<std::uint32_t> alpha_known;
  std::uint32_t degeneracy = 0;
  Weight weight = 0;
  Algo algo = Algo::ColorEdges;
  std::uint64_t seed = 0;
  std::uint64_t wall_us = 0;  // median over repetitions
  std::string status;         // "ok", "improper", or "error: ..."
};

/// Runs every (graph, algorithm, seed) cell, `repetitions` times each, on
/// `jobs` worker threads. Rows come back in manifest order.
std::vector<BenchRow> run_bench(const BenchManifest& manifest, unsigned jobs = 1);

/// CSV with kBenchCsvHeader; wall_ms has three decimals (microsecond
/// resolution), alpha_known is empty when unknown.
void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

std::uint64_t median(std::vector<std::uint64_t> values);

}  // namespace arbcolor

#endif  // ARBCOLOR_REPORT_HPP
