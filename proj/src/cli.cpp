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


#include "arbcolor/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "arbcolor/coloring.hpp"
#include "arbcolor/generators.hpp"
#include "arbcolor/graph.hpp"
#include "arbcolor/report.hpp"

namespace arbcolor {

namespace {

constexpr int kImproper = 1;
constexpr int kFailure = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::vector<Color> read_coloring_file(const std::string& path, std::size_t m) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path + "'");
  return read_coloring(f, m);
}

struct GenerateArgs {
  std::string family;
  GenSpec spec;
  std::string output;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  GenSpec spec = a.spec;
  spec.family = parse_family(a.family);
  const Graph g = generate(spec);
  const std::string text = write_edge_list(g);
  if (a.output.empty() || a.output == "-") {
    out << text;
  } else {
    write_file(a.output, text);
  }
  return 0;
}

struct ColorArgs {
  std::string input;
  std::string algo = "color-edges";
  std::uint64_t seed = 1;
  std::string report;
  std::string output;
  bool trace = false;
  std::string trace_file;
  std::string prune_by = "weight";
};

int cmd_color(const ColorArgs& a, std::ostream& out, std::ostream& err) {
  const Algo algo = parse_algo(a.algo);
  RunOptions opts;
  opts.trace = a.trace || !a.trace_file.empty();
  if (a.prune_by == "size") {
    opts.prune_by = PruneBy::Size;
  } else if (a.prune_by != "weight") {
    throw std::invalid_argument("--prune-by must be weight or size");
  }
  const Graph g = read_edge_list_file(a.input);
  const RunResult res = run_algorithm(g, algo, a.seed, opts);

  nlohmann::json input = {{"path", a.input}};
  nlohmann::ordered_json report = make_run_report(g, input, algo, a.seed, res);
  if (algo == Algo::Recursive) {
    report["prune_by"] = a.prune_by;
  }

  const std::string dump = write_coloring(res.colors);
  if (a.output.empty() || a.output == "-") {
    out << dump;
  } else {
    write_file(a.output, dump);
  }
  if (!a.report.empty()) write_file(a.report, report.dump(2) + "\n");
  if (!a.trace_file.empty()) {
    std::ostringstream t;
    if (!res.steps.empty()) {
      write_step_traces(res.steps, t);
    } else if (!res.recursion.nodes.empty()) {
      write_recursion_trace(collect_level_stats(g, res.recursion), t);
    }
    write_file(a.trace_file, t.str());
  }

  const bool proper = report["proper"].get<bool>();
  err << to_string(algo) << ": n=" << g.vertex_count() << " m=" << g.edge_count()
      << " delta=" << g.max_degree() << " colors=" << report["colors_used"]
      << " wall_us=" << res.wall_us << (proper ? " proper" : " IMPROPER") << '\n';
  return proper ? 0 : kImproper;
}

struct VerifyArgs {
  std::string graph;
  std::string coloring;
  Color palette = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Graph g = read_edge_list_file(a.graph);
  const std::vector<Color> colors = read_coloring_file(a.coloring, g.edge_count());
  const Color palette = a.palette != 0 ? a.palette : g.max_degree() + 1;
  const ProperReport r = verify_proper(g, colors, palette);
  for (const Violation& v : r.violations) {
    out << "vertex " << v.vertex << ": color " << v.color << " on edges "
        << v.first << " and " << v.second << '\n';
  }
  for (EdgeId e : r.out_of_palette) {
    out << "edge " << e << ": color " << colors[e] << " outside palette "
        << palette << '\n';
  }
  for (EdgeId e = 0; e < colors.size(); ++e) {
    if (colors[e] == kUncolored) out << "edge " << e << ": uncolored\n";
  }
  const bool ok = r.proper && r.uncolored == 0;
  out << (ok ? "proper" : "improper") << ": m=" << g.edge_count()
      << " colors=" << r.colors_used << " palette=" << palette << '\n';
  return ok ? 0 : kImproper;
}

struct BenchArgs {
  std::string manifest;
  std::string output;
  unsigned jobs = 1;
  unsigned repetitions = 0;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::ifstream f(a.manifest);
  if (!f) throw IoError("cannot open '" + a.manifest + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("manifest: ") + e.what());
  }
  BenchManifest man = parse_manifest(j);
  if (a.repetitions != 0) man.repetitions = a.repetitions;
  const std::vector<BenchRow> rows = run_bench(man, a.jobs);
  std::ostringstream csv;
  write_bench_csv(rows, csv);
  if (a.output.empty() || a.output == "-") {
    out << csv.str();
  } else {
    write_file(a.output, csv.str());
  }
  const auto failed = std::count_if(rows.begin(), rows.end(),
                                    [](const BenchRow& r) { return r.status != "ok"; });
  if (failed != 0) err << failed << " of " << rows.size() << " rows failed\n";
  return failed == 0 ? 0 : kImproper;
}

}  // namespace

std::uint64_t default_seed() {
  const char* s = std::getenv("ARBCOLOR_SEED");
  if (s == nullptr || *s == '\0') return 1;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  return *end == '\0' ? v : 1;
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"(Delta+1)-edge coloring for sparse graphs"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "Write a generated graph");
  generate->add_option("--family", gen.family,
                       "star|forest-union|star-plus-forests|erdos-renyi|"
                       "preferential-attachment|grid")
      ->required();
  generate->add_option("--n", gen.spec.n, "Vertex count");
  generate->add_option("--m", gen.spec.m, "Edge count (erdos-renyi)");
  generate->add_option("--alpha", gen.spec.alpha, "Forest count");
  generate->add_option("--degree", gen.spec.degree, "Attachment degree");
  generate->add_option("--rows", gen.spec.rows);
  generate->add_option("--cols", gen.spec.cols);
  generate->add_option("--star-size", gen.spec.star_size,
                       "Star leaves (star-plus-forests, 0 = n-1)");
  generate->add_option("--seed", gen.spec.seed)->default_val(default_seed());
  generate->add_option("-o,--output", gen.output, "Edge-list path (default stdout)");

  ColorArgs col;
  col.seed = default_seed();
  CLI::App* color = app.add_subcommand("color", "Color an edge-list graph");
  color->add_option("input", col.input, "Edge-list file")->required();
  color->add_option("--algo", col.algo,
                    "naive|color-edges|recursive|recursive-size-prune-ablation")
      ->capture_default_str();
  color->add_option("--seed", col.seed)->capture_default_str();
  color->add_option("--report", col.report, "RunReport JSON path");
  color->add_option("-o,--output", col.output, "Coloring dump path (default stdout)");
  color->add_flag("--trace", col.trace, "Include step or level statistics");
  color->add_option("--trace-file", col.trace_file,
                    "Write step traces (JSON lines) or the recursion trace");
  color->add_option("--prune-by", col.prune_by, "weight|size")->capture_default_str();

  VerifyArgs ver;
  CLI::App* verify = app.add_subcommand("verify", "Check a coloring dump");
  verify->add_option("graph", ver.graph)->required();
  verify->add_option("coloring", ver.coloring)->required();
  verify->add_option("--palette", ver.palette, "Palette size (default Delta+1)");

  BenchArgs ben;
  CLI::App* bench = app.add_subcommand("bench", "Run a benchmark manifest");
  bench->add_option("manifest", ben.manifest)->required();
  bench->add_option("-o,--output", ben.output, "CSV path (default stdout)");
  bench->add_option("--jobs", ben.jobs)->capture_default_str();
  bench->add_option("--repetitions", ben.repetitions, "Override the manifest");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kFailure;
  }

  try {
    if (*generate) return cmd_generate(gen, out);
    if (*color) return cmd_color(col, out, err);
    if (*verify) return cmd_verify(ver, out);
    if (*bench) return cmd_bench(ben, out, err);
  } catch (const InfeasibleSpec& e) {
    err << "infeasible: " << e.what() << '\n';
    return kFailure;
  } catch (const GraphError& e) {
    err << "parse error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace arbcolor
