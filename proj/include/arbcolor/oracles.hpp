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

#ifndef ARBCOLOR_ORACLES_HPP
#define ARBCOLOR_ORACLES_HPP

// Brute-force checkers. These read raw color vectors and never call the
// fan/path fast paths except as the system under test.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "arbcolor/coloring.hpp"
#include "arbcolor/fan_path.hpp"
#include "arbcolor/graph.hpp"

namespace arbcolor {

struct OracleViolation {
  std::uint64_t seed = 0;  // reproduces the instance
  std::string detail;
};

struct OracleReport {
  std::string property;
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::size_t filtered = 0;  // sampled inputs rejected as improper
  std::vector<OracleViolation> violations;

  bool ok() const { return violations.empty(); }
  void absorb(const OracleReport& other);
};

nlohmann::json to_json(const OracleReport& report);

/// Every maximal two-colored path of the coloring, cycles excluded. A path
/// with two or more edges fixes its color pair; a single edge colored c is
/// maximal for every partner color and is reported once. Each path appears
/// once, walked from its lower-id end. O(k^2 (n + m)).
std::vector<AlternatingPath> enumerate_maximal_paths(const Graph& g,
                                                     std::span<const Color> colors,
                                                     Color palette);

/// Per edge, the number of listed paths in which it is internal (neither
/// endpoint is a path end).
std::vector<std::size_t> count_internal_memberships(
    const Graph& g, const std::vector<AlternatingPath>& paths);

/// Checks |{P : e ∈ I(P)}| <= w(e) for every colored edge and
/// Σ_P |I(P)| <= Σ_colored w(e).
OracleReport check_edge_belonging(const Graph& g,
                                        std::span<const Color> colors,
                                        Color palette, std::uint64_t seed = 0);

/// Random proper partial coloring: edges in random order, each left
/// uncolored with probability `skip`, otherwise given a uniform color free
/// at both ends (uncolored if none).
std::vector<Color> sample_partial_coloring(const Graph& g, Color palette,
                                           double skip, Rng& rng);

/// True when no vertex sees a color twice and all colors lie in [0, palette].
bool is_proper_raw(const Graph& g, std::span<const Color> colors, Color palette);

struct ExtendSuiteOptions {
  std::uint32_t n = 6;                 // graphs are edge subsets of K_n
  std::uint32_t max_edges = 15;
  std::uint32_t samples_per_graph = 3;
  bool all_missing_colors = true;      // every c_0 ∈ M(center), else one
  bool deterministic_baseline = true;  // also run the Misra-Gries step
  std::uint64_t seed = 1;
};

/// For every edge subset of K_n, samples proper partial colorings (a
/// uniform-random color vector filtered for properness, falling back to
/// greedy sampling), then for every uncolored edge, both endpoints as the
/// center and every c_0, runs fan -> path -> extend on a copy and checks
/// properness and that exactly that edge was added to the colored set.
OracleReport exhaustive_extend_suite(const ExtendSuiteOptions& options = {});

}  // namespace arbcolor

#endif  // ARBCOLOR_ORACLES_HPP
