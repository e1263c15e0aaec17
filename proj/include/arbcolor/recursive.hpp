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

#ifndef ARBCOLOR_RECURSIVE_HPP
#define ARBCOLOR_RECURSIVE_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arbcolor/coloring.hpp"
#include "arbcolor/graph.hpp"

namespace arbcolor {

/// Edge partition of a graph into two subgraphs with remapped dense ids.
/// Child vertices are the parent vertices with positive child degree, in
/// increasing parent id; child edges follow parent edge order.
struct EulerSplit {
  Graph left;
  Graph right;
  std::vector<std::uint8_t> side;  // per parent edge: 0 = left, 1 = right
  std::vector<EdgeId> child_edge;  // per parent edge, id within its side
  std::vector<Vertex> left_vertices;   // child vertex -> parent vertex
  std::vector<Vertex> right_vertices;

  const Graph& child(int s) const { return s == 0 ? left : right; }
  const std::vector<Vertex>& child_vertices(int s) const {
    return s == 0 ? left_vertices : right_vertices;
  }
};

/// Side assignment from a tour decomposition: trails between odd-degree
/// vertices first, then closed tours; edges alternate sides along each
/// tour, and the first side of every tour goes to the start vertex's
/// lighter side. Guarantees d(v)/2 - 1 <= d_side(v) <= d(v)/2 + 1. O(n + m).
std::vector<std::uint8_t> euler_sides(const Graph& g);

/// Materializes the two subgraphs for a side assignment.
EulerSplit split_by_sides(const Graph& g, std::vector<std::uint8_t> side);

inline EulerSplit euler_partition(const Graph& g) {
  return split_by_sides(g, euler_sides(g));
}

/// Union of two total colorings of the split's children with the right
/// palette shifted past the left one. Throws ImproperInput unless both are
/// total and proper within their palettes.
PartialColoring merge_colorings(const Graph& g, const EulerSplit& split,
                                std::span<const Color> left,
                                Color left_palette,
                                std::span<const Color> right,
                                Color right_palette);

enum class PruneBy { Weight, Size };

struct PruneResult {
  PartialColoring coloring;    // palette = target, kept colors compacted
  std::vector<Color> removed;  // removed classes, in the merged numbering
  Weight uncolored_weight = 0; // Σ w(e) over uncolored edges
  Color merged_palette = 0;
};

/// Uncolors the (palette - target) classes of least weight (or size), ties
/// to the lower color, and renumbers the rest to [1, target]. Class weight
/// is Σ min(d(u), d(v)) within the coloring's graph. Empty classes count
/// as weight-0 classes. No-op when palette <= target.
PruneResult prune_min_weight_colors(const PartialColoring& merged, Color target,
                                    PruneBy by = PruneBy::Weight);

/// Base-case test bound 2 sqrt(n / log2 n) for the top-level n; +inf for n < 2.
double base_case_threshold(std::size_t n);

/// One node of the recursion tree.
struct RecursionNode {
  unsigned level = 0;
  bool base_case = false;
  std::size_t vertices = 0;  // non-isolated vertices
  std::size_t edges = 0;
  std::uint32_t max_degree = 0;
  Weight weight = 0;
  // Filled for non-base nodes.
  Color merged_palette = 0;
  std::vector<Color> removed;
  Weight uncolored_weight = 0;
  std::size_t repaired = 0;
  // (root vertex, degree here) for every non-isolated vertex.
  std::vector<std::pair<Vertex, std::uint32_t>> root_degrees;
};

struct RecursionTrace {
  std::vector<RecursionNode> nodes;
};

struct RecursiveOptions {
  PruneBy prune_by = PruneBy::Weight;
  RecursionTrace* trace = nullptr;
  /// Base-case bound on Δ_H; negative selects base_case_threshold(n).
  double base_threshold = -1.0;
};

/// Divide-and-conquer (Δ+1)-coloring: base case colors an empty coloring
/// with color_edges; otherwise Euler-split, recurse with palettes Δ_i + 1,
/// merge, prune to Δ + 1 and repair with color_edges. Child calls get seeds
/// drawn from the parent stream, so results depend only on the seed.
PartialColoring recursive_color_edges(const Graph& g, Rng& rng,
                                      const RecursiveOptions& options = {});

struct LevelStats {
  unsigned level = 0;
  std::size_t subgraphs = 0;
  double delta_ref = 0.0;   // 2^-i Δ
  double weight_ref = 0.0;  // 2^-i W
  std::vector<std::uint32_t> max_degrees;
  std::vector<Weight> weights;
  std::vector<std::size_t> edges;
  Weight total_weight = 0;
  bool delta_ok = true;   // Δ_i - 2 <= Δ_H <= Δ_i + 2
  bool weight_ok = true;  // Σ w(H) <= W_i + 2m
  bool vertex_ok = true;  // 2^-i d_G(v) - 2 <= d_H(v) <= 2^-i d_G(v) + 2
  std::vector<std::string> violations;

  bool ok() const { return delta_ok && weight_ok && vertex_ok; }
};

/// Groups a trace by level and checks the per-level degree and weight
/// bounds against the root graph.
std::vector<LevelStats> collect_level_stats(const Graph& root,
                                            const RecursionTrace& trace);

/// Checks Σ_{uncolored} w(e) <= 3 W_H / (Δ_H + 4) on every pruned node.
std::vector<std::string> check_prune_bounds(const RecursionTrace& trace);

/// {"levels": [{"level": i, "subgraphs": [{"max_degree", "weight",
/// "edges"}...]}...]}
nlohmann::ordered_json recursion_trace_json(const std::vector<LevelStats>& levels);
void write_recursion_trace(const std::vector<LevelStats>& levels,
                           std::ostream& out);

}  // namespace arbcolor

#endif  // ARBCOLOR_RECURSIVE_HPP
