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

#include "arbcolor/recursive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "arbcolor/sequential.hpp"

namespace arbcolor {

std::vector<std::uint8_t> euler_sides(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<std::uint8_t> side(m, 0);
  std::vector<char> used(m, 0);
  std::vector<std::uint32_t> cursor(n, 0);
  std::vector<std::uint32_t> remaining(g.degrees().begin(), g.degrees().end());
  std::vector<int> balance(n, 0);  // d_left(v) - d_right(v) so far
  std::vector<EdgeId> trail;

  auto next_edge = [&](Vertex v) -> EdgeId {
    const auto inc = g.incident(v);
    while (cursor[v] < inc.size() && used[inc[cursor[v]].edge]) ++cursor[v];
    return cursor[v] < inc.size() ? inc[cursor[v]].edge : kNoEdge;
  };
  // Follows unused edges from `start` until stuck.
  auto walk = [&](Vertex start) {
    trail.clear();
    Vertex cur = start;
    for (EdgeId e = next_edge(cur); e != kNoEdge; e = next_edge(cur)) {
      used[e] = 1;
      const Endpoints& p = g.endpoints(e);
      --remaining[p.u];
      --remaining[p.v];
      trail.push_back(e);
      cur = g.other(e, cur);
    }
  };
  auto alternate = [&](Vertex start) {
    std::uint8_t s = balance[start] > 0 ? 1 : 0;
    for (EdgeId e : trail) {
      side[e] = s;
      const Endpoints& p = g.endpoints(e);
      const int delta = s == 0 ? 1 : -1;
      balance[p.u] += delta;
      balance[p.v] += delta;
      s ^= 1;
    }
  };

  // Open trails: each starts and ends at a vertex of odd remaining degree,
  // so every odd-degree vertex ends exactly one of them.
  for (Vertex v = 0; v < n; ++v) {
    if (remaining[v] % 2 == 1) {
      walk(v);
      alternate(v);
    }
  }
  // All remaining degrees are even: closed tours.
  for (Vertex v = 0; v < n; ++v) {
    while (remaining[v] > 0) {
      walk(v);
      alternate(v);
    }
  }
  return side;
}

EulerSplit split_by_sides(const Graph& g, std::vector<std::uint8_t> side) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  EulerSplit split;
  split.side = std::move(side);
  split.child_edge.assign(m, 0);

  std::vector<std::uint32_t> deg[2] = {std::vector<std::uint32_t>(n, 0),
                                       std::vector<std::uint32_t>(n, 0)};
  for (EdgeId e = 0; e < m; ++e) {
    const Endpoints& p = g.endpoints(e);
    ++deg[split.side[e]][p.u];
    ++deg[split.side[e]][p.v];
  }
  std::vector<Vertex> local[2] = {std::vector<Vertex>(n, 0),
                                  std::vector<Vertex>(n, 0)};
  std::vector<Vertex>* verts[2] = {&split.left_vertices, &split.right_vertices};
  for (int s = 0; s < 2; ++s) {
    for (Vertex v = 0; v < n; ++v) {
      if (deg[s][v] == 0) continue;
      local[s][v] = static_cast<Vertex>(verts[s]->size());
      verts[s]->push_back(v);
    }
  }
  std::vector<Endpoints> edges[2];
  for (EdgeId e = 0; e < m; ++e) {
    const int s = split.side[e];
    const Endpoints& p = g.endpoints(e);
    split.child_edge[e] = static_cast<EdgeId>(edges[s].size());
    edges[s].push_back({local[s][p.u], local[s][p.v]});
  }
  split.left = build_graph(split.left_vertices.size(), edges[0], false);
  split.right = build_graph(split.right_vertices.size(), edges[1], false);
  return split;
}

PartialColoring merge_colorings(const Graph& g, const EulerSplit& split,
                                std::span<const Color> left,
                                Color left_palette,
                                std::span<const Color> right,
                                Color right_palette) {
  const std::span<const Color> parts[2] = {left, right};
  const Color palettes[2] = {left_palette, right_palette};
  for (int s = 0; s < 2; ++s) {
    const Graph& child = split.child(s);
    if (parts[s].size() != child.edge_count()) {
      throw ColoringError(ColoringError::Kind::ImproperInput,
                          "child coloring has the wrong number of edges");
    }
    const ProperReport r = verify_proper(child, parts[s], palettes[s]);
    if (!r.proper || r.uncolored != 0) {
      throw ColoringError(ColoringError::Kind::ImproperInput,
                          std::string(s == 0 ? "left" : "right") +
                              " coloring is not a total proper coloring");
    }
  }
  std::vector<Color> merged(g.edge_count());
  for (EdgeId e = 0; e < merged.size(); ++e) {
    const int s = split.side[e];
    merged[e] = parts[s][split.child_edge[e]] + (s == 1 ? left_palette : 0);
  }
  return PartialColoring::from_colors(g, left_palette + right_palette, merged);
}

PruneResult prune_min_weight_colors(const PartialColoring& merged, Color target,
                                    PruneBy by) {
  const Graph& g = merged.graph();
  const Color k = merged.palette();
  if (merged.uncolored_count() != 0) {
    throw ColoringError(ColoringError::Kind::ImproperInput,
                        "prune expects a total coloring");
  }
  if (k <= target) {
    return PruneResult{PartialColoring::from_colors(g, target, merged.colors()),
                       {}, 0, k};
  }
  if (k > target + 3) {
    throw ColoringError(ColoringError::Kind::InvalidArgument,
                        "merged palette " + std::to_string(k) +
                            " exceeds target + 3");
  }

  std::vector<Weight> key(k + 1, 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    key[merged.color(e)] += by == PruneBy::Weight ? edge_weight(g, e) : 1;
  }
  std::vector<Color> order(k);
  std::iota(order.begin(), order.end(), Color{1});
  const Color drop = k - target;
  std::partial_sort(order.begin(), order.begin() + drop, order.end(),
                    [&](Color a, Color b) {
                      return key[a] != key[b] ? key[a] < key[b] : a < b;
                    });
  std::vector<Color> removed(order.begin(), order.begin() + drop);
  std::sort(removed.begin(), removed.end());

  std::vector<Color> remap(k + 1, kUncolored);
  Color next = 1;
  for (Color c = 1; c <= k; ++c) {
    if (!std::binary_search(removed.begin(), removed.end(), c)) remap[c] = next++;
  }
  std::vector<Color> colors(g.edge_count());
  Weight uncolored_weight = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    colors[e] = remap[merged.color(e)];
    if (colors[e] == kUncolored) uncolored_weight += edge_weight(g, e);
  }
  return PruneResult{PartialColoring::from_colors(g, target, colors),
                     std::move(removed), uncolored_weight, k};
}

double base_case_threshold(std::size_t n) {
  if (n < 2) return std::numeric_limits<double>::infinity();
  const double dn = static_cast<double>(n);
  return 2.0 * std::sqrt(dn / std::log2(dn));
}

namespace {

class Recursion {
 public:
  Recursion(std::size_t top_n, const RecursiveOptions& options)
      : threshold_(options.base_threshold >= 0 ? options.base_threshold
                                               : base_case_threshold(top_n)),
        options_(options) {}

  // Returns a total coloring of h with palette Δ(h) + 1.
  std::vector<Color> run(const Graph& h, std::uint64_t seed, unsigned level,
                         const std::vector<Vertex>* to_root) {
    Rng rng(seed);
    const std::uint32_t delta = h.max_degree();
    RecursionTrace* trace = options_.trace;
    std::size_t node = 0;
    if (trace != nullptr) {
      node = trace->nodes.size();
      trace->nodes.push_back(describe(h, level, to_root));
    }

    // A matching never splits into two smaller pieces, so Δ <= 1 always stops.
    if (delta <= threshold_ || delta <= 1) {
      if (trace != nullptr) trace->nodes[node].base_case = true;
      PartialColoring chi(h, delta + 1);
      color_edges(chi, rng);
      return {chi.colors().begin(), chi.colors().end()};
    }

    const EulerSplit split = euler_partition(h);
    const std::uint64_t seeds[2] = {rng(), rng()};
    std::vector<Color> child_colors[2];
    for (int s = 0; s < 2; ++s) {
      std::vector<Vertex> child_root;
      if (trace != nullptr) {
        const std::vector<Vertex>& verts = split.child_vertices(s);
        child_root.resize(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i) {
          child_root[i] = to_root != nullptr ? (*to_root)[verts[i]] : verts[i];
        }
      }
      child_colors[s] = run(split.child(s), seeds[s], level + 1,
                            trace != nullptr ? &child_root : nullptr);
    }

    const PartialColoring merged = merge_colorings(
        h, split, child_colors[0], split.left.max_degree() + 1,
        child_colors[1], split.right.max_degree() + 1);
    PruneResult pruned =
        prune_min_weight_colors(merged, delta + 1, options_.prune_by);
    const std::size_t to_repair = pruned.coloring.uncolored_count();
    color_edges(pruned.coloring, rng);

    if (trace != nullptr) {
      RecursionNode& rec = trace->nodes[node];
      rec.merged_palette = pruned.merged_palette;
      rec.removed = pruned.removed;
      rec.uncolored_weight = pruned.uncolored_weight;
      rec.repaired = to_repair;
    }
    return {pruned.coloring.colors().begin(), pruned.coloring.colors().end()};
  }

 private:
  static RecursionNode describe(const Graph& h, unsigned level,
                                const std::vector<Vertex>* to_root) {
    RecursionNode rec;
    rec.level = level;
    rec.edges = h.edge_count();
    rec.max_degree = h.max_degree();
    rec.weight = graph_weight(h);
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
      if (h.degree(v) == 0) continue;
      ++rec.vertices;
      rec.root_degrees.emplace_back(to_root != nullptr ? (*to_root)[v] : v,
                                    h.degree(v));
    }
    return rec;
  }

  double threshold_;
  RecursiveOptions options_;
};

}  // namespace

PartialColoring recursive_color_edges(const Graph& g, Rng& rng,
                                      const RecursiveOptions& options) {
  Recursion recursion(g.vertex_count(), options);
  const std::vector<Color> colors = recursion.run(g, rng(), 0, nullptr);
  return PartialColoring::from_colors(g, g.max_degree() + 1, colors);
}

std::vector<LevelStats> collect_level_stats(const Graph& root,
                                            const RecursionTrace& trace) {
  std::map<unsigned, std::vector<const RecursionNode*>> by_level;
  for (const RecursionNode& node : trace.nodes) by_level[node.level].push_back(&node);

  const double delta = root.max_degree();
  const double weight = static_cast<double>(graph_weight(root));
  const double m = static_cast<double>(root.edge_count());
  std::vector<LevelStats> out;
  std::vector<std::uint32_t> present(root.vertex_count(), 0);

  for (const auto& [level, nodes] : by_level) {
    LevelStats s;
    s.level = level;
    s.subgraphs = nodes.size();
    const double scale = std::ldexp(1.0, -static_cast<int>(level));
    s.delta_ref = delta * scale;
    s.weight_ref = weight * scale;
    std::fill(present.begin(), present.end(), 0);

    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const RecursionNode& node = *nodes[i];
      s.max_degrees.push_back(node.max_degree);
      s.weights.push_back(node.weight);
      s.edges.push_back(node.edges);
      s.total_weight += node.weight;
      if (node.max_degree < s.delta_ref - 2 || node.max_degree > s.delta_ref + 2) {
        s.delta_ok = false;
        s.violations.push_back("level " + std::to_string(level) + " subgraph " +
                               std::to_string(i) + ": max degree " +
                               std::to_string(node.max_degree) +
                               " outside Δ_i ± 2 = " + std::to_string(s.delta_ref) +
                               " ± 2");
      }
      for (const auto& [v, d] : node.root_degrees) {
        ++present[v];
        const double ref = root.degree(v) * scale;
        if (d < ref - 2 || d > ref + 2) {
          s.vertex_ok = false;
          s.violations.push_back("level " + std::to_string(level) + " vertex " +
                                 std::to_string(v) + ": degree " +
                                 std::to_string(d) + " outside " +
                                 std::to_string(ref) + " ± 2");
        }
      }
    }
    // Vertices missing from some subgraph have degree 0 there.
    for (Vertex v = 0; v < root.vertex_count(); ++v) {
      if (present[v] < nodes.size() && root.degree(v) * scale - 2 > 0) {
        s.vertex_ok = false;
        s.violations.push_back("level " + std::to_string(level) + " vertex " +
                               std::to_string(v) +
                               ": absent from a subgraph but 2^-i d(v) > 2");
      }
    }
    if (static_cast<double>(s.total_weight) > s.weight_ref + 2 * m) {
      s.weight_ok = false;
      s.violations.push_back("level " + std::to_string(level) + ": total weight " +
                             std::to_string(s.total_weight) + " exceeds W_i + 2m");
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> check_prune_bounds(const RecursionTrace& trace) {
  std::vector<std::string> violations;
  for (std::size_t i = 0; i < trace.nodes.size(); ++i) {
    const RecursionNode& node = trace.nodes[i];
    if (node.base_case) continue;
    // uncolored_weight <= 3 W_H / (Δ_H + 4), in integers.
    if (node.uncolored_weight * (Weight{node.max_degree} + 4) > 3 * node.weight) {
      violations.push_back("node " + std::to_string(i) + " (level " +
                           std::to_string(node.level) + "): uncolored weight " +
                           std::to_string(node.uncolored_weight) +
                           " exceeds 3 W/(Δ+4) with W=" +
                           std::to_string(node.weight) +
                           ", Δ=" + std::to_string(node.max_degree));
    }
  }
  return violations;
}

nlohmann::ordered_json recursion_trace_json(const std::vector<LevelStats>& levels) {
  nlohmann::ordered_json j;
  j["schema"] = "arbcolor.recursion_trace/1";
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const LevelStats& s : levels) {
    nlohmann::ordered_json level;
    level["level"] = s.level;
    level["delta_ref"] = s.delta_ref;
    level["weight_ref"] = s.weight_ref;
    level["total_weight"] = s.total_weight;
    nlohmann::ordered_json subs = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < s.max_degrees.size(); ++i) {
      subs.push_back({{"max_degree", s.max_degrees[i]},
                      {"weight", s.weights[i]},
                      {"edges", s.edges[i]}});
    }
    level["subgraphs"] = std::move(subs);
    level["ok"] = s.ok();
    arr.push_back(std::move(level));
  }
  j["levels"] = std::move(arr);
  return j;
}

void write_recursion_trace(const std::vector<LevelStats>& levels,
                           std::ostream& out) {
  out << recursion_trace_json(levels).dump(2) << '\n';
}

}  // namespace arbcolor
