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


#include "arbcolor/oracles.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "arbcolor/sequential.hpp"

namespace arbcolor {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Weight min_degree(const Graph& g, EdgeId e) {
  const Endpoints& p = g.endpoints(e);
  return std::min(g.degree(p.u), g.degree(p.v));
}

// occ[v * (k + 1) + c] = edge of v colored c.
std::vector<EdgeId> occupancy_table(const Graph& g, std::span<const Color> colors,
                                    Color k) {
  std::vector<EdgeId> occ(g.vertex_count() * (k + 1), kNoEdge);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Color c = colors[e];
    if (c == kUncolored) continue;
    if (c > k) throw std::invalid_argument("color outside palette");
    for (Vertex x : {g.endpoints(e).u, g.endpoints(e).v}) {
      EdgeId& slot = occ[x * (k + 1) + c];
      if (slot != kNoEdge) throw std::invalid_argument("improper coloring");
      slot = e;
    }
  }
  return occ;
}

}  // namespace

void OracleReport::absorb(const OracleReport& other) {
  instances += other.instances;
  checks += other.checks;
  filtered += other.filtered;
  violations.insert(violations.end(), other.violations.begin(),
                    other.violations.end());
}

nlohmann::json to_json(const OracleReport& report) {
  nlohmann::ordered_json j;
  j["property"] = report.property;
  j["instances"] = report.instances;
  j["checks"] = report.checks;
  j["filtered"] = report.filtered;
  j["ok"] = report.ok();
  nlohmann::ordered_json v = nlohmann::ordered_json::array();
  for (const OracleViolation& x : report.violations) {
    v.push_back({{"seed", x.seed}, {"detail", x.detail}});
  }
  j["violations"] = std::move(v);
  return nlohmann::json::parse(j.dump());
}

std::vector<AlternatingPath> enumerate_maximal_paths(const Graph& g,
                                                     std::span<const Color> colors,
                                                     Color palette) {
  const std::size_t n = g.vertex_count();
  const std::vector<EdgeId> occ = occupancy_table(g, colors, palette);
  auto at = [&](Vertex v, Color c) { return occ[v * (palette + 1) + c]; };

  std::vector<AlternatingPath> out;
  std::vector<char> single_done(g.edge_count(), 0);
  std::vector<char> used(g.edge_count(), 0);
  for (Color a = 1; a <= palette; ++a) {
    for (Color b = a + 1; b <= palette; ++b) {
      std::fill(used.begin(), used.end(), 0);
      for (Vertex v = 0; v < n; ++v) {
        const EdgeId ea = at(v, a);
        const EdgeId eb = at(v, b);
        if ((ea == kNoEdge) == (eb == kNoEdge)) continue;  // not an end
        const EdgeId first = ea != kNoEdge ? ea : eb;
        if (used[first]) continue;

        AlternatingPath p;
        p.start = v;
        p.first_color = colors[first];
        p.start_missing = p.first_color == a ? b : a;
        p.vertices.push_back(v);
        Vertex cur = v;
        Color want = p.first_color;
        for (EdgeId e = first; e != kNoEdge; e = at(cur, want)) {
          used[e] = 1;
          p.edges.push_back(e);
          const Endpoints& ends = g.endpoints(e);
          cur = ends.u == cur ? ends.v : ends.u;
          p.vertices.push_back(cur);
          want = want == a ? b : a;
        }
        if (p.edges.size() == 1) {
          if (single_done[first]) continue;
          single_done[first] = 1;
        }
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

std::vector<std::size_t> count_internal_memberships(
    const Graph& g, const std::vector<AlternatingPath>& paths) {
  std::vector<std::size_t> count(g.edge_count(), 0);
  for (const AlternatingPath& p : paths) {
    for (std::size_t i = 1; i + 1 < p.edges.size(); ++i) ++count[p.edges[i]];
  }
  return count;
}

OracleReport check_edge_belonging(const Graph& g,
                                        std::span<const Color> colors,
                                        Color palette, std::uint64_t seed) {
  OracleReport r;
  r.property = "edge-belonging";
  r.instances = 1;
  const std::vector<AlternatingPath> paths =
      enumerate_maximal_paths(g, colors, palette);
  const std::vector<std::size_t> count = count_internal_memberships(g, paths);
  std::size_t total_internal = 0;
  Weight total_weight = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    total_internal += count[e];
    if (colors[e] == kUncolored) {
      if (count[e] != 0) {
        r.violations.push_back(
            {seed, "uncolored edge " + std::to_string(e) + " internal to a path"});
      }
      continue;
    }
    ++r.checks;
    const Weight w = min_degree(g, e);
    total_weight += w;
    if (count[e] > w) {
      std::ostringstream msg;
      msg << "edge " << e << " internal to " << count[e] << " paths, w = " << w;
      r.violations.push_back({seed, msg.str()});
    }
  }
  ++r.checks;
  if (total_internal > total_weight) {
    std::ostringstream msg;
    msg << "sum of internal counts " << total_internal
        << " exceeds colored weight " << total_weight;
    r.violations.push_back({seed, msg.str()});
  }
  return r;
}

std::vector<Color> sample_partial_coloring(const Graph& g, Color palette,
                                           double skip, Rng& rng) {
  const std::size_t m = g.edge_count();
  std::vector<EdgeId> order(m);
  for (EdgeId e = 0; e < m; ++e) order[e] = e;
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Color> colors(m, kUncolored);
  std::vector<std::vector<char>> seen(g.vertex_count(),
                                      std::vector<char>(palette + 1, 0));
  std::bernoulli_distribution leave(skip);
  std::vector<Color> options;
  for (EdgeId e : order) {
    if (leave(rng)) continue;
    const Endpoints& p = g.endpoints(e);
    options.clear();
    for (Color c = 1; c <= palette; ++c) {
      if (!seen[p.u][c] && !seen[p.v][c]) options.push_back(c);
    }
    if (options.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    const Color c = options[pick(rng)];
    colors[e] = c;
    seen[p.u][c] = seen[p.v][c] = 1;
  }
  return colors;
}

bool is_proper_raw(const Graph& g, std::span<const Color> colors, Color palette) {
  std::vector<char> seen(static_cast<std::size_t>(palette) + 1, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::fill(seen.begin(), seen.end(), 0);
    for (const Incidence& inc : g.incident(v)) {
      const Color c = colors[inc.edge];
      if (c == kUncolored) continue;
      if (c > palette || seen[c]) return false;
      seen[c] = 1;
    }
  }
  return true;
}

namespace {

struct ExtendCheck {
  const Graph& g;
  Color palette;
  std::span<const Color> before;
  OracleReport& report;
  std::uint64_t seed;

  void run(const PartialColoring& after, EdgeId e, const std::string& where) {
    ++report.checks;
    std::string problem;
    const std::span<const Color> now = after.colors();
    if (!is_proper_raw(g, now, palette)) problem = "improper result";
    for (EdgeId f = 0; problem.empty() && f < g.edge_count(); ++f) {
      const bool expect = before[f] != kUncolored || f == e;
      if ((now[f] != kUncolored) != expect) {
        problem = "edge " + std::to_string(f) + " has wrong colored status";
      }
    }
    if (problem.empty()) problem = after.check_consistency();
    if (!problem.empty()) report.violations.push_back({seed, where + ": " + problem});
  }
};

}  // namespace

OracleReport exhaustive_extend_suite(const ExtendSuiteOptions& opt) {
  OracleReport report;
  report.property = "extend-coloring";
  const std::uint32_t n = opt.n;
  if (n < 2 || n > 7) throw std::invalid_argument("extend suite needs 2 <= n <= 7");

  std::vector<Endpoints> all;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
  }
  const std::uint64_t subsets = std::uint64_t{1} << all.size();

  std::vector<Endpoints> edges;
  std::vector<Color> missing;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    if (static_cast<std::uint32_t>(std::popcount(mask)) > opt.max_edges) continue;
    edges.clear();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1) edges.push_back(all[i]);
    }
    const Graph g = build_graph(n, edges);
    const Color palette = g.max_degree() + 1;
    const std::uint64_t seed = splitmix(opt.seed ^ splitmix(mask));
    Rng rng(seed);
    ++report.instances;

    for (std::uint32_t s = 0; s < opt.samples_per_graph; ++s) {
      std::vector<Color> colors(g.edge_count());
      std::uniform_int_distribution<Color> any(0, palette);
      for (Color& c : colors) c = any(rng);
      if (!is_proper_raw(g, colors, palette)) {
        ++report.filtered;
        colors = sample_partial_coloring(g, palette, 0.4, rng);
      }
      if (std::none_of(colors.begin(), colors.end(),
                       [](Color c) { return c == kUncolored; })) {
        std::uniform_int_distribution<EdgeId> pick(0, g.edge_count() - 1);
        colors[pick(rng)] = kUncolored;
      }

      const PartialColoring chi = PartialColoring::from_colors(g, palette, colors);
      ExtendCheck check{g, palette, colors, report, seed};
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (colors[e] != kUncolored) continue;
        std::ostringstream tag;
        tag << "mask " << mask << " sample " << s << " edge " << e;
        for (Vertex center : {g.endpoints(e).u, g.endpoints(e).v}) {
          missing.clear();
          std::vector<char> seen(palette + 1, 0);
          for (const Incidence& inc : g.incident(center)) seen[colors[inc.edge]] = 1;
          for (Color c = 1; c <= palette; ++c) {
            if (!seen[c]) missing.push_back(c);
          }
          if (!opt.all_missing_colors) missing.resize(1);
          for (Color c0 : missing) {
            const std::string where =
                tag.str() + " center " + std::to_string(center) + " c0 " +
                std::to_string(c0);
            PartialColoring copy = chi;
            try {
              const Fan fan = make_primed_fan(copy, e, center);
              const AlternatingPath path =
                  maximal_alternating_path(copy, center, c0, fan.primed_color);
              extend_coloring(copy, fan, path);
            } catch (const std::exception& ex) {
              report.violations.push_back({seed, where + ": threw " + ex.what()});
              continue;
            }
            check.run(copy, e, where);
          }
        }
        if (opt.deterministic_baseline) {
          PartialColoring copy = chi;
          try {
            color_one_edge_deterministic(copy, e);
          } catch (const std::exception& ex) {
            report.violations.push_back(
                {seed, tag.str() + " deterministic: threw " + ex.what()});
            continue;
          }
          check.run(copy, e, tag.str() + " deterministic");
        }
      }
    }
  }
  return report;
}

}  // namespace arbcolor
