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


#ifndef ARBCOLOR_TESTS_HELPERS_HPP
#define ARBCOLOR_TESTS_HELPERS_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "arbcolor/coloring.hpp"
#include "arbcolor/graph.hpp"

namespace testing {

using namespace arbcolor;

inline Graph make(std::size_t n, std::vector<Endpoints> edges) {
  return build_graph(n, edges);
}

inline Graph triangle() { return make(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline Graph path_graph(std::size_t n) {
  std::vector<Endpoints> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return make(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Endpoints> e;
  for (Vertex v = 0; v < n; ++v) e.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return make(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Endpoints> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  }
  return make(n, e);
}

inline Graph star(std::size_t leaves) {
  std::vector<Endpoints> e;
  for (Vertex v = 1; v <= leaves; ++v) e.push_back({0, v});
  return make(leaves + 1, e);
}

// Brute-force properness: every pair of edges sharing an endpoint differs.
inline bool proper_by_pairs(const Graph& g, std::span<const Color> colors) {
  for (EdgeId a = 0; a < g.edge_count(); ++a) {
    for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
      if (colors[a] == kUncolored || colors[a] != colors[b]) continue;
      const Endpoints& p = g.endpoints(a);
      const Endpoints& q = g.endpoints(b);
      if (p.u == q.u || p.u == q.v || p.v == q.u || p.v == q.v) return false;
    }
  }
  return true;
}

// M(v) by scanning the colors of incident edges.
inline std::vector<Color> missing_scan(const Graph& g, std::span<const Color> colors,
                                       Vertex v, Color palette) {
  std::set<Color> used;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Endpoints& p = g.endpoints(e);
    if ((p.u == v || p.v == v) && colors[e] != kUncolored) used.insert(colors[e]);
  }
  std::vector<Color> out;
  for (Color c = 1; c <= palette; ++c) {
    if (!used.count(c)) out.push_back(c);
  }
  return out;
}

inline std::size_t distinct_colors(std::span<const Color> colors) {
  std::set<Color> s;
  for (Color c : colors) {
    if (c != kUncolored) s.insert(c);
  }
  return s.size();
}

}  // namespace testing

#endif  // ARBCOLOR_TESTS_HELPERS_HPP
