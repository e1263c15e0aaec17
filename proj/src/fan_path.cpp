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

#include "arbcolor/fan_path.hpp"

#include <algorithm>

namespace arbcolor {

namespace {

[[noreturn]] void invalid_fan(const std::string& msg) {
  throw ColoringError(ColoringError::Kind::InvalidFan, msg);
}

// Leaf-color condition only; O(upto) and allocation free.
std::string check_leaf_colors(const PartialColoring& chi, const Fan& fan,
                              std::size_t upto) {
  if (fan.leaves.empty() || fan.leaves.size() != fan.leaf_edges.size()) {
    return "fan has inconsistent leaf arrays";
  }
  if (upto > fan.last()) return "leaf index beyond fan";
  if (chi.is_colored(fan.leaf_edges[0])) return "edge (v, x_0) is colored";
  for (std::size_t i = 1; i <= upto; ++i) {
    const Color c = chi.color(fan.leaf_edges[i]);
    if (c == kUncolored) {
      return "leaf edge " + std::to_string(i) + " is uncolored";
    }
    if (!chi.is_missing(fan.leaves[i - 1], c)) {
      return "color of leaf edge " + std::to_string(i) +
             " is not missing at the previous leaf";
    }
  }
  return {};
}

}  // namespace

void make_primed_fan(const PartialColoring& chi, EdgeId e, Vertex center,
                     FanScratch& scratch, Fan& fan) {
  const Graph& g = chi.graph();
  const Endpoints& ends = g.endpoints(e);
  if (ends.u != center && ends.v != center) {
    throw ColoringError(ColoringError::Kind::InvalidArgument,
                        "center is not an endpoint of the edge");
  }
  if (chi.is_colored(e)) {
    throw ColoringError(ColoringError::Kind::AlreadyColored,
                        "fan base edge " + std::to_string(e) + " is colored");
  }
  fan.center = center;
  fan.leaves.clear();
  fan.leaf_edges.clear();
  fan.repeat_index = 0;
  fan.leaves.push_back(g.other(e, center));
  fan.leaf_edges.push_back(e);

  for (;;) {
    const Color c1 = chi.some_missing_color(fan.leaves.back());
    fan.primed_color = c1;
    if (chi.is_missing(center, c1)) {
      fan.primed_case = PrimedCase::MissingAtCenter;
      return;
    }
    if (fan.leaves.size() == 1) {  // most fans stop above; mark lazily
      scratch.begin(g.vertex_count());
      scratch.mark(fan.leaves[0], 0);
    }
    const EdgeId next_edge = chi.occupant(center, c1);
    const Vertex next = g.other(next_edge, center);
    if (scratch.marked(next)) {
      fan.primed_case = PrimedCase::MissingAtEarlierLeaf;
      fan.repeat_index = scratch.index(next);
      return;
    }
    scratch.mark(next, static_cast<std::uint32_t>(fan.leaves.size()));
    fan.leaves.push_back(next);
    fan.leaf_edges.push_back(next_edge);
  }
}

Fan make_primed_fan(const PartialColoring& chi, EdgeId e, Vertex center,
                    FanScratch& scratch) {
  Fan fan;
  make_primed_fan(chi, e, center, scratch, fan);
  return fan;
}

Fan make_primed_fan(const PartialColoring& chi, EdgeId e, Vertex center) {
  FanScratch scratch;
  return make_primed_fan(chi, e, center, scratch);
}

std::string check_fan(const PartialColoring& chi, const Fan& fan,
                      std::size_t upto, bool check_primed) {
  const Graph& g = chi.graph();
  if (std::string err = check_leaf_colors(chi, fan, upto); !err.empty()) {
    return err;
  }
  for (std::size_t i = 0; i <= fan.last(); ++i) {
    const Endpoints& p = g.endpoints(fan.leaf_edges[i]);
    const bool joins = (p.u == fan.center && p.v == fan.leaves[i]) ||
                       (p.v == fan.center && p.u == fan.leaves[i]);
    if (!joins) return "leaf edge " + std::to_string(i) + " does not join v, x_i";
  }
  std::vector<Vertex> sorted = fan.leaves;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return "leaves are not distinct";
  }
  if (!check_primed) return {};

  const Color c1 = fan.primed_color;
  const std::size_t t = fan.last();
  if (!chi.is_missing(fan.leaves[t], c1)) return "primed color not missing at x_t";
  bool primed = chi.is_missing(fan.center, c1);
  for (std::size_t j = 0; j < t && !primed; ++j) {
    primed = chi.is_missing(fan.leaves[j], c1);
  }
  if (!primed) return "fan is not primed by its color";
  if (fan.primed_case == PrimedCase::MissingAtEarlierLeaf) {
    const std::size_t j = fan.repeat_index;
    if (j < 1 || j >= t || chi.color(fan.leaf_edges[j]) != c1) {
      return "repeat index does not carry the primed color";
    }
  }
  return {};
}

void shift_fan(PartialColoring& chi, const Fan& fan, std::size_t j) {
  if (std::string err = check_leaf_colors(chi, fan, j); !err.empty()) {
    invalid_fan("cannot shift fan: " + err);
  }
  for (std::size_t i = 1; i <= j; ++i) {
    const Color c = chi.color(fan.leaf_edges[i]);
    chi.unassign(fan.leaf_edges[i]);
    chi.assign(fan.leaf_edges[i - 1], c);
  }
}

void maximal_alternating_path(const PartialColoring& chi, Vertex u,
                              Color start_missing, Color first_color,
                              AlternatingPath& path) {
  if (!chi.is_missing(u, start_missing)) {
    throw ColoringError(ColoringError::Kind::InvalidArgument,
                        "start color is not missing at the start vertex");
  }
  const Graph& g = chi.graph();
  path.start = u;
  path.start_missing = start_missing;
  path.first_color = first_color;
  path.vertices.clear();
  path.edges.clear();
  path.vertices.push_back(u);
  if (start_missing == first_color) return;

  Vertex cur = u;
  Color want = first_color;
  for (;;) {
    const EdgeId e = chi.occupant(cur, want);
    if (e == kNoEdge) break;
    const Vertex next = g.other(e, cur);
    // A walk from a vertex missing c_0 follows a path component; returning
    // to u or exceeding n-1 edges means the coloring is corrupt.
    if (next == u || path.edges.size() + 1 >= g.vertex_count()) {
      throw ColoringError(ColoringError::Kind::NotMaximal,
                          "alternating walk is not a simple path");
    }
    path.edges.push_back(e);
    path.vertices.push_back(next);
    cur = next;
    want = want == first_color ? start_missing : first_color;
  }
}

AlternatingPath maximal_alternating_path(const PartialColoring& chi, Vertex u,
                                         Color start_missing,
                                         Color first_color) {
  AlternatingPath path;
  maximal_alternating_path(chi, u, start_missing, first_color, path);
  return path;
}

void flip_path(PartialColoring& chi, const AlternatingPath& path) {
  if (path.edges.empty()) return;
  const Color c0 = path.start_missing;
  const Color c1 = path.first_color;
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    if (chi.color(path.edges[i]) != (i % 2 == 0 ? c1 : c0)) {
      throw ColoringError(ColoringError::Kind::NotMaximal,
                          "path colors do not alternate");
    }
  }
  const Color last = chi.color(path.edges.back());
  const Color beyond = last == c1 ? c0 : c1;
  if (!chi.is_missing(path.start, c0) || !chi.is_missing(path.end(), beyond)) {
    throw ColoringError(ColoringError::Kind::NotMaximal,
                        "alternating path can be extended at an endpoint");
  }
  chi.swap_colors(path.edges, c0, c1);
}

ExtendCase extend_coloring(PartialColoring& chi, const Fan& fan,
                           const AlternatingPath& path) {
  const Vertex v = fan.center;
  const Color c1 = fan.primed_color;
  const std::size_t t = fan.last();
  if (chi.is_missing(v, c1)) {
    shift_fan(chi, fan, t);
    chi.assign(fan.leaf_edges[t], c1);
    return ExtendCase::PrimedAtCenter;
  }
  if (path.start != v || path.first_color != c1 || path.edges.empty()) {
    throw ColoringError(ColoringError::Kind::InvalidArgument,
                        "path must leave the fan center through color c_1");
  }
  std::size_t j = 0;
  for (std::size_t i = 1; i <= t; ++i) {
    if (chi.color(fan.leaf_edges[i]) == c1) {
      j = i;
      break;
    }
  }
  if (j < 1 || j >= t) invalid_fan("no earlier leaf edge carries c_1");
  const Vertex w = path.end();
  flip_path(chi, path);
  if (w != fan.leaves[j - 1]) {
    shift_fan(chi, fan, j - 1);
    chi.assign(fan.leaf_edges[j - 1], c1);
    return ExtendCase::ShiftPrefix;
  }
  shift_fan(chi, fan, t);
  chi.assign(fan.leaf_edges[t], c1);
  return ExtendCase::ShiftWhole;
}

}  // namespace arbcolor
