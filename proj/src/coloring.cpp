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

#include "arbcolor/coloring.hpp"

#include "huge_pages.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace arbcolor {

namespace {

constexpr std::uint32_t kNoPos = 0xffffffffu;
constexpr int kRejectionAttempts = 64;

// Fibonacci hashing on the top bits; capacities are powers of two >= 2.
std::size_t hash_home(Color c, std::uint32_t cap) {
  const int shift = 64 - std::countr_zero(cap);
  return static_cast<std::size_t>((std::uint64_t{c} * 0x9E3779B97F4A7C15ull) >> shift);
}

std::string describe(EdgeId e, Color c) {
  return "edge " + std::to_string(e) + " color " + std::to_string(c);
}

}  // namespace

PartialColoring::PartialColoring(const Graph& g, Color palette)
    : graph_(&g), palette_(palette) {
  if (palette < g.max_degree() + 1) {
    throw ColoringError(ColoringError::Kind::PaletteTooSmall,
                        "palette " + std::to_string(palette) +
                            " smaller than max degree + 1 = " +
                            std::to_string(g.max_degree() + 1));
  }
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  detail::reserve_huge(color_, m);
  color_.assign(m, kUncolored);

  detail::reserve_huge(vs_, n);
  vs_.resize(n);
  std::size_t block = 0, hash = 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::uint32_t d = g.degree(v);
    std::uint32_t cap = 0;
    if (d > 0 && palette > d + 1) cap = std::bit_ceil(std::uint32_t{2} * d);
    vs_[v] = {block, hash, d, d + 1, cap, 0};
    block += 3 * std::size_t{d + 1};
    hash += cap;
  }
  detail::reserve_huge(block_, block);
  block_.resize(block);
  for (Vertex v = 0; v < n; ++v) {
    const VertexState& s = vs_[v];
    Color* free = free_of(s);
    for (std::uint32_t i = 0; i <= s.degree; ++i) {
      std::uint32_t* sl = slot(s, i + 1);
      sl[0] = kNoEdge;
      sl[1] = i;
      free[i] = i + 1;
    }
  }
  detail::reserve_huge(hash_, hash);
  hash_.assign(hash, Slot{kUncolored, kNoEdge});

  detail::reserve_huge(uncolored_, m);
  detail::reserve_huge(uncolored_pos_, m);
  uncolored_.resize(m);
  uncolored_pos_.resize(m);
  for (EdgeId e = 0; e < m; ++e) {
    uncolored_[e] = e;
    uncolored_pos_[e] = e;
  }
  live_ = m;
}

PartialColoring PartialColoring::from_colors(const Graph& g, Color palette,
                                             std::span<const Color> colors) {
  if (colors.size() != g.edge_count()) {
    throw ColoringError(ColoringError::Kind::ImproperInput,
                        "color vector has " + std::to_string(colors.size()) +
                            " entries for " + std::to_string(g.edge_count()) +
                            " edges");
  }
  PartialColoring chi(g, palette);
  for (EdgeId e = 0; e < colors.size(); ++e) {
    if (colors[e] == kUncolored) continue;
    try {
      chi.assign(e, colors[e]);
    } catch (const ColoringError& err) {
      throw ColoringError(ColoringError::Kind::ImproperInput, err.what());
    }
  }
  return chi;
}

EdgeId PartialColoring::occupant(Vertex v, Color c) const {
  const VertexState& s = vs_[v];
  if (c == kUncolored || c > palette_) return kNoEdge;
  if (c <= s.degree + 1) return slot(s, c)[0];
  if (s.hash_used == 0) return kNoEdge;
  const std::size_t mask = s.hash_cap - 1;
  for (std::size_t i = hash_home(c, s.hash_cap);; i = (i + 1) & mask) {
    const Slot& slot = hash_[s.hash + i];
    if (slot.color == c) return slot.edge;
    if (slot.color == kUncolored) return kNoEdge;
  }
}

void PartialColoring::free_remove(Vertex v, Color c) {
  VertexState& s = vs_[v];
  Color* free = free_of(s);
  const std::uint32_t p = slot(s, c)[1];
  const std::uint32_t last = --s.free_count;
  const Color moved = free[last];
  free[p] = moved;
  slot(s, moved)[1] = p;
  slot(s, c)[1] = kNoPos;
}

void PartialColoring::free_add(Vertex v, Color c) {
  VertexState& s = vs_[v];
  const std::uint32_t p = s.free_count++;
  free_of(s)[p] = c;
  slot(s, c)[1] = p;
}

void PartialColoring::index_insert(Vertex v, Color c, EdgeId e) {
  VertexState& s = vs_[v];
  if (c <= s.degree + 1) {
    slot(s, c)[0] = e;
    free_remove(v, c);
    return;
  }
  const std::size_t mask = s.hash_cap - 1;
  std::size_t i = hash_home(c, s.hash_cap);
  while (hash_[s.hash + i].color != kUncolored) i = (i + 1) & mask;
  hash_[s.hash + i] = {c, e};
  ++s.hash_used;
}

void PartialColoring::index_erase(Vertex v, Color c) {
  VertexState& s = vs_[v];
  if (c <= s.degree + 1) {
    slot(s, c)[0] = kNoEdge;
    free_add(v, c);
    return;
  }
  const std::size_t base = s.hash;
  const std::size_t mask = s.hash_cap - 1;
  std::size_t i = hash_home(c, s.hash_cap);
  while (hash_[base + i].color != c) i = (i + 1) & mask;
  // Backward-shift deletion keeps probe chains intact without tombstones.
  std::size_t j = i;
  for (;;) {
    j = (j + 1) & mask;
    const Slot& slot = hash_[base + j];
    if (slot.color == kUncolored) break;
    const std::size_t home = hash_home(slot.color, s.hash_cap);
    const bool movable = (i <= j) ? (home <= i || home > j)
                                  : (home <= i && home > j);
    if (movable) {
      hash_[base + i] = slot;
      i = j;
    }
  }
  hash_[base + i] = {kUncolored, kNoEdge};
  --s.hash_used;
}

void PartialColoring::assign(EdgeId e, Color c) {
  if (c == kUncolored || c > palette_) {
    throw ColoringError(ColoringError::Kind::InvalidArgument,
                        describe(e, c) + ": color outside palette [1, " +
                            std::to_string(palette_) + "]");
  }
  if (color_[e] != kUncolored) {
    throw ColoringError(ColoringError::Kind::AlreadyColored,
                        "edge " + std::to_string(e) + " is already colored");
  }
  const Endpoints& p = graph_->endpoints(e);
  for (Vertex x : {p.u, p.v}) {
    if (occupant(x, c) != kNoEdge) {
      throw ColoringError(ColoringError::Kind::ColorConflict,
                          describe(e, c) + ": color already used at vertex " +
                              std::to_string(x));
    }
  }
  index_insert(p.u, c, e);
  index_insert(p.v, c, e);
  color_[e] = c;

  const std::uint32_t pos = uncolored_pos_[e];
  const EdgeId last = uncolored_[live_ - 1];
  uncolored_[pos] = last;
  uncolored_pos_[last] = pos;
  uncolored_[live_ - 1] = e;
  uncolored_pos_[e] = static_cast<std::uint32_t>(live_ - 1);
  --live_;
}

void PartialColoring::unassign(EdgeId e) {
  const Color c = color_[e];
  if (c == kUncolored) {
    throw ColoringError(ColoringError::Kind::AlreadyUncolored,
                        "edge " + std::to_string(e) + " is already uncolored");
  }
  const Endpoints& p = graph_->endpoints(e);
  index_erase(p.u, c);
  index_erase(p.v, c);
  color_[e] = kUncolored;

  const std::uint32_t pos = uncolored_pos_[e];
  const EdgeId first_colored = uncolored_[live_];
  uncolored_[pos] = first_colored;
  uncolored_pos_[first_colored] = pos;
  uncolored_[live_] = e;
  uncolored_pos_[e] = static_cast<std::uint32_t>(live_);
  ++live_;
}

void PartialColoring::swap_colors(std::span<const EdgeId> edges, Color a,
                                  Color b) {
  for (EdgeId e : edges) {
    const Endpoints& p = graph_->endpoints(e);
    index_erase(p.u, color_[e]);
    index_erase(p.v, color_[e]);
  }
  for (EdgeId e : edges) {
    const Color next = color_[e] == a ? b : a;
    const Endpoints& p = graph_->endpoints(e);
    index_insert(p.u, next, e);
    index_insert(p.v, next, e);
    color_[e] = next;
  }
}

Color PartialColoring::some_missing_color(Vertex v) const {
  return free_of(vs_[v])[0];
}

Color PartialColoring::random_missing_color(Vertex v, Rng& rng) const {
  const std::uint32_t d = vs_[v].degree;
  auto enumerate = [&] {
    scratch_.clear();
    for (Color c = 1; c <= palette_; ++c) {
      if (is_missing(v, c)) scratch_.push_back(c);
    }
    std::uniform_int_distribution<std::size_t> pick(0, scratch_.size() - 1);
    return scratch_[pick(rng)];
  };
  if (2ull * d > palette_) return enumerate();
  std::uniform_int_distribution<Color> draw(1, palette_);
  for (int attempt = 0; attempt < kRejectionAttempts; ++attempt) {
    const Color c = draw(rng);
    if (is_missing(v, c)) return c;
  }
  return enumerate();
}

EdgeId PartialColoring::random_uncolored_edge(Rng& rng) const {
  if (live_ == 0) {
    throw ColoringError(ColoringError::Kind::NoUncoloredEdges,
                        "no uncolored edges");
  }
  std::uniform_int_distribution<std::size_t> pick(0, live_ - 1);
  return uncolored_[pick(rng)];
}

std::string PartialColoring::check_consistency() const {
  const Graph& g = *graph_;
  const std::size_t n = g.vertex_count();
  std::size_t uncolored = 0;
  for (EdgeId e = 0; e < color_.size(); ++e) {
    if (color_[e] == kUncolored) {
      ++uncolored;
      if (uncolored_pos_[e] >= live_ || uncolored_[uncolored_pos_[e]] != e) {
        return "uncolored edge " + std::to_string(e) + " not in live prefix";
      }
    } else if (uncolored_pos_[e] < live_ || uncolored_[uncolored_pos_[e]] != e) {
      return "colored edge " + std::to_string(e) + " misplaced in edge array";
    }
  }
  if (uncolored != live_) {
    return "live prefix length " + std::to_string(live_) + " but " +
           std::to_string(uncolored) + " uncolored edges";
  }
  for (Vertex v = 0; v < n; ++v) {
    const std::uint32_t d = g.degree(v);
    std::size_t high = 0;
    for (const Incidence& inc : g.incident(v)) {
      const Color c = color_[inc.edge];
      if (c == kUncolored) continue;
      if (c > d + 1) ++high;
      if (occupant(v, c) != inc.edge) {
        return "vertex " + std::to_string(v) + ": occupancy of color " +
               std::to_string(c) + " does not point at edge " +
               std::to_string(inc.edge);
      }
    }
    std::size_t in_table = 0;
    for (std::size_t i = vs_[v].hash; i < vs_[v].hash + vs_[v].hash_cap; ++i) {
      if (hash_[i].color != kUncolored) ++in_table;
    }
    if (in_table != high || in_table != vs_[v].hash_used) {
      return "vertex " + std::to_string(v) + ": hash table holds " +
             std::to_string(in_table) + " colors, expected " +
             std::to_string(high);
    }
    std::vector<char> expect_free(d + 1, 1);
    for (const Incidence& inc : g.incident(v)) {
      const Color c = color_[inc.edge];
      if (c != kUncolored && c <= d + 1) expect_free[c - 1] = 0;
    }
    const VertexState& s = vs_[v];
    std::size_t expected = 0;
    for (Color c = 1; c <= d + 1; ++c) {
      const bool listed = slot(s, c)[1] != kNoPos;
      if (listed != static_cast<bool>(expect_free[c - 1])) {
        return "vertex " + std::to_string(v) + ": free list membership of " +
               std::to_string(c) + " is wrong";
      }
      if (listed) {
        ++expected;
        if (free_of(s)[slot(s, c)[1]] != c) {
          return "vertex " + std::to_string(v) + ": free position index broken";
        }
      }
      if (!listed && slot(s, c)[0] == kNoEdge) {
        return "vertex " + std::to_string(v) + ": color " + std::to_string(c) +
               " neither free nor occupied";
      }
    }
    if (expected != vs_[v].free_count) {
      return "vertex " + std::to_string(v) + ": free list length mismatch";
    }
  }
  return {};
}

bool operator==(const PartialColoring& a, const PartialColoring& b) {
  return a.graph_ == b.graph_ && a.palette_ == b.palette_ &&
         a.color_ == b.color_ && a.live_ == b.live_;
}

ProperReport verify_proper(const Graph& g, std::span<const Color> colors,
                           Color palette) {
  ProperReport report;
  std::vector<Color> used;
  used.reserve(colors.size());
  for (EdgeId e = 0; e < colors.size(); ++e) {
    const Color c = colors[e];
    if (c == kUncolored) {
      ++report.uncolored;
      continue;
    }
    used.push_back(c);
    report.max_color = std::max(report.max_color, c);
    if (palette != 0 && c > palette) report.out_of_palette.push_back(e);
  }
  std::sort(used.begin(), used.end());
  report.colors_used = static_cast<std::size_t>(
      std::unique(used.begin(), used.end()) - used.begin());

  std::vector<std::pair<Color, EdgeId>> at_vertex;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    at_vertex.clear();
    for (const Incidence& inc : g.incident(v)) {
      if (colors[inc.edge] != kUncolored) {
        at_vertex.emplace_back(colors[inc.edge], inc.edge);
      }
    }
    std::sort(at_vertex.begin(), at_vertex.end());
    for (std::size_t i = 1; i < at_vertex.size(); ++i) {
      if (at_vertex[i].first == at_vertex[i - 1].first) {
        report.violations.push_back(
            {v, at_vertex[i].first, at_vertex[i - 1].second, at_vertex[i].second});
      }
    }
  }
  report.proper = report.violations.empty() && report.out_of_palette.empty();
  return report;
}

ProperReport verify_proper(const Graph& g, const PartialColoring& chi) {
  return verify_proper(g, chi.colors(), chi.palette());
}

void write_coloring(std::span<const Color> colors, std::ostream& out) {
  for (EdgeId e = 0; e < colors.size(); ++e) {
    out << e << ' ' << colors[e] << '\n';
  }
}

std::string write_coloring(std::span<const Color> colors) {
  std::ostringstream out;
  write_coloring(colors, out);
  return out.str();
}

std::vector<Color> read_coloring(std::istream& in, std::size_t m) {
  std::vector<Color> colors(m, kUncolored);
  std::vector<char> seen(m, 0);
  std::string line;
  std::size_t line_no = 0;
  std::size_t count = 0;
  auto fail = [&](const std::string& msg) {
    throw GraphError(GraphError::Kind::ParseError, line_no,
                     "line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    long long e = -1, c = -1;
    std::string extra;
    if (!(ss >> e >> c) || (ss >> extra) || e < 0 || c < 0 ||
        c > static_cast<long long>(std::numeric_limits<Color>::max())) {
      fail("expected \"edge-id color\"");
    }
    if (static_cast<unsigned long long>(e) >= m) {
      fail("edge id " + std::to_string(e) + " out of range for m=" +
           std::to_string(m));
    }
    if (seen[e]) fail("edge id " + std::to_string(e) + " listed twice");
    seen[e] = 1;
    colors[e] = static_cast<Color>(c);
    ++count;
  }
  if (count != m) {
    ++line_no;
    fail("dump lists " + std::to_string(count) + " of " + std::to_string(m) +
         " edges");
  }
  return colors;
}

}  // namespace arbcolor
