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

#ifndef ARBCOLOR_COLORING_HPP
#define ARBCOLOR_COLORING_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "arbcolor/graph.hpp"

namespace arbcolor {

/// Colors are 1-based; 0 marks an uncolored edge.
using Color = std::uint32_t;
inline constexpr Color kUncolored = 0;

using Rng = std::mt19937_64;

class ColoringError : public std::runtime_error {
 public:
  enum class Kind {
    PaletteTooSmall,
    ColorConflict,
    AlreadyColored,
    AlreadyUncolored,
    NoUncoloredEdges,
    InvalidFan,
    NotMaximal,
    ImproperInput,
    InvalidArgument,
  };

  ColoringError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Mutable proper partial k-edge-coloring of a fixed graph.
///
/// Per vertex v the state keeps
///  - an occupancy index color -> incident edge. Colors in [1, d(v)+1] live
///    in a flat slot array; larger colors (possible once merged palettes
///    exceed d(v)+1) go to a linear-probing table of capacity >= 2 d(v).
///  - the free list M(v) ∩ [d(v)+1] with a position array for O(1) removal.
/// Globally it keeps the uncolored edges as the live prefix of an array with
/// an inverse index, so picking a random uncolored edge is O(1).
///
/// The graph must outlive the coloring. Single writer.
class PartialColoring {
 public:
  /// Empty coloring with palette [1, palette]. Throws PaletteTooSmall when
  /// palette < Δ(g)+1.
  PartialColoring(const Graph& g, Color palette);

  /// Loads an explicit color vector (0 = uncolored). Throws ImproperInput
  /// on a conflict or a color outside the palette.
  static PartialColoring from_colors(const Graph& g, Color palette,
                                     std::span<const Color> colors);

  const Graph& graph() const noexcept { return *graph_; }
  Color palette() const noexcept { return palette_; }
  /// d(v), read from the vertex record the other queries touch anyway.
  std::uint32_t degree(Vertex v) const { return vs_[v].degree; }
  Color color(EdgeId e) const { return color_[e]; }
  bool is_colored(EdgeId e) const { return color_[e] != kUncolored; }
  std::span<const Color> colors() const noexcept { return color_; }

  std::size_t uncolored_count() const noexcept { return live_; }
  std::size_t colored_count() const noexcept { return color_.size() - live_; }
  std::span<const EdgeId> uncolored_edges() const noexcept {
    return {uncolored_.data(), live_};
  }

  /// Edge of v colored c, or kNoEdge.
  EdgeId occupant(Vertex v, Color c) const;
  bool is_missing(Vertex v, Color c) const { return occupant(v, c) == kNoEdge; }

  /// Current contents of M(v) ∩ [d(v)+1], head first.
  std::span<const Color> free_list(Vertex v) const {
    return {free_of(vs_[v]), vs_[v].free_count};
  }

  void assign(EdgeId e, Color c);
  void unassign(EdgeId e);

  /// Exchanges colors a and b on every listed edge. The caller guarantees
  /// the result is proper (a maximal alternating path); occupancy is
  /// rebuilt in two passes so intermediate states never collide.
  void swap_colors(std::span<const EdgeId> edges, Color a, Color b);

  /// Head of the free list: O(1), deterministic.
  Color some_missing_color(Vertex v) const;

  /// Uniform over M(v). For d(v) > palette/2 enumerates M(v) explicitly;
  /// otherwise rejection-samples [1, palette], falling back to enumeration
  /// after 64 misses.
  Color random_missing_color(Vertex v, Rng& rng) const;

  /// Uniform over the uncolored edges. Throws NoUncoloredEdges.
  EdgeId random_uncolored_edge(Rng& rng) const;

  /// Recomputes every incremental structure from the color vector and
  /// returns a description of the first disagreement, or "" if consistent.
  std::string check_consistency() const;

  /// Semantic equality: same colors per edge, which implies equal
  /// occupancy, free sets and uncolored sets. Array orders are not compared.
  friend bool operator==(const PartialColoring& a, const PartialColoring& b);

 private:
  void index_insert(Vertex v, Color c, EdgeId e);
  void index_erase(Vertex v, Color c);
  void free_remove(Vertex v, Color c);
  void free_add(Vertex v, Color c);

  struct Slot {
    Color color;
    EdgeId edge;
  };

  const Graph* graph_;
  Color palette_;
  std::vector<Color> color_;

  // Everything one vertex visit needs sits in one record, and each vertex
  // owns one contiguous block of block_: d(v)+1 (occupant, free position)
  // pairs indexed by color, then the free list.
  struct VertexState {
    std::size_t block;        // offset into block_, length 3 (d(v)+1)
    std::size_t hash;         // offset into hash_
    std::uint32_t degree;
    std::uint32_t free_count;
    std::uint32_t hash_cap;   // 0 or a power of two >= 2
    std::uint32_t hash_used;  // colors above d(v)+1 held in the table
  };

  std::uint32_t* slot(const VertexState& s, Color c) {
    return block_.data() + s.block + 2 * std::size_t{c - 1};
  }
  const std::uint32_t* slot(const VertexState& s, Color c) const {
    return block_.data() + s.block + 2 * std::size_t{c - 1};
  }
  Color* free_of(const VertexState& s) {
    return block_.data() + s.block + 2 * std::size_t{s.degree + 1};
  }
  const Color* free_of(const VertexState& s) const {
    return block_.data() + s.block + 2 * std::size_t{s.degree + 1};
  }

  std::vector<VertexState> vs_;
  std::vector<std::uint32_t> block_;
  std::vector<Slot> hash_;

  std::vector<EdgeId> uncolored_;
  std::vector<std::uint32_t> uncolored_pos_;
  std::size_t live_ = 0;

  mutable std::vector<Color> scratch_;
};

struct Violation {
  Vertex vertex;
  Color color;
  EdgeId first;
  EdgeId second;
};

struct ProperReport {
  bool proper = true;
  std::size_t colors_used = 0;  // distinct colors on colored edges
  Color max_color = 0;
  std::size_t uncolored = 0;
  std::vector<Violation> violations;       // same color twice at a vertex
  std::vector<EdgeId> out_of_palette;      // color > palette (palette != 0)
};

/// Full scan over raw colors, independent of PartialColoring's indices.
/// `palette` = 0 skips the palette check.
ProperReport verify_proper(const Graph& g, std::span<const Color> colors,
                           Color palette = 0);
ProperReport verify_proper(const Graph& g, const PartialColoring& chi);

// Coloring dump: one "edge-id color" line per edge, color 0 = uncolored.
void write_coloring(std::span<const Color> colors, std::ostream& out);
std::string write_coloring(std::span<const Color> colors);
/// Parses a dump for a graph with m edges. Every edge must appear exactly
/// once. Throws GraphError(ParseError) with a line number.
std::vector<Color> read_coloring(std::istream& in, std::size_t m);

}  // namespace arbcolor

#endif  // ARBCOLOR_COLORING_HPP
