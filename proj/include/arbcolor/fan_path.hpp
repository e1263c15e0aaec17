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

#ifndef ARBCOLOR_FAN_PATH_HPP
#define ARBCOLOR_FAN_PATH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arbcolor/coloring.hpp"
#include "arbcolor/graph.hpp"

namespace arbcolor {

enum class PrimedCase {
  MissingAtCenter,       // primed color is free at the center
  MissingAtEarlierLeaf,  // primed color sits on leaf edge `repeat_index`
};

/// Fan (v; x_0, ..., x_t): (v, x_0) uncolored, (v, x_i) colored for i >= 1,
/// and χ(v, x_i) ∈ M(x_{i-1}). Leaf colors are read from the coloring.
struct Fan {
  Vertex center = 0;
  std::vector<Vertex> leaves;      // x_0 .. x_t
  std::vector<EdgeId> leaf_edges;  // (v, x_i)
  Color primed_color = kUncolored; // c_1 ∈ M(x_t)
  PrimedCase primed_case = PrimedCase::MissingAtCenter;
  /// For MissingAtEarlierLeaf: the j with χ(v, x_j) = c_1; then c_1 is also
  /// free at x_{j-1} and 1 <= j < t.
  std::size_t repeat_index = 0;

  std::size_t last() const noexcept { return leaves.size() - 1; }
};

/// Epoch-stamped per-vertex marks reused across fan constructions.
class FanScratch {
 public:
  void begin(std::size_t n) {
    if (mark_.size() < n) mark_.resize(n, Mark{0, 0});
    if (++epoch_ == 0) {
      std::fill(mark_.begin(), mark_.end(), Mark{0, 0});
      epoch_ = 1;
    }
  }
  void mark(Vertex v, std::uint32_t index) { mark_[v] = {epoch_, index}; }
  bool marked(Vertex v) const { return mark_[v].epoch == epoch_; }
  std::uint32_t index(Vertex v) const { return mark_[v].index; }

 private:
  struct Mark {
    std::uint32_t epoch;
    std::uint32_t index;
  };
  std::vector<Mark> mark_;
  std::uint32_t epoch_ = 0;
};

/// Builds a fan centered at `center` from the uncolored edge e and primes
/// it, taking c_1 as the head of the current leaf's free list. The first
/// overload reuses `fan`'s storage.
void make_primed_fan(const PartialColoring& chi, EdgeId e, Vertex center,
                     FanScratch& scratch, Fan& fan);
Fan make_primed_fan(const PartialColoring& chi, EdgeId e, Vertex center,
                    FanScratch& scratch);
Fan make_primed_fan(const PartialColoring& chi, EdgeId e, Vertex center);

/// Checks the fan invariants on leaves [0, upto] and, when `check_primed`,
/// the priming condition. Returns "" when valid.
std::string check_fan(const PartialColoring& chi, const Fan& fan,
                      std::size_t upto, bool check_primed);
inline std::string check_fan(const PartialColoring& chi, const Fan& fan) {
  return check_fan(chi, fan, fan.last(), true);
}

/// Rotates leaf colors toward x_0 so that (v, x_j) becomes the uncolored
/// edge. Throws InvalidFan when leaves [0, j] violate the fan invariants.
void shift_fan(PartialColoring& chi, const Fan& fan, std::size_t j);

/// Maximal alternating path leaving `start`. `start_missing` (c_0) is free at
/// the start vertex and the first edge carries `first_color` (c_1); edges
/// then alternate c_1, c_0, c_1, ...
struct AlternatingPath {
  Vertex start = 0;
  Color start_missing = kUncolored;
  Color first_color = kUncolored;
  std::vector<Vertex> vertices;  // start, ..., end (size = length + 1)
  std::vector<EdgeId> edges;

  std::size_t length() const noexcept { return edges.size(); }
  Vertex end() const noexcept { return vertices.back(); }
  /// Edges whose endpoints are both interior: max(0, length - 2).
  std::size_t internal_count() const noexcept {
    return edges.size() >= 2 ? edges.size() - 2 : 0;
  }
};

/// Walks the unique maximal path from u in O(length). Empty when
/// first_color is free at u. Throws InvalidArgument if c_0 is not free at u.
void maximal_alternating_path(const PartialColoring& chi, Vertex u,
                              Color start_missing, Color first_color,
                              AlternatingPath& path);
AlternatingPath maximal_alternating_path(const PartialColoring& chi, Vertex u,
                                         Color start_missing,
                                         Color first_color);

/// Exchanges the two colors along a maximal path. Throws NotMaximal if an
/// endpoint could still be extended.
void flip_path(PartialColoring& chi, const AlternatingPath& path);

enum class ExtendCase {
  PrimedAtCenter,  // c_1 ∈ M(v): shift from x_t
  ShiftPrefix,     // path ended away from x_{j-1}: shift from x_{j-1}
  ShiftWhole,      // path ended at x_{j-1}: shift from x_t
};

/// Colors the fan's uncolored edge, recoloring along the fan and the path
/// as needed. `path` must start at the fan center with c_1 = primed color.
ExtendCase extend_coloring(PartialColoring& chi, const Fan& fan,
                           const AlternatingPath& path);

}  // namespace arbcolor

#endif  // ARBCOLOR_FAN_PATH_HPP
