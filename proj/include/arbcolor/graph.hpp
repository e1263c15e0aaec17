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

#ifndef ARBCOLOR_GRAPH_HPP
#define ARBCOLOR_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arbcolor {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::uint64_t;

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct Endpoints {
  Vertex u;
  Vertex v;
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

class GraphError : public std::runtime_error {
 public:
  enum class Kind { DuplicateEdge, SelfLoop, VertexOutOfRange, ParseError };

  GraphError(Kind kind, std::size_t where, const std::string& what)
      : std::runtime_error(what), kind_(kind), where_(where) {}

  Kind kind() const noexcept { return kind_; }
  /// Offending input edge index, or the 1-based line number for ParseError.
  std::size_t where() const noexcept { return where_; }

 private:
  Kind kind_;
  std::size_t where_;
};

/// Immutable simple undirected graph in CSR form. Edge ids are dense and
/// follow input order; each vertex's incidence list is in edge-id order.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return degree_.size(); }
  std::size_t edge_count() const noexcept { return ends_.size(); }
  std::uint32_t degree(Vertex v) const { return degree_[v]; }
  std::uint32_t max_degree() const noexcept { return max_degree_; }

  std::span<const Incidence> incident(Vertex v) const {
    return {adj_.data() + offset_[v], degree_[v]};
  }
  const Endpoints& endpoints(EdgeId e) const { return ends_[e]; }
  Vertex other(EdgeId e, Vertex v) const {
    const Endpoints& p = ends_[e];
    return p.u == v ? p.v : p.u;
  }
  std::span<const Endpoints> edges() const noexcept { return ends_; }
  std::span<const std::uint32_t> degrees() const noexcept { return degree_; }

  friend Graph build_graph(std::size_t n, std::span<const Endpoints> edges,
                           bool validate);

 private:
  std::vector<Endpoints> ends_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::size_t> offset_;
  std::vector<Incidence> adj_;
  std::uint32_t max_degree_ = 0;
};

/// Builds a graph on vertices [0, n). With `validate`, rejects self-loops,
/// out-of-range endpoints and duplicate unordered pairs; callers that
/// already guarantee simplicity (partition children) pass false.
Graph build_graph(std::size_t n, std::span<const Endpoints> edges,
                  bool validate = true);

/// min(d(u), d(v)) for e = (u, v).
Weight edge_weight(const Graph& g, EdgeId e);

/// Sum of edge weights over all edges.
Weight graph_weight(const Graph& g);

/// Max back-degree of the min-degree peeling order (Matula-Beck buckets).
std::uint32_t degeneracy(const Graph& g);

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint32_t max_degree = 0;
  Weight graph_weight = 0;
  std::uint32_t degeneracy = 0;
  double normalized_weight = 0.0;  // W / m, 0 for the empty graph
};

GraphStats compute_stats(const Graph& g);

/// Edge list sorted by (min endpoint, max endpoint); the canonical form
/// used to compare graphs independent of edge order.
std::vector<Endpoints> canonical_edges(const Graph& g);

// Edge-list text: header "n m", then m lines "u v". Blank lines and lines
// starting with '#' are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
std::string write_edge_list(const Graph& g);

}  // namespace arbcolor

#endif  // ARBCOLOR_GRAPH_HPP
