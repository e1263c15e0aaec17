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

#include "arbcolor/graph.hpp"

#include "huge_pages.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace arbcolor {

namespace {

std::string edge_text(std::size_t i, const Endpoints& p) {
  return "edge " + std::to_string(i) + " (" + std::to_string(p.u) + ", " +
         std::to_string(p.v) + ")";
}

}  // namespace

Graph build_graph(std::size_t n, std::span<const Endpoints> edges,
                  bool validate) {
  if (validate) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Endpoints& p = edges[i];
      if (p.u >= n || p.v >= n) {
        throw GraphError(GraphError::Kind::VertexOutOfRange, i,
                         edge_text(i, p) + ": vertex out of range for n=" +
                             std::to_string(n));
      }
      if (p.u == p.v) {
        throw GraphError(GraphError::Kind::SelfLoop, i,
                         edge_text(i, p) + ": self-loop");
      }
      const std::uint64_t key =
          (std::uint64_t{std::min(p.u, p.v)} << 32) | std::max(p.u, p.v);
      if (!seen.insert(key).second) {
        throw GraphError(GraphError::Kind::DuplicateEdge, i,
                         edge_text(i, p) + ": duplicate edge");
      }
    }
  }

  Graph g;
  detail::reserve_huge(g.ends_, edges.size());
  g.ends_.assign(edges.begin(), edges.end());
  g.degree_.assign(n, 0);
  for (const Endpoints& p : edges) {
    ++g.degree_[p.u];
    ++g.degree_[p.v];
  }
  g.offset_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    g.offset_[v + 1] = g.offset_[v] + g.degree_[v];
    g.max_degree_ = std::max(g.max_degree_, g.degree_[v]);
  }
  detail::reserve_huge(g.adj_, 2 * edges.size());
  g.adj_.resize(2 * edges.size());
  std::vector<std::size_t> fill(g.offset_.begin(), g.offset_.end() - 1);
  for (EdgeId e = 0; e < edges.size(); ++e) {
    const Endpoints& p = edges[e];
    g.adj_[fill[p.u]++] = {p.v, e};
    g.adj_[fill[p.v]++] = {p.u, e};
  }
  return g;
}

Weight edge_weight(const Graph& g, EdgeId e) {
  if (e >= g.edge_count()) {
    throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
  }
  const Endpoints& p = g.endpoints(e);
  return std::min(g.degree(p.u), g.degree(p.v));
}

Weight graph_weight(const Graph& g) {
  Weight total = 0;
  for (const Endpoints& p : g.edges()) {
    total += std::min(g.degree(p.u), g.degree(p.v));
  }
  return total;
}

std::uint32_t degeneracy(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  const std::uint32_t max_deg = g.max_degree();

  // Bucket sort by degree; pos/order give O(1) moves between buckets.
  std::vector<std::uint32_t> deg(g.degrees().begin(), g.degrees().end());
  std::vector<std::size_t> bucket_start(max_deg + 2, 0);
  for (std::uint32_t d : deg) ++bucket_start[d + 1];
  for (std::size_t d = 1; d < bucket_start.size(); ++d) {
    bucket_start[d] += bucket_start[d - 1];
  }
  std::vector<Vertex> order(n);
  std::vector<std::size_t> pos(n);
  {
    std::vector<std::size_t> next(bucket_start.begin(), bucket_start.end() - 1);
    for (Vertex v = 0; v < n; ++v) {
      pos[v] = next[deg[v]]++;
      order[pos[v]] = v;
    }
  }

  std::uint32_t result = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    result = std::max(result, deg[v]);
    for (const Incidence& inc : g.incident(v)) {
      const Vertex w = inc.neighbor;
      if (pos[w] <= i || deg[w] <= deg[v]) continue;
      // Swap w with the first vertex of its bucket, then shrink the bucket.
      const std::uint32_t dw = deg[w];
      const std::size_t first = std::max(bucket_start[dw], i + 1);
      const Vertex u = order[first];
      std::swap(order[first], order[pos[w]]);
      pos[u] = pos[w];
      pos[w] = first;
      bucket_start[dw] = first + 1;
      --deg[w];
    }
  }
  return result;
}

GraphStats compute_stats(const Graph& g) {
  GraphStats s;
  s.n = g.vertex_count();
  s.m = g.edge_count();
  s.max_degree = g.max_degree();
  s.graph_weight = graph_weight(g);
  s.degeneracy = degeneracy(g);
  s.normalized_weight =
      s.m == 0 ? 0.0 : static_cast<double>(s.graph_weight) / s.m;
  return s;
}

std::vector<Endpoints> canonical_edges(const Graph& g) {
  std::vector<Endpoints> out;
  out.reserve(g.edge_count());
  for (const Endpoints& p : g.edges()) {
    out.push_back({std::min(p.u, p.v), std::max(p.u, p.v)});
  }
  std::sort(out.begin(), out.end(), [](const Endpoints& a, const Endpoints& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return out;
}

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  throw GraphError(GraphError::Kind::ParseError, line,
                   "line " + std::to_string(line) + ": " + msg);
}

// Parses exactly two unsigned integers from `line`; anything else is an error.
bool parse_pair(const std::string& line, std::uint64_t& a, std::uint64_t& b) {
  std::istringstream ss(line);
  std::string x, y, extra;
  if (!(ss >> x >> y) || (ss >> extra)) return false;
  auto to_u64 = [](const std::string& s, std::uint64_t& out) {
    if (s.empty() || s.size() > 19) return false;
    out = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
      out = out * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return true;
  };
  return to_u64(x, a) && to_u64(y, b);
}

bool is_skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<Endpoints> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    std::uint64_t a = 0, b = 0;
    if (!parse_pair(line, a, b)) {
      parse_error(line_no, have_header ? "expected \"u v\""
                                       : "expected header \"n m\"");
    }
    if (!have_header) {
      if (a > std::numeric_limits<Vertex>::max()) {
        parse_error(line_no, "vertex count too large");
      }
      n = a;
      m = b;
      have_header = true;
      edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 26)));
      continue;
    }
    if (edges.size() == m) parse_error(line_no, "more edges than declared");
    if (a >= n || b >= n) {
      throw GraphError(GraphError::Kind::VertexOutOfRange, edges.size(),
                       "line " + std::to_string(line_no) +
                           ": vertex out of range for n=" + std::to_string(n));
    }
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  if (!have_header) parse_error(line_no + 1, "missing header");
  if (edges.size() != m) {
    parse_error(line_no + 1, "expected " + std::to_string(m) +
                                 " edges, found " + std::to_string(edges.size()));
  }
  return build_graph(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Endpoints& p : g.edges()) out << p.u << ' ' << p.v << '\n';
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

}  // namespace arbcolor
