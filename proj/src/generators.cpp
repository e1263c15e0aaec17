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

#include "arbcolor/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>
#include <vector>

namespace arbcolor {

namespace {

using Rng64 = std::mt19937_64;

constexpr std::uint64_t kMaxVertices = std::numeric_limits<Vertex>::max();

void require(bool ok, const std::string& msg) {
  if (!ok) throw InfeasibleSpec(msg);
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }
  Vertex find(Vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> size_;
};

std::uint64_t pair_key(Vertex a, Vertex b) {
  return (std::uint64_t{std::min(a, b)} << 32) | std::max(a, b);
}

class EdgeBuilder {
 public:
  explicit EdgeBuilder(std::size_t reserve) { keys_.reserve(reserve * 2); }
  bool add(Vertex a, Vertex b) {
    if (a == b || !keys_.insert(pair_key(a, b)).second) return false;
    edges_.push_back({a, b});
    return true;
  }
  bool contains(Vertex a, Vertex b) const {
    return keys_.count(pair_key(a, b)) != 0;
  }
  std::vector<Endpoints>& edges() { return edges_; }

 private:
  std::unordered_set<std::uint64_t> keys_;
  std::vector<Endpoints> edges_;
};

// Adds random cycle-free edges to `forest` until it spans or the attempt
// cap runs out. Pairs already in the graph are rejected.
void grow_forest(std::uint64_t n, DisjointSets& forest, std::uint64_t have,
                 EdgeBuilder& out, Rng64& rng) {
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  const std::uint64_t cap = 64 * n + 1024;
  for (std::uint64_t attempt = 0; have + 1 < n && attempt < cap; ++attempt) {
    const Vertex a = pick(rng);
    const Vertex b = pick(rng);
    if (a == b || forest.find(a) == forest.find(b) || out.contains(a, b)) {
      continue;
    }
    forest.unite(a, b);
    out.add(a, b);
    ++have;
  }
}

Graph finish(std::uint64_t n, EdgeBuilder& b) {
  return build_graph(static_cast<std::size_t>(n), b.edges(), false);
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::Star: return "star";
    case Family::ForestUnion: return "forest-union";
    case Family::StarPlusForests: return "star-plus-forests";
    case Family::ErdosRenyi: return "erdos-renyi";
    case Family::PreferentialAttachment: return "preferential-attachment";
    case Family::Grid: return "grid";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::Star, Family::ForestUnion, Family::StarPlusForests,
                   Family::ErdosRenyi, Family::PreferentialAttachment,
                   Family::Grid}) {
    if (to_string(f) == name) return f;
  }
  throw InfeasibleSpec("unknown graph family '" + name + "'");
}

std::optional<std::uint32_t> known_arboricity(const GenSpec& spec) {
  switch (spec.family) {
    case Family::Star: return 1;
    case Family::ForestUnion: return spec.alpha;
    case Family::StarPlusForests: return spec.alpha;
    case Family::PreferentialAttachment: return std::max<std::uint32_t>(spec.degree, 2);
    case Family::Grid:
      return (spec.rows <= 1 || spec.cols <= 1) ? 1u : 2u;
    case Family::ErdosRenyi: return std::nullopt;
  }
  return std::nullopt;
}

Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::Star: return gen_star(spec.n);
    case Family::ForestUnion: return gen_forest_union(spec.n, spec.alpha, spec.seed);
    case Family::StarPlusForests:
      return gen_star_plus_forests(spec.n, spec.alpha, spec.seed, spec.star_size);
    case Family::ErdosRenyi: return gen_erdos_renyi(spec.n, spec.m, spec.seed);
    case Family::PreferentialAttachment:
      return gen_preferential_attachment(spec.n, spec.degree, spec.seed);
    case Family::Grid: return gen_grid(spec.rows, spec.cols);
  }
  throw InfeasibleSpec("unknown family");
}

Graph gen_star(std::uint64_t n) {
  require(n >= 2 && n <= kMaxVertices, "star needs 2 <= n < 2^32");
  std::vector<Endpoints> edges;
  edges.reserve(n - 1);
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return build_graph(n, edges, false);
}

Graph gen_forest_union(std::uint64_t n, std::uint32_t alpha, std::uint64_t seed) {
  require(n >= 2 && n <= kMaxVertices, "forest-union needs 2 <= n < 2^32");
  require(alpha >= 1, "forest-union needs alpha >= 1");
  Rng64 rng(seed);
  EdgeBuilder b(alpha * n);
  for (std::uint32_t f = 0; f < alpha; ++f) {
    DisjointSets forest(n);
    grow_forest(n, forest, 0, b, rng);
  }
  return finish(n, b);
}

Graph gen_star_plus_forests(std::uint64_t n, std::uint32_t alpha,
                            std::uint64_t seed, std::uint64_t star_size) {
  require(n >= 2 && n <= kMaxVertices, "star-plus-forests needs 2 <= n < 2^32");
  require(alpha >= 2, "star-plus-forests needs alpha >= 2");
  if (star_size == 0) star_size = n - 1;
  require(star_size <= n - 1, "star size exceeds n - 1");
  Rng64 rng(seed);
  EdgeBuilder b(alpha * n);
  DisjointSets first(n);
  for (Vertex v = 1; v <= star_size; ++v) {
    b.add(0, v);
    first.unite(0, v);
  }
  grow_forest(n, first, star_size, b, rng);
  for (std::uint32_t f = 1; f < alpha; ++f) {
    DisjointSets forest(n);
    grow_forest(n, forest, 0, b, rng);
  }
  return finish(n, b);
}

Graph gen_erdos_renyi(std::uint64_t n, std::uint64_t m, std::uint64_t seed) {
  require(n <= kMaxVertices, "erdos-renyi needs n < 2^32");
  const std::uint64_t max_m = n < 2 ? 0 : n * (n - 1) / 2;
  require(m <= max_m, "erdos-renyi: m = " + std::to_string(m) +
                          " exceeds n(n-1)/2 = " + std::to_string(max_m));
  Rng64 rng(seed);
  EdgeBuilder b(m);
  if (2 * m > max_m) {
    // Dense: partial Fisher-Yates over all pairs.
    std::vector<Endpoints> all;
    all.reserve(max_m);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
    }
    for (std::uint64_t i = 0; i < m; ++i) {
      std::uniform_int_distribution<std::uint64_t> pick(i, max_m - 1);
      std::swap(all[i], all[pick(rng)]);
      b.add(all[i].u, all[i].v);
    }
    return finish(n, b);
  }
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  while (b.edges().size() < m) b.add(pick(rng), pick(rng));
  return finish(n, b);
}

Graph gen_preferential_attachment(std::uint64_t n, std::uint32_t d,
                                  std::uint64_t seed) {
  require(d >= 1, "preferential-attachment needs degree >= 1");
  const std::uint64_t s = std::max<std::uint64_t>(d, 3);
  require(n >= s && n <= kMaxVertices,
          "preferential-attachment needs n >= max(degree, 3)");
  Rng64 rng(seed);
  EdgeBuilder b(s * s + d * n);
  std::vector<Vertex> ends;  // each vertex once per incident edge
  ends.reserve(2 * (s * s + d * n));
  for (Vertex u = 0; u < s; ++u) {
    for (Vertex v = u + 1; v < s; ++v) {
      b.add(u, v);
      ends.push_back(u);
      ends.push_back(v);
    }
  }
  std::vector<Vertex> chosen;
  for (Vertex v = static_cast<Vertex>(s); v < n; ++v) {
    chosen.clear();
    std::uniform_int_distribution<std::size_t> pick(0, ends.size() - 1);
    while (chosen.size() < d) {
      const Vertex t = ends[pick(rng)];
      if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
        chosen.push_back(t);
      }
    }
    for (Vertex t : chosen) {
      b.add(t, v);
      ends.push_back(t);
      ends.push_back(v);
    }
  }
  return finish(n, b);
}

Graph gen_grid(std::uint64_t rows, std::uint64_t cols) {
  require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
  require(rows * cols <= kMaxVertices, "grid too large");
  std::vector<Endpoints> edges;
  edges.reserve(2 * rows * cols);
  auto id = [cols](std::uint64_t r, std::uint64_t c) {
    return static_cast<Vertex>(r * cols + c);
  };
  for (std::uint64_t r = 0; r < rows; ++r) {
    for (std::uint64_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return build_graph(rows * cols, edges, false);
}

nlohmann::json to_json(const GenSpec& spec) {
  nlohmann::json j;
  j["family"] = to_string(spec.family);
  switch (spec.family) {
    case Family::Star: j["n"] = spec.n; break;
    case Family::ForestUnion:
      j["n"] = spec.n;
      j["alpha"] = spec.alpha;
      break;
    case Family::StarPlusForests:
      j["n"] = spec.n;
      j["alpha"] = spec.alpha;
      if (spec.star_size != 0) j["star_size"] = spec.star_size;
      break;
    case Family::ErdosRenyi:
      j["n"] = spec.n;
      j["m"] = spec.m;
      break;
    case Family::PreferentialAttachment:
      j["n"] = spec.n;
      j["degree"] = spec.degree;
      break;
    case Family::Grid:
      j["rows"] = spec.rows;
      j["cols"] = spec.cols;
      break;
  }
  if (spec.family != Family::Star && spec.family != Family::Grid) {
    j["seed"] = spec.seed;
  }
  return j;
}

GenSpec gen_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family")) {
    throw InfeasibleSpec("generator spec must be an object with a family");
  }
  GenSpec s;
  try {
    s.family = parse_family(j.at("family").get<std::string>());
    s.n = j.value("n", std::uint64_t{0});
    s.m = j.value("m", std::uint64_t{0});
    s.alpha = j.value("alpha", std::uint32_t{1});
    s.degree = j.value("degree", std::uint32_t{1});
    s.rows = j.value("rows", std::uint64_t{0});
    s.cols = j.value("cols", std::uint64_t{0});
    s.star_size = j.value("star_size", std::uint64_t{0});
    s.seed = j.value("seed", std::uint64_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw InfeasibleSpec(std::string("bad generator spec: ") + e.what());
  }
  return s;
}

}  // namespace arbcolor
