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


#include <doctest.h>

#include <numeric>

#include "arbcolor/generators.hpp"
#include "helpers.hpp"

using namespace arbcolor;

namespace {

bool acyclic(const Graph& g) {
  std::vector<Vertex> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Endpoints& e : g.edges()) {
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::vector<GenSpec> sample_specs() {
  std::vector<GenSpec> out;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    out.push_back({Family::Star, 50 + seed, 0, 1, 1, 0, 0, 0, seed});
    out.push_back({Family::ForestUnion, 300, 0, static_cast<std::uint32_t>(seed), 1, 0, 0, 0, seed});
    out.push_back({Family::StarPlusForests, 400, 0, 2 + static_cast<std::uint32_t>(seed % 3), 1, 0, 0,
                   70 * seed, seed});
    out.push_back({Family::PreferentialAttachment, 300, 0, 1, static_cast<std::uint32_t>(seed), 0, 0, 0,
                   seed});
    out.push_back({Family::Grid, 0, 0, 1, 1, 3 + seed, 7, 0, seed});
    out.push_back({Family::ErdosRenyi, 200, 600, 1, 1, 0, 0, 0, seed});
  }
  return out;
}

}  // namespace

TEST_CASE("star") {
  const Graph two = gen_star(2);
  CHECK(two.edge_count() == 1);
  const Graph four = gen_star(4);
  CHECK(four.max_degree() == 3);
  CHECK(four.edge_count() == 3);
  CHECK(degeneracy(four) == 1);
  CHECK(graph_weight(gen_star(77)) == 76);
  CHECK_THROWS_AS(gen_star(1), InfeasibleSpec);
}

TEST_CASE("forest union") {
  const Graph f = gen_forest_union(200, 1, 3);
  CHECK(acyclic(f));
  CHECK(degeneracy(f) == 1);

  const Graph g = gen_forest_union(100, 2, 5);
  CHECK(g.edge_count() <= 198);
  CHECK(graph_weight(g) <= 2 * g.edge_count() * 2);
  CHECK(write_edge_list(gen_forest_union(100, 2, 5)) == write_edge_list(g));
  CHECK(write_edge_list(gen_forest_union(100, 2, 6)) != write_edge_list(g));
  CHECK_THROWS_AS(gen_forest_union(10, 0, 1), InfeasibleSpec);
  CHECK_THROWS_AS(gen_forest_union(1, 2, 1), InfeasibleSpec);
}

TEST_CASE("star plus forests") {
  const Graph g = gen_star_plus_forests(1000, 2, 7);
  CHECK(g.max_degree() >= 998);
  CHECK(g.degree(0) >= 998);
  CHECK(degeneracy(g) <= 2);
  CHECK(graph_weight(g) <= 2 * g.edge_count() * 2);
  CHECK(write_edge_list(gen_star_plus_forests(1000, 2, 7)) == write_edge_list(g));

  const Graph partial = gen_star_plus_forests(1000, 2, 7, 300);
  CHECK(partial.degree(0) >= 300);
  CHECK(partial.degree(0) <= 320);
  CHECK(partial.edge_count() > 1990);
  CHECK_THROWS_AS(gen_star_plus_forests(100, 1, 1), InfeasibleSpec);
  CHECK_THROWS_AS(gen_star_plus_forests(100, 2, 1, 100), InfeasibleSpec);
}

TEST_CASE("erdos renyi") {
  const Graph k10 = gen_erdos_renyi(10, 45, 1);
  CHECK(k10.edge_count() == 45);
  CHECK(k10.max_degree() == 9);
  CHECK_THROWS_AS(gen_erdos_renyi(10, 46, 1), InfeasibleSpec);
  const Graph sparse = gen_erdos_renyi(1000, 3000, 2);
  CHECK(sparse.edge_count() == 3000);
  const Graph dense = gen_erdos_renyi(40, 700, 2);
  CHECK(dense.edge_count() == 700);
  CHECK(write_edge_list(gen_erdos_renyi(1000, 3000, 2)) == write_edge_list(sparse));
}

TEST_CASE("preferential attachment") {
  const Graph g = gen_preferential_attachment(100, 3, 4);
  CHECK(g.edge_count() == 3 * 97 + 3);
  CHECK(degeneracy(g) <= 3);
  const Graph h = gen_preferential_attachment(500, 5, 4);
  CHECK(h.edge_count() == 10 + 5 * 495);
  CHECK(h.max_degree() > 30);  // hubs emerge
  CHECK_THROWS_AS(gen_preferential_attachment(2, 3, 1), InfeasibleSpec);
  CHECK_THROWS_AS(gen_preferential_attachment(100, 0, 1), InfeasibleSpec);
}

TEST_CASE("grid") {
  const Graph c4 = gen_grid(2, 2);
  CHECK(c4.edge_count() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
  CHECK(degeneracy(gen_grid(6, 9)) == 2);
  CHECK(gen_grid(6, 9).edge_count() == 6 * 8 + 5 * 9);
  CHECK(degeneracy(gen_grid(1, 9)) == 1);
  CHECK_THROWS_AS(gen_grid(0, 3), InfeasibleSpec);
}

TEST_CASE("every family is simple, deterministic and within its weight bound") {
  for (const GenSpec& spec : sample_specs()) {
    const Graph g = generate(spec);
    // build_graph with validation re-checks simplicity.
    std::vector<Endpoints> edges(g.edges().begin(), g.edges().end());
    CHECK_NOTHROW(build_graph(g.vertex_count(), edges));
    CHECK(write_edge_list(generate(spec)) == write_edge_list(g));
    const auto alpha = known_arboricity(spec);
    if (!alpha) continue;
    CHECK(graph_weight(g) <= 2 * g.edge_count() * *alpha);
    // Nash-Williams lower bound on arboricity stays below the known value
    // and below the degeneracy.
    const std::uint64_t lower = (g.edge_count() + g.vertex_count() - 2) / (g.vertex_count() - 1);
    CHECK(lower <= *alpha);
    CHECK(lower <= degeneracy(g));
  }
}

TEST_CASE("family names and spec JSON") {
  for (Family f : {Family::Star, Family::ForestUnion, Family::StarPlusForests,
                   Family::ErdosRenyi, Family::PreferentialAttachment, Family::Grid}) {
    CHECK(parse_family(to_string(f)) == f);
  }
  CHECK_THROWS_AS(parse_family("hypercube"), InfeasibleSpec);
  for (const GenSpec& spec : sample_specs()) {
    const GenSpec back = gen_spec_from_json(to_json(spec));
    CHECK(write_edge_list(generate(back)) == write_edge_list(generate(spec)));
  }
  const nlohmann::json j = to_json(GenSpec{Family::ForestUnion, 10, 0, 3, 1, 0, 0, 0, 9});
  CHECK(j.dump() == R"({"alpha":3,"family":"forest-union","n":10,"seed":9})");
  CHECK_THROWS_AS(gen_spec_from_json(nlohmann::json::array()), InfeasibleSpec);
}
