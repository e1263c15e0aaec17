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

#ifndef ARBCOLOR_GENERATORS_HPP
#define ARBCOLOR_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "arbcolor/graph.hpp"

namespace arbcolor {

class InfeasibleSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family {
  Star,
  ForestUnion,
  StarPlusForests,
  ErdosRenyi,
  PreferentialAttachment,
  Grid,
};

std::string to_string(Family f);
/// Accepts the kebab-case names: star, forest-union, star-plus-forests,
/// erdos-renyi, preferential-attachment, grid.
Family parse_family(const std::string& name);

/// Parameters for one generated graph. Unused fields are ignored by the
/// family: star(n); forest-union(n, alpha); star-plus-forests(n, alpha,
/// star_size); erdos-renyi(n, m); preferential-attachment(n, degree);
/// grid(rows, cols).
struct GenSpec {
  Family family = Family::Star;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint32_t alpha = 1;
  std::uint32_t degree = 1;
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::uint64_t star_size = 0;  // 0 = n - 1
  std::uint64_t seed = 0;
};

/// Arboricity upper bound guaranteed by construction, if the family has one.
std::optional<std::uint32_t> known_arboricity(const GenSpec& spec);

Graph generate(const GenSpec& spec);

/// K_{1,n-1} centered at 0.
Graph gen_star(std::uint64_t n);

/// Union of `alpha` random spanning forests, each grown by random edge
/// insertion with union-find cycle rejection; pairs already present are
/// rejected and redrawn up to a per-forest attempt cap.
Graph gen_forest_union(std::uint64_t n, std::uint32_t alpha, std::uint64_t seed);

/// A star on center 0 and leaves 1..star_size (default all) completed to a
/// random spanning forest, plus alpha - 1 random forests. Arboricity <= alpha.
Graph gen_star_plus_forests(std::uint64_t n, std::uint32_t alpha,
                            std::uint64_t seed, std::uint64_t star_size = 0);

/// G(n, m): m distinct uniform pairs.
Graph gen_erdos_renyi(std::uint64_t n, std::uint64_t m, std::uint64_t seed);

/// Seed clique K_s with s = max(d, 3), then every new vertex attaches to d
/// distinct earlier vertices chosen proportionally to degree.
Graph gen_preferential_attachment(std::uint64_t n, std::uint32_t d,
                                  std::uint64_t seed);

Graph gen_grid(std::uint64_t rows, std::uint64_t cols);

nlohmann::json to_json(const GenSpec& spec);
GenSpec gen_spec_from_json(const nlohmann::json& j);

}  // namespace arbcolor

#endif  // ARBCOLOR_GENERATORS_HPP
