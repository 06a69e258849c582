// Copyright 2026 The coevo Authors.
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

// Generators and slow reference implementations shared by the test binaries.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coevo/game_graph.hpp"
#include "coevo/prob_model.hpp"
#include "coevo/rng.hpp"
#include "coevo/switchability.hpp"

namespace coevo::testing {

/// Random rooted DAG on n vertices: root 0, edges i -> j only for i < j, every
/// vertex j > 0 gets at least one in-edge and at most max_out out-edges.
/// Successor order is shuffled.
GameGraph random_dag(Rng& rng, std::uint32_t n, std::uint32_t max_out, double edge_prob);

/// random_dag with between 2 and max_n vertices, redrawn until the strategy
/// space has at most max_strategies members.
GameGraph random_small_game(Rng& rng, std::uint32_t max_n, std::uint32_t max_out,
                            std::uint64_t max_strategies);

/// Uniform random subset of the edges.
EdgeSet random_edge_subset(Rng& rng, const GameGraph& g, double keep_prob);

/// Strictly positive random distributions pushed through restrict_distribution.
ProbModel random_model(Rng& rng, const GameGraph& g, double gamma);
BasicProbModel<Rational> random_rational_model(Rng& rng, const GameGraph& g,
                                               const Rational& gamma);

/// Literal inductive definition: enumerate every A-compatible path from the
/// root that ends at a sink and check that each one contains v.
bool literal_is_switcher(const GameGraph& g, const EdgeSet& a, VertexId v);

/// Largest |A ∩ E(P)| over every directed path P, by enumerating the paths.
std::uint32_t literal_depth(const GameGraph& g, const EdgeSet& a);

/// Least depth over all 2^|E| edge subsets that are v-switchers, via the two
/// literal functions above. Only for graphs with a handful of edges.
std::uint32_t brute_force_switchability(const GameGraph& g, VertexId v);

/// x is optimal iff it beats every opponent when moving first, using the
/// recursive payoff.
bool optimal_by_recursive_playout(const GameGraph& g, const Strategy& x);

/// Temporary directory for test artefacts, created on demand.
std::string scratch_dir();

}  // namespace coevo::testing
