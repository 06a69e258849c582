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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coevo/game_graph.hpp"

namespace coevo {

/// Which interior positions count as critical.
enum class CriticalRule {
  /// h(v) != 0 and some successor lies outside the zero set, i.e. a losing
  /// move is available at a winning position.
  literal,
  /// h(v) != 0 and more than one move is available.
  multi_choice,
};

struct GrundyData {
  std::vector<std::uint32_t> h;
  std::vector<VertexId> zero_set;     // h = 0, increasing id order
  std::vector<VertexId> nonzero_set;  // h != 0
  std::vector<VertexId> critical;     // W_G under the rule used to build this

  bool in_zero_set(VertexId v) const { return h[v] == 0; }
  bool first_player_wins(const GameGraph& g) const { return h[g.root()] != 0; }
};

/// Minimum excluded non-negative integer.
std::uint32_t mex(std::span<const std::uint32_t> values);

/// Sprague-Grundy values in one pass over the reverse topological order,
/// together with the zero set and the critical positions under rule.
GrundyData grundy_values(const GameGraph& g, CriticalRule rule = CriticalRule::literal);

std::vector<VertexId> critical_positions(const GameGraph& g, const GrundyData& gd,
                                         CriticalRule rule = CriticalRule::literal);

/// True when x moves into the zero set at every critical position. Sufficient
/// for optimality, not necessary. Throws PreconditionViolated if the root has
/// Grundy value 0.
bool is_optimal_sufficient(const GameGraph& g, const GrundyData& gd, const Strategy& x);

/// Exact membership in Opt(G): x wins as first mover against every opponent.
bool is_optimal_exact(const GameGraph& g, const Strategy& x);

/// An opponent that beats x when x moves first, or nullopt if x is optimal.
std::optional<Strategy> refuting_opponent(const GameGraph& g, const Strategy& x);

/// First successor in the zero set where one exists, else the first
/// successor. Throws PreconditionViolated if h(root) = 0.
Strategy canonical_optimal_strategy(const GameGraph& g, const GrundyData& gd);

/// Returns g when the first player wins; otherwise prepends a fresh root whose
/// only move is to the old root (the new root gets id n and label "v*").
GameGraph ensure_first_player_win(const GameGraph& g);

}  // namespace coevo
