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

// Parameter and budget formulas of the UMDA runtime bound. With B = 20 Δ n,
// s_hat the largest switchability over critical positions and s_bar the
// largest over all positions:
//
//   gamma             = 1 / B
//   mu_min            = C (K + s_hat + 1) B^(1 + 2 s_hat) ln n
//   generation_budget = C sum_{v in W_G} B^s(v) ln n
//   eval_budget       = mu_min * generation_budget
//   corollary budget  = C^2 (K + s_bar + 1) B^(2 + 3 s_bar) ln^2 n
//
// C is existential in the bound, so these are theorem-shaped reference
// curves, never cutoffs.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coevo/game_graph.hpp"
#include "coevo/grundy.hpp"

namespace coevo {

/// A possibly astronomically large positive quantity. value is +inf when it
/// exceeds double range; log10 is always finite for positive inputs.
struct BigValue {
  double value = 0.0;
  double log10 = 0.0;
};

struct TheoremParameters {
  double gamma = 0.0;
  std::uint64_t base = 0;  // 20 * max_degree * n
  std::uint32_t s_hat = 0;
  /// Present only when s_values cover every vertex.
  std::optional<std::uint32_t> s_bar;
  /// Exact integer factors as decimal strings.
  std::string mu_power_exact;          // B^(1 + 2 s_hat)
  std::string critical_sum_exact;      // sum_{W_G} B^s(v)
  std::optional<std::string> corollary_power_exact;  // B^(2 + 3 s_bar)
  BigValue mu_min;
  BigValue generation_budget;
  BigValue eval_budget;
  std::optional<BigValue> corollary_eval_budget;
};

/// s_values[v] is the switchability of v or an upper bound on it; it must be
/// set for every critical position (MissingSwitchability otherwise).
TheoremParameters theorem_parameters(const GameGraph& g, const GrundyData& gd,
                                     const std::vector<std::optional<std::uint32_t>>& s_values,
                                     double K = 1.0, double C = 1.0);

}  // namespace coevo
