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

// Univariate marginal distribution algorithm over strategies, with binary
// tournament selection by self-play.
//
// One generation: mu times, sample x and y independently from the model,
// play x (first) against y and keep the winner. The new model is the
// per-vertex frequency of the winners' choices pushed through
// restrict_distribution. The runtime of a run is mu times the first
// generation whose selected population contains an optimal strategy.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "coevo/game_graph.hpp"
#include "coevo/prob_model.hpp"
#include "coevo/rng.hpp"

namespace coevo {

enum class StopRule {
  /// Stop once some selected strategy is in Opt(G).
  exact_optimal,
  /// Stop once some selected strategy moves into the zero set at every
  /// critical position (implies exact_optimal).
  sufficient_optimal,
  /// Run to max_generations; success is judged on the final population.
  generation_cap_only,
};

std::string_view stop_rule_name(StopRule r);
StopRule parse_stop_rule(std::string_view name);

struct UmdaConfig {
  std::uint64_t mu = 1;
  double gamma = 0.0;
  std::uint64_t max_generations = 10000;
  std::uint64_t seed = 0;
  StopRule stop_rule = StopRule::exact_optimal;
  /// Keep a model snapshot every this many generations (0 = never).
  std::uint64_t trace_every = 0;
};

struct ModelSnapshot {
  std::uint64_t generation = 0;
  ProbModel model;
};

struct RunResult {
  std::uint64_t generations_used = 0;
  /// mu * generations_used.
  std::uint64_t evaluations = 0;
  bool succeeded = false;
  StopRule stop_rule = StopRule::exact_optimal;
  ProbModel final_model;
  std::optional<Strategy> optimal_witness;
  std::vector<ModelSnapshot> trace;
};

/// One independent inverse-CDF draw per interior vertex, in increasing id
/// order, each consuming exactly one uniform01.
Strategy sample_strategy(const GameGraph& g, const ProbModel& model, Rng& rng);
/// Same, into an existing buffer of size g.size().
void sample_strategy_into(const GameGraph& g, const ProbModel& model, Rng& rng, Strategy& out);

/// Samples x then y, plays x first against y, bumps evaluations by one and
/// returns the winner.
Strategy tournament(const GameGraph& g, const ProbModel& model, Rng& rng,
                    std::uint64_t& evaluations);

struct GenerationOutcome {
  ProbModel model;
  std::vector<Strategy> population;
  std::uint64_t evaluations = 0;
};

/// mu tournaments, then frequency counting and restriction at every vertex.
GenerationOutcome generation_step(const GameGraph& g, const ProbModel& model,
                                  const UmdaConfig& cfg, Rng& rng);

/// Runs from the uniform model with Rng(cfg.seed) until the stop rule fires
/// or max_generations pass. Throws PreconditionViolated if h(root) = 0
/// (use ensure_first_player_win first) and GammaTooLarge for an invalid gamma.
RunResult run_umda(const GameGraph& g, const UmdaConfig& cfg);

}  // namespace coevo
