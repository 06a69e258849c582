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

// Experiment orchestration and CSV output.
//
// CSV columns, in order:
//   family, params, n, delta, s_bar, s_mode, mu, gamma, seed, replicate,
//   generations, evaluations, success, stop_rule, theorem_eval_budget, wall_ms
//
// n and delta describe the generated instance before a fresh root is added
// for second-player wins. s_bar is measured on the game actually played and
// s_mode says whether it is exact or the shortest-path bound.
// theorem_eval_budget is the corollary budget C^2 (K + s_bar + 1)
// B^(2 + 3 s_bar) ln^2 n on the played game: a reference curve, not a cutoff.
// gamma and the budget are printed with 17 significant digits. wall_ms is
// left empty unless timing is switched on, so that output is reproducible.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coevo/game_graph.hpp"
#include "coevo/games.hpp"
#include "coevo/io.hpp"
#include "coevo/rng.hpp"
#include "coevo/switchability.hpp"
#include "coevo/umda.hpp"

namespace coevo {

enum class GammaRule { theorem, fixed };

struct ExperimentConfig {
  GameSpec game;
  std::vector<std::uint64_t> mu_grid;
  GammaRule gamma_rule = GammaRule::theorem;
  double gamma_value = 0.0;  // GammaRule::fixed only
  std::uint64_t replicates = 1;
  std::uint64_t base_seed = 0;
  std::uint64_t max_generations = 10000;
  StopRule stop_rule = StopRule::exact_optimal;
  ProfileMode s_mode = ProfileMode::hybrid;
  std::size_t edge_limit = kDefaultEdgeLimit;
  double K = 1.0;
  double C = 1.0;
  bool record_time = false;
  unsigned threads = 1;
  /// When set, the CSV is written here; on failure the finished rows are.
  std::string output_path;
};

struct ExperimentRecord {
  std::string family;
  std::string params;
  std::uint64_t n = 0;
  std::uint64_t delta = 0;
  std::uint32_t s_bar = 0;
  std::string s_mode;
  std::uint64_t mu = 0;
  double gamma = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t replicate = 0;
  std::uint64_t generations = 0;
  std::uint64_t evaluations = 0;
  bool success = false;
  std::string stop_rule;
  double theorem_eval_budget = 0.0;
  std::optional<double> wall_ms;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

/// "n=16;k=2" style parameter string.
std::string spec_params(const GameSpec& spec);

/// gamma = 1 / (20 * max(delta, 1) * n).
double theorem_gamma(std::uint64_t n, std::uint64_t delta);

/// Throws BadParams for an empty or unsorted mu grid or zero replicates.
void validate(const ExperimentConfig& cfg);

/// Rows ordered by mu (grid order) then replicate. Replicate r runs with seed
/// derive_seed(base_seed, r).
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg);

std::string csv_header();
std::string to_csv_row(const ExperimentRecord& r);
std::string to_csv(const std::vector<ExperimentRecord>& records);
/// Inverse of to_csv; throws ParseError.
std::vector<ExperimentRecord> parse_csv(const std::string& text);

struct SweepSummaryRow {
  std::string params;
  std::uint64_t n = 0;
  std::uint64_t delta = 0;
  std::uint32_t s_bar = 0;
  std::uint64_t mu = 0;
  double success_rate = 0.0;
  /// Median over successful replicates; NaN when none succeeded.
  double median_evaluations = 0.0;
  double theorem_eval_budget = 0.0;
};

struct SweepResult {
  std::vector<ExperimentRecord> records;
  std::vector<SweepSummaryRow> summary;
  /// {series: [{name, x, y}], xlabel, ylabel, xscale, yscale}
  Json plot;
};

/// run_experiment once per instance, with cfg_template.game replaced.
SweepResult sweep_scaling(const std::vector<GameSpec>& instances,
                          const ExperimentConfig& cfg_template);

std::string summary_to_csv(const std::vector<SweepSummaryRow>& rows);

struct IntransitivityResult {
  /// x0 beats x1, x1 beats x2 and x2 beats x0, where "beats" means winning
  /// both as first and as second mover.
  std::optional<std::array<Strategy, 3>> witness;
  bool exhaustive = false;
  std::uint64_t triples_checked = 0;
  /// Number of ordered 3-cycles; exhaustive mode only.
  std::uint64_t cycles = 0;
};

inline constexpr std::uint64_t kExhaustiveIntransitivityLimit = 64;

bool beats(const GameGraph& g, const Strategy& x, const Strategy& y);

/// Exhaustive over ordered triples of distinct strategies when the strategy
/// space has at most kExhaustiveIntransitivityLimit members, otherwise
/// `triples` uniform random triples.
IntransitivityResult intransitivity_search(const GameGraph& g, std::uint64_t triples, Rng& rng);

}  // namespace coevo
