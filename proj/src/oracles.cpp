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

#include "coevo/oracles.hpp"

#include <string>

#include "coevo/error.hpp"
#include "coevo/grundy.hpp"
#include "coevo/umda.hpp"

namespace coevo {

namespace {

std::uint64_t enumerable_count(const GameGraph& g) {
  const auto count = strategy_count(g);
  if (!count || *count > kMaxEnumeratedStrategies) {
    throw TooLarge("strategy space exceeds " + std::to_string(kMaxEnumeratedStrategies));
  }
  return *count;
}

}  // namespace

MonteCarloSelection monte_carlo_selection(const GameGraph& g, const ProbModel& model, VertexId u,
                                          std::uint64_t trials, Rng& rng) {
  if (trials == 0) throw BadParams("monte_carlo_selection needs at least one trial");
  std::vector<std::uint64_t> counts(g.out_degree(u), 0);
  Strategy x = first_choice_strategy(g);
  Strategy y = first_choice_strategy(g);
  for (std::uint64_t t = 0; t < trials; ++t) {
    sample_strategy_into(g, model, rng, x);
    sample_strategy_into(g, model, rng, y);
    const Strategy& z = play_winner(g, x, y) == 1 ? x : y;
    ++counts[z.index(u)];
  }
  MonteCarloSelection mc;
  mc.trials = trials;
  for (std::uint64_t c : counts) {
    const double f = static_cast<double>(c) / static_cast<double>(trials);
    mc.frequency.push_back(f);
    mc.std_error.push_back(std::sqrt(f * (1.0 - f) / static_cast<double>(trials)));
  }
  return mc;
}

std::vector<Strategy> brute_force_opt(const GameGraph& g) {
  const std::uint64_t count = enumerable_count(g);
  std::vector<Strategy> out;
  for (std::uint64_t r = 0; r < count; ++r) {
    Strategy x = strategy_from_rank(g, r);
    if (is_optimal_exact(g, x)) out.push_back(std::move(x));
  }
  return out;
}

bool is_optimal_by_playout(const GameGraph& g, const Strategy& x) {
  const std::uint64_t count = enumerable_count(g);
  for (std::uint64_t r = 0; r < count; ++r) {
    if (play_winner(g, x, strategy_from_rank(g, r)) != 1) return false;
  }
  return true;
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw BadParams("total_variation needs equal lengths");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return sum / 2.0;
}

}  // namespace coevo
