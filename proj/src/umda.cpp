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

#include "coevo/umda.hpp"

#include <string>

#include "coevo/error.hpp"
#include "coevo/grundy.hpp"

namespace coevo {

std::string_view stop_rule_name(StopRule r) {
  switch (r) {
    case StopRule::exact_optimal: return "exact";
    case StopRule::sufficient_optimal: return "sufficient";
    case StopRule::generation_cap_only: return "cap";
  }
  return "unknown";
}

StopRule parse_stop_rule(std::string_view name) {
  if (name == "exact" || name == "exact_optimal") return StopRule::exact_optimal;
  if (name == "sufficient" || name == "sufficient_optimal") return StopRule::sufficient_optimal;
  if (name == "cap" || name == "generation_cap_only") return StopRule::generation_cap_only;
  throw BadParams("unknown stop rule '" + std::string(name) + "'");
}

void sample_strategy_into(const GameGraph& g, const ProbModel& model, Rng& rng, Strategy& out) {
  for (VertexId v : g.interior()) {
    auto p = model.dist(v);
    const double u = uniform01(rng);
    double acc = 0.0;
    std::uint32_t pick = static_cast<std::uint32_t>(p.size() - 1);
    for (std::uint32_t i = 0; i + 1 < p.size(); ++i) {
      acc += p[i];
      if (u < acc) {
        pick = i;
        break;
      }
    }
    out.set_index(v, pick);
  }
}

Strategy sample_strategy(const GameGraph& g, const ProbModel& model, Rng& rng) {
  Strategy s = first_choice_strategy(g);
  sample_strategy_into(g, model, rng, s);
  return s;
}

Strategy tournament(const GameGraph& g, const ProbModel& model, Rng& rng,
                    std::uint64_t& evaluations) {
  Strategy x = sample_strategy(g, model, rng);
  Strategy y = sample_strategy(g, model, rng);
  ++evaluations;
  return play_winner(g, x, y) == 1 ? x : y;
}

namespace {

// Fills population with mu tournament winners. Draw order per slot: x then y,
// identical to tournament().
std::uint64_t select_population(const GameGraph& g, const ProbModel& model, std::uint64_t mu,
                                Rng& rng, std::vector<Strategy>& population, Strategy& scratch) {
  population.resize(mu, first_choice_strategy(g));
  for (auto& slot : population) {
    sample_strategy_into(g, model, rng, slot);
    sample_strategy_into(g, model, rng, scratch);
    if (play_winner(g, slot, scratch) == -1) std::swap(slot, scratch);
  }
  return mu;
}

ProbModel update_model(const GameGraph& g, const std::vector<Strategy>& population, double gamma) {
  std::vector<std::vector<double>> dists(g.size());
  const double inv_mu = 1.0 / static_cast<double>(population.size());
  for (VertexId v : g.interior()) {
    std::vector<std::uint64_t> counts(g.out_degree(v), 0);
    for (const auto& s : population) ++counts[s.index(v)];
    std::vector<double> q(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) q[i] = static_cast<double>(counts[i]) * inv_mu;
    dists[v] = restrict_distribution(q, gamma);
  }
  return ProbModel(std::move(dists), gamma);
}

void check_config(const GameGraph& g, const UmdaConfig& cfg) {
  if (cfg.mu < 1) throw BadParams("mu must be at least 1");
  if (!(cfg.gamma >= 0.0) || cfg.gamma * static_cast<double>(g.max_degree()) >= 1.0) {
    throw GammaTooLarge("gamma must satisfy 0 <= gamma * max_degree < 1");
  }
}

}  // namespace

GenerationOutcome generation_step(const GameGraph& g, const ProbModel& model,
                                  const UmdaConfig& cfg, Rng& rng) {
  check_config(g, cfg);
  GenerationOutcome out;
  Strategy scratch = first_choice_strategy(g);
  out.evaluations = select_population(g, model, cfg.mu, rng, out.population, scratch);
  out.model = update_model(g, out.population, cfg.gamma);
  return out;
}

RunResult run_umda(const GameGraph& g, const UmdaConfig& cfg) {
  check_config(g, cfg);
  const GrundyData gd = grundy_values(g);
  if (gd.h[g.root()] == 0) {
    throw PreconditionViolated("run_umda needs a first-player win (h(root) != 0)");
  }

  RunResult result;
  result.stop_rule = cfg.stop_rule;
  Rng rng = make_rng(cfg.seed);
  ProbModel model = uniform_model(g, cfg.gamma);
  if (cfg.trace_every > 0) result.trace.push_back({0, model});

  auto find_optimal = [&](const std::vector<Strategy>& population) -> const Strategy* {
    for (const auto& s : population) {
      const bool hit = cfg.stop_rule == StopRule::sufficient_optimal
                           ? is_optimal_sufficient(g, gd, s)
                           : is_optimal_exact(g, s);
      if (hit) return &s;
    }
    return nullptr;
  };

  std::vector<Strategy> population;
  Strategy scratch = first_choice_strategy(g);
  for (std::uint64_t t = 1; t <= cfg.max_generations; ++t) {
    result.evaluations += select_population(g, model, cfg.mu, rng, population, scratch);
    model = update_model(g, population, cfg.gamma);
    result.generations_used = t;
    if (cfg.trace_every > 0 && t % cfg.trace_every == 0) result.trace.push_back({t, model});

    if (cfg.stop_rule == StopRule::generation_cap_only && t < cfg.max_generations) continue;
    if (const Strategy* hit = find_optimal(population)) {
      result.succeeded = true;
      result.optimal_witness = *hit;
      break;
    }
  }
  result.final_model = std::move(model);
  return result;
}

}  // namespace coevo
