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

// Exact oracles for the play of two strategies drawn independently from a
// product model.
//
// Everything here rests on one fact: because the game is acyclic, a playout
// queries each vertex at most once, so the visited path is distributed as the
// Markov chain that moves from u to its i-th successor with probability
// model(u, i), whoever is to move. Reach and win probabilities are therefore
// plain DPs over the topological order.
//
// With r(u) the reach probability and win(v) the probability that the player
// to move at v wins, the winner z of one tournament satisfies
//
//   P(z(u) = v) = p(u, v) * (1 + r(u) * (1 - win(v) - win(u)))
//
// which is the replicator update q' = q * (1 + a - <q, a>) with q = p(u, .)
// and a_i = r(u) * (1 - win(v_i)).

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "coevo/game_graph.hpp"
#include "coevo/prob_model.hpp"
#include "coevo/rng.hpp"

namespace coevo {

template <class T>
std::vector<T> reach_probabilities(const GameGraph& g, const BasicProbModel<T>& model) {
  std::vector<T> r(g.size(), T{0});
  r[g.root()] = T{1};
  const auto& rev = g.reverse_topological_order();
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
    const VertexId u = *it;
    const auto succ = g.successors(u);
    for (std::uint32_t i = 0; i < succ.size(); ++i) r[succ[i]] += r[u] * model.prob(u, i);
  }
  return r;
}

template <class T>
std::vector<T> win_probabilities(const GameGraph& g, const BasicProbModel<T>& model) {
  std::vector<T> win(g.size(), T{0});
  for (VertexId v : g.reverse_topological_order()) {
    if (g.is_sink(v)) continue;
    T lose{0};
    const auto succ = g.successors(v);
    for (std::uint32_t i = 0; i < succ.size(); ++i) lose += model.prob(v, i) * win[succ[i]];
    win[v] = T{1} - lose;
  }
  return win;
}

template <class T>
std::vector<T> selection_from(const GameGraph& g, const BasicProbModel<T>& model, VertexId u,
                              const std::vector<T>& reach, const std::vector<T>& win) {
  const auto succ = g.successors(u);
  std::vector<T> out(succ.size());
  for (std::uint32_t i = 0; i < succ.size(); ++i) {
    out[i] = model.prob(u, i) * (T{1} + reach[u] * (T{1} - win[succ[i]] - win[u]));
  }
  return out;
}

/// Distribution of the tournament winner's choice at interior vertex u.
template <class T>
std::vector<T> selection_distribution(const GameGraph& g, const BasicProbModel<T>& model,
                                      VertexId u) {
  return selection_from(g, model, u, reach_probabilities(g, model), win_probabilities(g, model));
}

template <class T>
struct BasicModelAnalysis {
  std::vector<T> reach;
  std::vector<T> win;
  /// Per vertex; empty for sinks.
  std::vector<std::vector<T>> selection;
};

using ModelAnalysis = BasicModelAnalysis<double>;

template <class T>
BasicModelAnalysis<T> analyze_model(const GameGraph& g, const BasicProbModel<T>& model) {
  BasicModelAnalysis<T> a;
  a.reach = reach_probabilities(g, model);
  a.win = win_probabilities(g, model);
  a.selection.resize(g.size());
  for (VertexId u : g.interior()) a.selection[u] = selection_from(g, model, u, a.reach, a.win);
  return a;
}

template <class T>
struct ReplicatorForm {
  std::vector<T> q;
  std::vector<T> a;
  std::vector<T> q_next;
};

template <class T>
ReplicatorForm<T> replicator_form(const GameGraph& g, const BasicProbModel<T>& model, VertexId u) {
  const auto reach = reach_probabilities(g, model);
  const auto win = win_probabilities(g, model);
  const auto succ = g.successors(u);
  ReplicatorForm<T> f;
  f.q.assign(model.dist(u).begin(), model.dist(u).end());
  f.a.resize(succ.size());
  T mean{0};
  for (std::uint32_t i = 0; i < succ.size(); ++i) {
    f.a[i] = reach[u] * (T{1} - win[succ[i]]);
    mean += f.q[i] * f.a[i];
  }
  f.q_next.resize(succ.size());
  for (std::uint32_t i = 0; i < succ.size(); ++i) f.q_next[i] = f.q[i] * (T{1} + f.a[i] - mean);
  return f;
}

struct MonteCarloSelection {
  std::vector<double> frequency;
  /// Binomial standard error sqrt(f (1 - f) / trials) per entry.
  std::vector<double> std_error;
  std::uint64_t trials = 0;
};

/// Plays `trials` independent tournaments and tallies the winner's choice at
/// u. Throws BadParams when trials is 0.
MonteCarloSelection monte_carlo_selection(const GameGraph& g, const ProbModel& model, VertexId u,
                                          std::uint64_t trials, Rng& rng);

/// Largest strategy space the enumeration oracles accept.
inline constexpr std::uint64_t kMaxEnumeratedStrategies = 1'000'000;

/// Every strategy accepted by is_optimal_exact, in rank order. Throws TooLarge
/// when the strategy space exceeds kMaxEnumeratedStrategies.
std::vector<Strategy> brute_force_opt(const GameGraph& g);

/// Plays x first against every strategy of g. Throws TooLarge like
/// brute_force_opt.
bool is_optimal_by_playout(const GameGraph& g, const Strategy& x);

/// Total variation distance between two distributions of equal length.
double total_variation(const std::vector<double>& p, const std::vector<double>& q);

}  // namespace coevo
