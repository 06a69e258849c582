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

#include "support/support.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>

namespace coevo::testing {

namespace {

template <class T>
void shuffle(Rng& rng, std::vector<T>& xs) {
  for (std::size_t i = xs.size(); i > 1; --i) {
    std::swap(xs[i - 1], xs[uniform_below(rng, i)]);
  }
}

}  // namespace

GameGraph random_dag(Rng& rng, std::uint32_t n, std::uint32_t max_out, double edge_prob) {
  std::vector<std::vector<VertexId>> adj(n);
  auto has = [&](VertexId u, VertexId w) {
    return std::find(adj[u].begin(), adj[u].end(), w) != adj[u].end();
  };
  for (VertexId j = 1; j < n; ++j) {
    // Pick a predecessor with spare capacity; vertex j-1 always qualifies
    // unless full, in which case fall back to any lower vertex.
    std::vector<VertexId> open;
    for (VertexId i = 0; i < j; ++i) {
      if (adj[i].size() < max_out) open.push_back(i);
    }
    if (open.empty()) open.push_back(j - 1);
    adj[open[uniform_below(rng, open.size())]].push_back(j);
  }
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (adj[i].size() >= max_out || has(i, j)) continue;
      if (uniform01(rng) < edge_prob) adj[i].push_back(j);
    }
  }
  for (auto& succ : adj) shuffle(rng, succ);
  return build_graph(adj, 0);
}

GameGraph random_small_game(Rng& rng, std::uint32_t max_n, std::uint32_t max_out,
                            std::uint64_t max_strategies) {
  for (;;) {
    const auto n = static_cast<std::uint32_t>(2 + uniform_below(rng, max_n - 1));
    GameGraph g = random_dag(rng, n, max_out, 0.2 + 0.5 * uniform01(rng));
    const auto count = strategy_count(g);
    if (count && *count <= max_strategies) return g;
  }
}

EdgeSet random_edge_subset(Rng& rng, const GameGraph& g, double keep_prob) {
  std::vector<Edge> out;
  for (VertexId u = 0; u < g.size(); ++u) {
    for (VertexId w : g.successors(u)) {
      if (uniform01(rng) < keep_prob) out.push_back({u, w});
    }
  }
  return make_edge_set(g, std::move(out));
}

ProbModel random_model(Rng& rng, const GameGraph& g, double gamma) {
  std::vector<std::vector<double>> dists(g.size());
  for (VertexId v : g.interior()) {
    std::vector<double> w(g.out_degree(v));
    double sum = 0.0;
    for (double& x : w) {
      // Heavy-tailed weights so that some entries fall below gamma.
      const double u = uniform01(rng);
      x = u * u * u + 1e-9;
      sum += x;
    }
    for (double& x : w) x /= sum;
    dists[v] = restrict_distribution(w, gamma);
  }
  return ProbModel(std::move(dists), gamma);
}

BasicProbModel<Rational> random_rational_model(Rng& rng, const GameGraph& g,
                                               const Rational& gamma) {
  std::vector<std::vector<Rational>> dists(g.size());
  for (VertexId v : g.interior()) {
    std::vector<Rational> w(g.out_degree(v));
    Rational sum = 0;
    for (Rational& x : w) {
      const auto u = uniform_below(rng, 1000);
      x = Rational(u * u * u + 1);
      sum += x;
    }
    for (Rational& x : w) x /= sum;
    dists[v] = restrict_distribution(w, gamma);
  }
  return BasicProbModel<Rational>(std::move(dists), gamma);
}

bool literal_is_switcher(const GameGraph& g, const EdgeSet& a, VertexId v) {
  auto in_a = [&](VertexId u, VertexId w) {
    return std::binary_search(a.begin(), a.end(), Edge{u, w});
  };
  auto has_a_out = [&](VertexId u) {
    for (VertexId w : g.successors(u)) {
      if (in_a(u, w)) return true;
    }
    return false;
  };
  // Extends a compatible path ending at u; contains_v tracks whether v is on it.
  std::function<bool(VertexId, bool)> all_contain = [&](VertexId u, bool contains_v) {
    contains_v = contains_v || u == v;
    if (g.is_sink(u)) return contains_v;
    const bool forced = has_a_out(u);
    for (VertexId w : g.successors(u)) {
      if (forced && !in_a(u, w)) continue;
      if (!all_contain(w, contains_v)) return false;
    }
    return true;
  };
  return all_contain(g.root(), false);
}

std::uint32_t literal_depth(const GameGraph& g, const EdgeSet& a) {
  std::uint32_t best = 0;
  std::function<void(VertexId, std::uint32_t)> walk = [&](VertexId u, std::uint32_t count) {
    best = std::max(best, count);
    for (VertexId w : g.successors(u)) {
      walk(w, count + (std::binary_search(a.begin(), a.end(), Edge{u, w}) ? 1 : 0));
    }
  };
  for (VertexId u = 0; u < g.size(); ++u) walk(u, 0);
  return best;
}

std::uint32_t brute_force_switchability(const GameGraph& g, VertexId v) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < g.size(); ++u) {
    for (VertexId w : g.successors(u)) edges.push_back({u, w});
  }
  std::uint32_t best = UINT32_MAX;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    EdgeSet a;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (mask >> i & 1) a.push_back(edges[i]);
    }
    std::sort(a.begin(), a.end());
    if (literal_is_switcher(g, a, v)) best = std::min(best, literal_depth(g, a));
  }
  return best;
}

bool optimal_by_recursive_playout(const GameGraph& g, const Strategy& x) {
  const auto count = strategy_count(g);
  for (std::uint64_t r = 0; r < *count; ++r) {
    if (play_from(g, g.root(), x, strategy_from_rank(g, r)) != 1) return false;
  }
  return true;
}

std::string scratch_dir() {
  const std::string dir = COEVO_TEST_TMP;
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace coevo::testing
