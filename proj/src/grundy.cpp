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

#include "coevo/grundy.hpp"

#include <algorithm>

#include "coevo/error.hpp"

namespace coevo {

std::uint32_t mex(std::span<const std::uint32_t> values) {
  // The answer is at most |values|, so a bitmap of that size suffices.
  std::vector<char> present(values.size() + 1, 0);
  for (auto v : values) {
    if (v <= values.size()) present[v] = 1;
  }
  std::uint32_t m = 0;
  while (present[m]) ++m;
  return m;
}

GrundyData grundy_values(const GameGraph& g, CriticalRule rule) {
  GrundyData gd;
  gd.h.assign(g.size(), 0);
  std::vector<std::uint32_t> scratch;
  for (VertexId v : g.reverse_topological_order()) {
    scratch.clear();
    for (VertexId w : g.successors(v)) scratch.push_back(gd.h[w]);
    gd.h[v] = mex(scratch);
  }
  for (VertexId v = 0; v < g.size(); ++v) {
    (gd.h[v] == 0 ? gd.zero_set : gd.nonzero_set).push_back(v);
  }
  gd.critical = critical_positions(g, gd, rule);
  return gd;
}

std::vector<VertexId> critical_positions(const GameGraph& g, const GrundyData& gd,
                                         CriticalRule rule) {
  std::vector<VertexId> out;
  for (VertexId v : g.interior()) {
    if (gd.h[v] == 0) continue;
    auto succ = g.successors(v);
    bool qualifies = false;
    switch (rule) {
      case CriticalRule::literal:
        qualifies = std::any_of(succ.begin(), succ.end(), [&](VertexId w) { return gd.h[w] != 0; });
        break;
      case CriticalRule::multi_choice:
        qualifies =
            succ.size() > 1 &&
            std::any_of(succ.begin(), succ.end(), [&](VertexId w) { return gd.h[w] == 0; });
        break;
    }
    if (qualifies) out.push_back(v);
  }
  return out;
}

bool is_optimal_sufficient(const GameGraph& g, const GrundyData& gd, const Strategy& x) {
  if (gd.h[g.root()] == 0) {
    throw PreconditionViolated("sufficient optimality check needs h(root) != 0");
  }
  return std::all_of(gd.critical.begin(), gd.critical.end(),
                     [&](VertexId v) { return gd.h[x.move(g, v)] == 0; });
}

namespace {

// wins[v]: x, to move at v, wins against every opponent. At a sink x loses.
// Otherwise x moves to u = x(v); x wins iff u is a sink or every opponent
// reply from u leads to a vertex that x wins from.
std::vector<char> forced_wins(const GameGraph& g, const Strategy& x) {
  std::vector<char> wins(g.size(), 0);
  for (VertexId v : g.reverse_topological_order()) {
    if (g.is_sink(v)) continue;
    const VertexId u = x.move(g, v);
    auto replies = g.successors(u);
    wins[v] = std::all_of(replies.begin(), replies.end(), [&](VertexId w) { return wins[w] != 0; });
  }
  return wins;
}

}  // namespace

bool is_optimal_exact(const GameGraph& g, const Strategy& x) {
  return forced_wins(g, x)[g.root()] != 0;
}

std::optional<Strategy> refuting_opponent(const GameGraph& g, const Strategy& x) {
  auto wins = forced_wins(g, x);
  if (wins[g.root()]) return std::nullopt;
  std::vector<std::uint32_t> choice(g.size(), 0);
  for (VertexId u : g.interior()) {
    auto succ = g.successors(u);
    for (std::uint32_t i = 0; i < succ.size(); ++i) {
      if (!wins[succ[i]]) {
        choice[u] = i;
        break;
      }
    }
  }
  return Strategy(std::move(choice));
}

Strategy canonical_optimal_strategy(const GameGraph& g, const GrundyData& gd) {
  if (gd.h[g.root()] == 0) {
    throw PreconditionViolated("canonical optimal strategy needs h(root) != 0");
  }
  std::vector<std::uint32_t> choice(g.size(), 0);
  for (VertexId v : g.interior()) {
    auto succ = g.successors(v);
    for (std::uint32_t i = 0; i < succ.size(); ++i) {
      if (gd.h[succ[i]] == 0) {
        choice[v] = i;
        break;
      }
    }
  }
  return Strategy(std::move(choice));
}

GameGraph ensure_first_player_win(const GameGraph& g) {
  if (grundy_values(g).h[g.root()] != 0) return g;
  auto adj = g.adjacency();
  const auto new_root = static_cast<VertexId>(adj.size());
  adj.push_back({g.root()});
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels = g.labels();
    labels.push_back("v*");
  }
  return build_graph(adj, new_root, std::move(labels));
}

}  // namespace coevo
