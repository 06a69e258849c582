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

#include "coevo/game_graph.hpp"

#include <algorithm>
#include <deque>

#include "coevo/error.hpp"

namespace coevo {

namespace {
const std::string kEmptyLabel;
}

bool GameGraph::has_edge(VertexId u, VertexId v) const {
  return successor_index(u, v).has_value();
}

std::optional<std::uint32_t> GameGraph::successor_index(VertexId u, VertexId v) const {
  if (u >= size()) return std::nullopt;
  auto succ = successors(u);
  auto it = std::find(succ.begin(), succ.end(), v);
  if (it == succ.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - succ.begin());
}

const std::string& GameGraph::label(VertexId v) const {
  return labels_.empty() ? kEmptyLabel : labels_[v];
}

std::vector<std::vector<VertexId>> GameGraph::adjacency() const {
  std::vector<std::vector<VertexId>> adj(size());
  for (VertexId v = 0; v < size(); ++v) {
    auto succ = successors(v);
    adj[v].assign(succ.begin(), succ.end());
  }
  return adj;
}

GameGraph build_graph(const std::vector<std::vector<VertexId>>& adjacency, VertexId root,
                      std::vector<std::string> labels) {
  const std::size_t n = adjacency.size();
  if (n == 0) throw BadEdge("game has no vertices");
  if (root >= n) throw BadEdge("root " + std::to_string(root) + " is not a vertex");
  if (!labels.empty() && labels.size() != n) {
    throw BadEdge("labels must be empty or one per vertex");
  }

  GameGraph g;
  g.root_ = root;
  g.labels_ = std::move(labels);
  g.offsets_.reserve(n + 1);
  g.offsets_.push_back(0);
  std::vector<std::size_t> in_degree(n, 0);
  std::vector<char> seen(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : adjacency[v]) {
      if (w >= n) {
        throw BadEdge("edge " + std::to_string(v) + "->" + std::to_string(w) +
                      " leaves the vertex set");
      }
      if (w == v) throw BadEdge("self loop at " + std::to_string(v));
      if (seen[w]) {
        throw BadEdge("duplicate edge " + std::to_string(v) + "->" + std::to_string(w));
      }
      seen[w] = 1;
      g.targets_.push_back(w);
      ++in_degree[w];
    }
    for (VertexId w : adjacency[v]) seen[w] = 0;
    g.offsets_.push_back(g.targets_.size());
    g.max_degree_ = std::max(g.max_degree_, adjacency[v].size());
    if (!adjacency[v].empty()) g.interior_.push_back(v);
  }

  g.pred_offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) g.pred_offsets_[v + 1] = g.pred_offsets_[v] + in_degree[v];
  g.pred_targets_.resize(g.targets_.size());
  std::vector<std::size_t> fill(g.pred_offsets_.begin(), g.pred_offsets_.end() - 1);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId w : g.successors(u)) g.pred_targets_[fill[w]++] = u;
  }

  // Kahn's algorithm on reversed edges: a vertex is released once all of its
  // successors have been emitted.
  std::vector<std::size_t> remaining(n);
  std::deque<VertexId> ready;
  for (VertexId v = 0; v < n; ++v) {
    remaining[v] = g.out_degree(v);
    if (remaining[v] == 0) ready.push_back(v);
  }
  g.rev_topo_.reserve(n);
  while (!ready.empty()) {
    VertexId v = ready.front();
    ready.pop_front();
    g.rev_topo_.push_back(v);
    for (VertexId p : g.predecessors(v)) {
      if (--remaining[p] == 0) ready.push_back(p);
    }
  }
  if (g.rev_topo_.size() != n) throw CycleDetected("game graph contains a directed cycle");

  std::vector<char> reached(n, 0);
  std::vector<VertexId> stack{root};
  reached[root] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.successors(v)) {
      if (!reached[w]) {
        reached[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!reached[v]) {
      throw Unreachable(v, "vertex " + std::to_string(v) + " is not reachable from the root");
    }
  }
  return g;
}

void validate(const GameGraph& g, const Strategy& s) {
  if (s.size() != g.size()) {
    throw BadStrategy("strategy has " + std::to_string(s.size()) + " slots, game has " +
                      std::to_string(g.size()) + " vertices");
  }
  for (VertexId v : g.interior()) {
    if (s.index(v) >= g.out_degree(v)) {
      throw BadStrategy("choice at vertex " + std::to_string(v) + " is out of range");
    }
  }
}

Strategy strategy_from_moves(const GameGraph& g, const std::vector<VertexId>& moves) {
  if (moves.size() != g.size()) throw BadStrategy("one move per vertex required");
  std::vector<std::uint32_t> choice(g.size(), 0);
  for (VertexId v : g.interior()) {
    auto idx = g.successor_index(v, moves[v]);
    if (!idx) {
      throw BadStrategy("move " + std::to_string(v) + "->" + std::to_string(moves[v]) +
                        " is not an edge");
    }
    choice[v] = *idx;
  }
  return Strategy(std::move(choice));
}

Strategy first_choice_strategy(const GameGraph& g) {
  return Strategy(std::vector<std::uint32_t>(g.size(), 0));
}

std::optional<std::uint64_t> strategy_count(const GameGraph& g) {
  std::uint64_t count = 1;
  for (VertexId v : g.interior()) {
    const std::uint64_t d = g.out_degree(v);
    if (count > std::numeric_limits<std::uint64_t>::max() / d) return std::nullopt;
    count *= d;
  }
  return count;
}

Strategy strategy_from_rank(const GameGraph& g, std::uint64_t rank) {
  std::vector<std::uint32_t> choice(g.size(), 0);
  for (VertexId v : g.interior()) {
    const std::uint64_t d = g.out_degree(v);
    choice[v] = static_cast<std::uint32_t>(rank % d);
    rank /= d;
  }
  return Strategy(std::move(choice));
}

Transcript play(const GameGraph& g, const Strategy& x, const Strategy& y) {
  Transcript t;
  VertexId v = g.root();
  t.visited.push_back(v);
  bool x_to_move = true;
  while (!g.is_sink(v)) {
    v = (x_to_move ? x : y).move(g, v);
    t.visited.push_back(v);
    x_to_move = !x_to_move;
  }
  // The player to move at the sink loses.
  t.winner = x_to_move ? -1 : 1;
  return t;
}

int play_winner(const GameGraph& g, const Strategy& x, const Strategy& y) {
  VertexId v = g.root();
  bool x_to_move = true;
  while (!g.is_sink(v)) {
    v = (x_to_move ? x : y).move(g, v);
    x_to_move = !x_to_move;
  }
  return x_to_move ? -1 : 1;
}

int play_from(const GameGraph& g, VertexId v, const Strategy& x, const Strategy& y) {
  if (g.is_sink(v)) return -1;
  return -play_from(g, x.move(g, v), y, x);
}

}  // namespace coevo
