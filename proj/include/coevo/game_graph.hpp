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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coevo {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Edge {
  VertexId from = 0;
  VertexId to = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// An impartial game under normal play: a finite rooted DAG whose vertices
/// are positions and whose edges are legal moves. Vertices are the dense
/// integers 0..size()-1. Immutable once built; obtain one from build_graph.
///
/// Successor order is part of the value: it is the canonical index order used
/// by strategies, probability models and every serialised form.
class GameGraph {
 public:
  GameGraph() = default;

  std::size_t size() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  VertexId root() const noexcept { return root_; }

  std::span<const VertexId> successors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::span<const VertexId> predecessors(VertexId v) const {
    return {pred_targets_.data() + pred_offsets_[v], pred_targets_.data() + pred_offsets_[v + 1]};
  }
  std::size_t out_degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool is_sink(VertexId v) const { return offsets_[v + 1] == offsets_[v]; }

  /// Maximum out-degree.
  std::size_t max_degree() const noexcept { return max_degree_; }
  std::size_t edge_count() const noexcept { return targets_.size(); }

  /// Every vertex appears after all of its successors (sinks come first).
  const std::vector<VertexId>& reverse_topological_order() const noexcept { return rev_topo_; }
  /// Non-sink vertices in increasing id order.
  const std::vector<VertexId>& interior() const noexcept { return interior_; }

  bool has_edge(VertexId u, VertexId v) const;
  /// Position of v in successors(u), if (u, v) is an edge.
  std::optional<std::uint32_t> successor_index(VertexId u, VertexId v) const;

  /// Empty when the vertex carries no label.
  const std::string& label(VertexId v) const;
  bool has_labels() const noexcept { return !labels_.empty(); }

  /// Adjacency lists in canonical order; round-trips through build_graph.
  std::vector<std::vector<VertexId>> adjacency() const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend GameGraph build_graph(const std::vector<std::vector<VertexId>>& adjacency, VertexId root,
                               std::vector<std::string> labels);

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
  std::vector<std::size_t> pred_offsets_;
  std::vector<VertexId> pred_targets_;
  std::vector<VertexId> rev_topo_;
  std::vector<VertexId> interior_;
  std::vector<std::string> labels_;
  VertexId root_ = 0;
  std::size_t max_degree_ = 0;
};

/// Validates and freezes a game. adjacency[v] lists F(v) in canonical order.
/// Throws BadEdge (out-of-range, duplicate or self edge), CycleDetected, or
/// Unreachable (some vertex has no directed path from the root). labels is
/// either empty or one entry per vertex.
GameGraph build_graph(const std::vector<std::vector<VertexId>>& adjacency, VertexId root,
                      std::vector<std::string> labels = {});

/// A complete strategy: for every interior vertex, the index of the chosen
/// successor in canonical order. Sink slots are held at 0 and never read.
class Strategy {
 public:
  Strategy() = default;
  explicit Strategy(std::vector<std::uint32_t> choice) : choice_(std::move(choice)) {}

  std::uint32_t index(VertexId v) const { return choice_[v]; }
  void set_index(VertexId v, std::uint32_t i) { choice_[v] = i; }
  VertexId move(const GameGraph& g, VertexId v) const { return g.successors(v)[choice_[v]]; }

  const std::vector<std::uint32_t>& indices() const noexcept { return choice_; }
  std::size_t size() const noexcept { return choice_.size(); }

  friend bool operator==(const Strategy&, const Strategy&) = default;
  friend auto operator<=>(const Strategy&, const Strategy&) = default;

 private:
  std::vector<std::uint32_t> choice_;
};

/// Throws BadStrategy unless s has one slot per vertex and every interior
/// choice is a valid successor index.
void validate(const GameGraph& g, const Strategy& s);

/// Builds a strategy from explicit targets: moves[v] must lie in F(v) for
/// interior v; entries for sinks are ignored.
Strategy strategy_from_moves(const GameGraph& g, const std::vector<VertexId>& moves);

/// The strategy that always takes the first successor.
Strategy first_choice_strategy(const GameGraph& g);

/// |X_G| = product of out-degrees over interior vertices, or nullopt when it
/// does not fit in 64 bits.
std::optional<std::uint64_t> strategy_count(const GameGraph& g);

/// Mixed-radix decoding of rank in [0, strategy_count): interior vertices in
/// increasing id order, lowest id is the least significant digit.
Strategy strategy_from_rank(const GameGraph& g, std::uint64_t rank);

/// Realised play of x (moving first) against y.
struct Transcript {
  std::vector<VertexId> visited;
  /// +1 when x (the first mover) wins, -1 otherwise.
  int winner = 0;
};

/// Iterative playout from the root.
Transcript play(const GameGraph& g, const Strategy& x, const Strategy& y);

/// play(g, x, y).winner without materialising the path.
int play_winner(const GameGraph& g, const Strategy& x, const Strategy& y);

/// Recursive payoff f^v(x, y) with x to move at v: -1 at a sink, otherwise the
/// negation of the payoff from x(v) with roles swapped. Reference
/// implementation; recursion depth equals the path length.
int play_from(const GameGraph& g, VertexId v, const Strategy& x, const Strategy& y);

}  // namespace coevo
