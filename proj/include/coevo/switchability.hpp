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

// Switchability of a position: the least depth of an edge set A that forces
// every play to visit it.
//
// A path from the root is A-compatible when, at every vertex that has an
// outgoing A-edge, it continues along an A-edge. A is a v-switcher when every
// A-compatible path that ends at a sink passes through v. Depth(A) is the
// largest number of A-edges on any directed path of the game.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "coevo/game_graph.hpp"
#include "coevo/grundy.hpp"

namespace coevo {

/// Sorted, duplicate-free list of edges of a host graph.
using EdgeSet = std::vector<Edge>;

/// Sorts and deduplicates; throws ForeignEdge if some edge is not in g.
EdgeSet make_edge_set(const GameGraph& g, std::vector<Edge> edges);

/// Largest number of A-edges on a single directed path (longest-path DP).
/// Throws ForeignEdge.
std::uint32_t depth(const GameGraph& g, std::span<const Edge> a);

/// Reachability in the forced graph: a vertex with outgoing A-edges keeps only
/// those, every other vertex keeps all its moves. A is a v-switcher iff no
/// sink is reachable from the root once v is deleted. Throws ForeignEdge.
bool is_switcher(const GameGraph& g, std::span<const Edge> a, VertexId v);

enum class SwitchMethod { exact_search, path_bound };
std::string_view switch_method_name(SwitchMethod m);

struct SwitchabilityReport {
  VertexId vertex = 0;
  std::optional<std::uint32_t> exact;
  std::uint32_t upper_bound = 0;
  std::optional<EdgeSet> witness;
  SwitchMethod method = SwitchMethod::path_bound;

  /// exact when known, otherwise the bound.
  std::uint32_t value() const { return exact ? *exact : upper_bound; }
};

inline constexpr std::size_t kDefaultEdgeLimit = 24;

/// Iterative deepening over the target depth; returns the least depth and a
/// witness switcher. Throws TooLarge when g has more than edge_limit edges.
///
/// The search only places A-edges at vertices reachable in the forced graph
/// and at most one per vertex: dropping extra A-edges at a vertex shrinks the
/// forced graph without raising the depth, so some minimum-depth switcher has
/// that shape.
SwitchabilityReport exact_switchability(const GameGraph& g, VertexId v,
                                        std::size_t edge_limit = kDefaultEdgeLimit);

/// Edge count of a shortest root-to-v path; every such path is a v-switcher.
/// Throws Unreachable.
std::uint32_t upper_bound_switchability(const GameGraph& g, VertexId v);

/// The edges of one shortest root-to-v path.
EdgeSet shortest_path_switcher(const GameGraph& g, VertexId v);

enum class ProfileMode { exact, bound, hybrid };
std::string_view profile_mode_name(ProfileMode m);
ProfileMode parse_profile_mode(std::string_view name);

struct SwitchabilityProfile {
  ProfileMode mode = ProfileMode::hybrid;
  std::vector<SwitchabilityReport> reports;  // indexed by vertex
  /// Largest value() over all vertices.
  std::uint32_t s_bar = 0;
  /// Largest value() over the critical positions.
  std::uint32_t s_hat = 0;
  /// True when every report carries an exact value.
  bool all_exact = false;

  std::vector<std::optional<std::uint32_t>> values() const;
};

/// hybrid runs the exact search when g has at most edge_limit edges and falls
/// back to the path bound otherwise; exact throws TooLarge in that case.
SwitchabilityProfile switchability_profile(const GameGraph& g, ProfileMode mode,
                                           std::size_t edge_limit = kDefaultEdgeLimit);
SwitchabilityProfile switchability_profile(const GameGraph& g, const GrundyData& gd,
                                           ProfileMode mode,
                                           std::size_t edge_limit = kDefaultEdgeLimit);

}  // namespace coevo
