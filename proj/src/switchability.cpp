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

#include "coevo/switchability.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "coevo/error.hpp"

namespace coevo {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

void check_edges(const GameGraph& g, std::span<const Edge> a) {
  for (const Edge& e : a) {
    if (e.from >= g.size() || e.to >= g.size() || !g.has_edge(e.from, e.to)) {
      throw ForeignEdge("(" + std::to_string(e.from) + ", " + std::to_string(e.to) +
                        ") is not an edge of the game");
    }
  }
}

std::vector<VertexId> forward_order(const GameGraph& g) {
  const auto& rev = g.reverse_topological_order();
  return {rev.rbegin(), rev.rend()};
}

std::vector<std::uint32_t> bfs_distances(const GameGraph& g) {
  std::vector<std::uint32_t> dist(g.size(), kNone);
  std::deque<VertexId> queue{g.root()};
  dist[g.root()] = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.successors(u)) {
      if (dist[w] == kNone) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Depth-first search for a v-switcher of depth <= limit. Vertices are decided
// in forward topological order, so when a vertex comes up its reach status
// and the largest A-count of a path into it are final.
class SwitcherSearch {
 public:
  SwitcherSearch(const GameGraph& g, VertexId v)
      : g_(g), v_(v), order_(forward_order(g)), choice_(g.size(), kNone),
        best_in_(g.size(), 0), reached_(g.size(), 0) {}

  std::optional<EdgeSet> find(std::uint32_t limit) {
    limit_ = limit;
    std::fill(choice_.begin(), choice_.end(), kNone);
    if (!visit(0)) return std::nullopt;
    EdgeSet out;
    for (VertexId u = 0; u < g_.size(); ++u) {
      if (choice_[u] != kNone) out.push_back({u, g_.successors(u)[choice_[u]]});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool visit(std::size_t pos) {
    if (pos == order_.size()) return true;
    const VertexId u = order_[pos];
    choice_[u] = kNone;

    bool reached = u == g_.root();
    std::uint32_t best = 0;
    for (VertexId p : g_.predecessors(u)) {
      const bool a_edge = choice_[p] != kNone && g_.successors(p)[choice_[p]] == u;
      best = std::max(best, best_in_[p] + (a_edge ? 1u : 0u));
      if (reached_[p] && (choice_[p] == kNone || a_edge)) reached = true;
    }
    if (u == v_) reached = false;
    best_in_[u] = best;
    reached_[u] = reached;

    if (!reached) return visit(pos + 1);
    if (g_.is_sink(u)) return false;
    if (visit(pos + 1)) return true;
    if (best + 1 > limit_) return false;
    for (std::uint32_t i = 0; i < g_.out_degree(u); ++i) {
      choice_[u] = i;
      if (visit(pos + 1)) return true;
    }
    choice_[u] = kNone;
    return false;
  }

  const GameGraph& g_;
  VertexId v_;
  std::vector<VertexId> order_;
  std::vector<std::uint32_t> choice_;
  std::vector<std::uint32_t> best_in_;
  std::vector<char> reached_;
  std::uint32_t limit_ = 0;
};

}  // namespace

EdgeSet make_edge_set(const GameGraph& g, std::vector<Edge> edges) {
  check_edges(g, edges);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::uint32_t depth(const GameGraph& g, std::span<const Edge> a) {
  check_edges(g, a);
  EdgeSet sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::uint32_t> best_in(g.size(), 0);
  std::uint32_t result = 0;
  for (VertexId u : forward_order(g)) {
    result = std::max(result, best_in[u]);
    for (VertexId w : g.successors(u)) {
      const bool in_a = std::binary_search(sorted.begin(), sorted.end(), Edge{u, w});
      best_in[w] = std::max(best_in[w], best_in[u] + (in_a ? 1u : 0u));
    }
  }
  return result;
}

bool is_switcher(const GameGraph& g, std::span<const Edge> a, VertexId v) {
  check_edges(g, a);
  std::vector<std::vector<VertexId>> forced(g.size());
  for (const Edge& e : a) forced[e.from].push_back(e.to);

  std::vector<char> seen(g.size(), 0);
  if (g.root() == v) return true;
  std::vector<VertexId> stack{g.root()};
  seen[g.root()] = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    if (g.is_sink(u)) return false;
    auto push = [&](VertexId w) {
      if (w != v && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    };
    if (forced[u].empty()) {
      for (VertexId w : g.successors(u)) push(w);
    } else {
      for (VertexId w : forced[u]) push(w);
    }
  }
  return true;
}

std::string_view switch_method_name(SwitchMethod m) {
  return m == SwitchMethod::exact_search ? "exact_search" : "path_bound";
}

std::uint32_t upper_bound_switchability(const GameGraph& g, VertexId v) {
  if (v >= g.size()) throw Unreachable(v, "vertex " + std::to_string(v) + " is not in the game");
  const auto dist = bfs_distances(g);
  if (dist[v] == kNone) throw Unreachable(v, "vertex " + std::to_string(v) + " is unreachable");
  return dist[v];
}

EdgeSet shortest_path_switcher(const GameGraph& g, VertexId v) {
  const std::uint32_t len = upper_bound_switchability(g, v);
  const auto dist = bfs_distances(g);
  EdgeSet path;
  VertexId cur = v;
  for (std::uint32_t step = len; step > 0; --step) {
    for (VertexId p : g.predecessors(cur)) {
      if (dist[p] == step - 1) {
        path.push_back({p, cur});
        cur = p;
        break;
      }
    }
  }
  std::sort(path.begin(), path.end());
  return path;
}

SwitchabilityReport exact_switchability(const GameGraph& g, VertexId v, std::size_t edge_limit) {
  if (g.edge_count() > edge_limit) {
    throw TooLarge("exact switchability needs at most " + std::to_string(edge_limit) +
                   " edges, game has " + std::to_string(g.edge_count()));
  }
  SwitchabilityReport r;
  r.vertex = v;
  r.upper_bound = upper_bound_switchability(g, v);
  SwitcherSearch search(g, v);
  for (std::uint32_t d = 0; d <= r.upper_bound; ++d) {
    if (auto w = search.find(d)) {
      r.exact = d;
      r.witness = std::move(w);
      r.method = SwitchMethod::exact_search;
      return r;
    }
  }
  // Unreachable in practice: a shortest root-to-v path is itself a switcher.
  r.witness = shortest_path_switcher(g, v);
  r.method = SwitchMethod::path_bound;
  return r;
}

std::string_view profile_mode_name(ProfileMode m) {
  switch (m) {
    case ProfileMode::exact: return "exact";
    case ProfileMode::bound: return "bound";
    case ProfileMode::hybrid: return "hybrid";
  }
  return "unknown";
}

ProfileMode parse_profile_mode(std::string_view name) {
  if (name == "exact") return ProfileMode::exact;
  if (name == "bound") return ProfileMode::bound;
  if (name == "hybrid") return ProfileMode::hybrid;
  throw BadParams("unknown switchability mode '" + std::string(name) + "'");
}

std::vector<std::optional<std::uint32_t>> SwitchabilityProfile::values() const {
  std::vector<std::optional<std::uint32_t>> out;
  out.reserve(reports.size());
  for (const auto& r : reports) out.push_back(r.value());
  return out;
}

SwitchabilityProfile switchability_profile(const GameGraph& g, ProfileMode mode,
                                           std::size_t edge_limit) {
  return switchability_profile(g, grundy_values(g), mode, edge_limit);
}

SwitchabilityProfile switchability_profile(const GameGraph& g, const GrundyData& gd,
                                           ProfileMode mode, std::size_t edge_limit) {
  SwitchabilityProfile prof;
  prof.mode = mode;
  const bool use_exact =
      mode == ProfileMode::exact || (mode == ProfileMode::hybrid && g.edge_count() <= edge_limit);
  if (use_exact) {
    for (VertexId v = 0; v < g.size(); ++v) {
      prof.reports.push_back(exact_switchability(g, v, edge_limit));
    }
  } else {
    const auto dist = bfs_distances(g);
    for (VertexId v = 0; v < g.size(); ++v) {
      SwitchabilityReport r;
      r.vertex = v;
      r.upper_bound = dist[v];
      prof.reports.push_back(std::move(r));
    }
  }
  prof.all_exact = std::all_of(prof.reports.begin(), prof.reports.end(),
                               [](const auto& r) { return r.exact.has_value(); });
  for (const auto& r : prof.reports) prof.s_bar = std::max(prof.s_bar, r.value());
  for (VertexId v : gd.critical) prof.s_hat = std::max(prof.s_hat, prof.reports[v].value());
  return prof;
}

}  // namespace coevo
