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

#include "coevo/games.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "coevo/error.hpp"
#include "coevo/io.hpp"

namespace coevo {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays exact; bail out before overflowing.
    const std::uint64_t num = n - k + i;
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r = r * num / i;
  }
  return r;
}

void guard_size(std::uint64_t count, const std::string& what) {
  if (count > kMaxGameVertices) {
    throw BadParams(what + " has " + std::to_string(count) + " positions, above the limit of " +
                    std::to_string(kMaxGameVertices));
  }
}

std::string tuple_label(const std::vector<std::uint8_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + ")";
}

// Drops positions not reachable from root and renumbers the rest, keeping
// their relative order.
GameGraph compact_and_build(std::vector<std::vector<VertexId>> adj, VertexId root,
                            std::vector<std::string> labels) {
  const std::size_t n = adj.size();
  std::vector<char> reached(n, 0);
  std::vector<VertexId> stack{root};
  reached[root] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v]) {
      if (!reached[w]) {
        reached[w] = 1;
        stack.push_back(w);
      }
    }
  }
  if (std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; })) {
    return build_graph(adj, root, std::move(labels));
  }
  std::vector<VertexId> remap(n, kNoVertex);
  VertexId next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (reached[v]) remap[v] = next++;
  }
  std::vector<std::vector<VertexId>> out(next);
  std::vector<std::string> out_labels;
  for (VertexId v = 0; v < n; ++v) {
    if (!reached[v]) continue;
    for (VertexId w : adj[v]) out[remap[v]].push_back(remap[w]);
    if (!labels.empty()) out_labels.push_back(std::move(labels[v]));
  }
  return build_graph(out, remap[root], std::move(out_labels));
}

}  // namespace

std::string_view family_name(GameFamily f) {
  switch (f) {
    case GameFamily::subtraction_nim: return "subtraction_nim";
    case GameFamily::silver_dollar: return "silver_dollar";
    case GameFamily::turning_turtles: return "turning_turtles";
    case GameFamily::chomp: return "chomp";
    case GameFamily::fixture: return "fixture";
    case GameFamily::custom: return "custom";
  }
  return "unknown";
}

GameFamily parse_family(std::string_view name) {
  for (auto f : {GameFamily::subtraction_nim, GameFamily::silver_dollar,
                 GameFamily::turning_turtles, GameFamily::chomp, GameFamily::fixture,
                 GameFamily::custom}) {
    if (family_name(f) == name) return f;
  }
  throw BadParams("unknown game family '" + std::string(name) + "'");
}

std::uint64_t expected_position_count(const GameSpec& spec) {
  switch (spec.family) {
    case GameFamily::subtraction_nim:
      return static_cast<std::uint64_t>(std::max<std::int64_t>(spec.n, 0));
    case GameFamily::silver_dollar:
      return binomial(static_cast<std::uint64_t>(spec.m), static_cast<std::uint64_t>(spec.k));
    case GameFamily::turning_turtles:
      return spec.m >= 64 ? std::numeric_limits<std::uint64_t>::max()
                          : std::uint64_t{1} << spec.m;
    case GameFamily::chomp: {
      auto b = binomial(2 * static_cast<std::uint64_t>(spec.m), static_cast<std::uint64_t>(spec.m));
      return b == std::numeric_limits<std::uint64_t>::max() ? b : b - 1;
    }
    case GameFamily::fixture:
      return fixture(spec.name).size();
    case GameFamily::custom:
      return load_game_file(spec.name).size();
  }
  return 0;
}

GameGraph make_game(const GameSpec& spec) {
  switch (spec.family) {
    case GameFamily::subtraction_nim: return subtraction_nim(spec.n, spec.k);
    case GameFamily::silver_dollar: return silver_dollar(spec.m, spec.k, spec.start);
    case GameFamily::turning_turtles: return turning_turtles(spec.m);
    case GameFamily::chomp: return chomp(spec.m);
    case GameFamily::fixture: return fixture(spec.name);
    case GameFamily::custom: return load_game_file(spec.name);
  }
  throw BadParams("unknown game family");
}

std::string describe(const GameSpec& spec) {
  std::ostringstream os;
  os << family_name(spec.family);
  switch (spec.family) {
    case GameFamily::subtraction_nim: os << '(' << spec.n << ',' << spec.k << ')'; break;
    case GameFamily::silver_dollar: os << '(' << spec.m << ',' << spec.k << ')'; break;
    case GameFamily::turning_turtles:
    case GameFamily::chomp: os << '(' << spec.m << ')'; break;
    case GameFamily::fixture:
    case GameFamily::custom: os << '(' << spec.name << ')'; break;
  }
  return os.str();
}

GameGraph subtraction_nim(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw BadParams("subtraction_nim needs n >= 1 and k >= 1");
  guard_size(static_cast<std::uint64_t>(n), "subtraction_nim");
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
  std::vector<std::string> labels;
  if (static_cast<std::uint64_t>(n) <= kMaxLabelledVertices) labels.resize(adj.size());
  for (std::int64_t v = 0; v < n; ++v) {
    for (std::int64_t take = 1; take <= k && take <= v; ++take) {
      adj[v].push_back(static_cast<VertexId>(v - take));
    }
    if (!labels.empty()) labels[v] = std::to_string(v);
  }
  return build_graph(adj, static_cast<VertexId>(n - 1), std::move(labels));
}

GameGraph silver_dollar(std::int64_t m, std::int64_t k, const std::vector<std::int64_t>& start) {
  if (k < 1 || m < k || m > 255) throw BadParams("silver_dollar needs 1 <= k <= m <= 255");
  guard_size(binomial(m, k), "silver_dollar");

  // All increasing k-tuples over 1..m in lexicographic order.
  std::vector<std::vector<std::uint8_t>> states;
  std::vector<std::uint8_t> t(static_cast<std::size_t>(k));
  std::iota(t.begin(), t.end(), std::uint8_t{1});
  while (true) {
    states.push_back(t);
    std::int64_t i = k - 1;
    while (i >= 0 && t[i] == m - (k - 1 - i)) --i;
    if (i < 0) break;
    ++t[i];
    for (std::int64_t j = i + 1; j < k; ++j) t[j] = static_cast<std::uint8_t>(t[j - 1] + 1);
  }
  std::map<std::vector<std::uint8_t>, VertexId> index;
  for (VertexId id = 0; id < states.size(); ++id) index.emplace(states[id], id);

  std::vector<std::uint8_t> root_state(static_cast<std::size_t>(k));
  if (start.empty()) {
    for (std::int64_t i = 0; i < k; ++i) root_state[i] = static_cast<std::uint8_t>(m - k + 1 + i);
  } else {
    if (static_cast<std::int64_t>(start.size()) != k) {
      throw BadParams("silver_dollar start must list k squares");
    }
    for (std::int64_t i = 0; i < k; ++i) {
      if (start[i] < 1 || start[i] > m || (i > 0 && start[i] <= start[i - 1])) {
        throw BadParams("silver_dollar start squares must be increasing within 1..m");
      }
      root_state[i] = static_cast<std::uint8_t>(start[i]);
    }
  }

  const bool labelled = states.size() <= kMaxLabelledVertices;
  std::vector<std::vector<VertexId>> adj(states.size());
  std::vector<std::string> labels;
  for (VertexId id = 0; id < states.size(); ++id) {
    const auto& s = states[id];
    for (std::int64_t coin = 0; coin < k; ++coin) {
      const int lower = coin == 0 ? 0 : s[coin - 1];
      for (int target = s[coin] - 1; target > lower; --target) {
        auto next = s;
        next[coin] = static_cast<std::uint8_t>(target);
        adj[id].push_back(index.at(next));
      }
    }
    if (labelled) labels.push_back(tuple_label(s));
  }
  return compact_and_build(std::move(adj), index.at(root_state), std::move(labels));
}

GameGraph turning_turtles(std::int64_t m) {
  if (m < 1 || m > 62) throw BadParams("turning_turtles needs m >= 1");
  const std::uint64_t n = std::uint64_t{1} << m;
  guard_size(n, "turning_turtles");
  const bool labelled = n <= kMaxLabelledVertices;
  std::vector<std::vector<VertexId>> adj(n);
  std::vector<std::string> labels;
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    for (std::int64_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      const std::uint64_t turned = mask ^ (std::uint64_t{1} << i);
      adj[mask].push_back(static_cast<VertexId>(turned));
      for (std::int64_t j = 0; j < i; ++j) {
        adj[mask].push_back(static_cast<VertexId>(turned ^ (std::uint64_t{1} << j)));
      }
    }
    if (labelled) {
      std::string l(static_cast<std::size_t>(m), 'T');
      for (std::int64_t i = 0; i < m; ++i) {
        if (mask >> i & 1) l[i] = 'H';
      }
      labels.push_back(std::move(l));
    }
  }
  return build_graph(adj, static_cast<VertexId>(n - 1), std::move(labels));
}

GameGraph chomp(std::int64_t m) {
  if (m < 1 || m > 32) throw BadParams("chomp needs m >= 1");
  guard_size(binomial(2 * m, m) - 1, "chomp");

  // Non-increasing tuples over 0..m in lexicographic order, skipping the empty
  // board (the all-zero tuple, which comes first).
  std::vector<std::vector<std::uint8_t>> states;
  std::vector<std::uint8_t> rows(static_cast<std::size_t>(m), 0);
  while (true) {
    if (rows[0] != 0) states.push_back(rows);
    // Advance to the next non-increasing tuple: bump the rightmost row that
    // may grow, reset everything after it to 0.
    std::int64_t i = m - 1;
    while (i >= 0 && rows[i] == (i == 0 ? m : rows[i - 1])) --i;
    if (i < 0) break;
    ++rows[i];
    for (std::int64_t j = i + 1; j < m; ++j) rows[j] = 0;
  }
  std::map<std::vector<std::uint8_t>, VertexId> index;
  for (VertexId id = 0; id < states.size(); ++id) index.emplace(states[id], id);

  const bool labelled = states.size() <= kMaxLabelledVertices;
  std::vector<std::vector<VertexId>> adj(states.size());
  std::vector<std::string> labels;
  for (VertexId id = 0; id < states.size(); ++id) {
    const auto& s = states[id];
    for (std::int64_t row = 0; row < m; ++row) {
      for (int col = 1; col <= s[row]; ++col) {
        if (row == 0 && col == 1) continue;  // poison square
        auto next = s;
        for (std::int64_t r = row; r < m; ++r) {
          next[r] = std::min<std::uint8_t>(next[r], static_cast<std::uint8_t>(col - 1));
        }
        adj[id].push_back(index.at(next));
      }
    }
    if (labelled) labels.push_back(tuple_label(s));
  }
  const std::vector<std::uint8_t> full(static_cast<std::size_t>(m), static_cast<std::uint8_t>(m));
  return build_graph(adj, index.at(full), std::move(labels));
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"fig1", "fig2", "fig3_top", "fig3_bottom", "fig4"};
  return names;
}

Fixture fixture_details(std::string_view name) {
  Fixture f;
  if (name == "fig1") {
    f.graph = build_graph({{1, 2, 4}, {2}, {3, 4}, {4}, {}}, 0, {"v0", "a", "b", "c", "d"});
    return f;
  }
  if (name == "fig2") {
    std::vector<std::vector<VertexId>> adj(8);
    std::vector<std::string> labels{"v0", "b1", "b2", "b3", "b4", "b5", "u", "w"};
    for (VertexId b = 1; b <= 5; ++b) {
      adj[0].push_back(b);
      adj[b] = {6, 7};
      f.highlighted.push_back({b, 6});
    }
    f.graph = build_graph(adj, 0, std::move(labels));
    f.marked = 6;
    return f;
  }
  if (name == "fig3_top") {
    std::vector<std::vector<VertexId>> adj(8);
    std::vector<std::string> labels;
    for (VertexId i = 0; i < 8; ++i) {
      if (i + 1 < 8) adj[i].push_back(i + 1);
      if (i + 2 < 8) adj[i].push_back(i + 2);
      labels.push_back(i == 5 ? "v" : "v" + std::to_string(i));
    }
    f.graph = build_graph(adj, 0, std::move(labels));
    f.marked = 5;
    f.highlighted = {{3, 5}, {4, 5}};
    return f;
  }
  if (name == "fig3_bottom") {
    auto top = [](VertexId c) { return 3 * c - 2; };
    auto mid = [](VertexId c) { return 3 * c - 1; };
    auto bot = [](VertexId c) { return 3 * c; };
    std::vector<std::vector<VertexId>> adj(13);
    std::vector<std::string> labels(13);
    labels[0] = "v0";
    adj[0] = {top(1), mid(1), bot(1)};
    for (VertexId c = 1; c <= 4; ++c) {
      labels[top(c)] = c == 3 ? "v" : "top" + std::to_string(c);
      labels[mid(c)] = "mid" + std::to_string(c);
      labels[bot(c)] = "bot" + std::to_string(c);
      if (c == 4) break;
      adj[top(c)] = {mid(c + 1), top(c + 1)};
      adj[mid(c)] = {bot(c + 1), top(c + 1)};
      adj[bot(c)] = {bot(c + 1), mid(c + 1)};
    }
    f.graph = build_graph(adj, 0, std::move(labels));
    f.marked = top(3);
    f.highlighted = {{0, top(1)}, {mid(2), top(3)}, {top(2), top(3)}};
    return f;
  }
  if (name == "fig4") {
    std::vector<std::vector<VertexId>> adj(10);
    std::vector<std::string> labels;
    for (VertexId i = 0; i < 8; ++i) {
      if (i + 1 < 8) adj[i].push_back(i + 1);
      adj[i].push_back(8);
      labels.push_back("v" + std::to_string(i));
    }
    adj[8] = {9};
    labels.push_back("u");
    labels.push_back("w");
    f.graph = build_graph(adj, 0, std::move(labels));
    f.marked = 8;
    return f;
  }
  throw UnknownFixture("unknown fixture '" + std::string(name) + "'");
}

GameGraph fixture(std::string_view name) { return fixture_details(name).graph; }

Strategy decode_nim_strategy(std::string_view text, std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1 || k > 9) throw BadParams("nim strategy strings need n >= 1 and 1 <= k <= 9");
  if (static_cast<std::int64_t>(text.size()) != n - 1) {
    throw BadLength("expected " + std::to_string(n - 1) + " characters, got " +
                    std::to_string(text.size()));
  }
  std::vector<std::uint32_t> choice(static_cast<std::size_t>(n), 0);
  for (std::int64_t heap = 1; heap < n; ++heap) {
    const char c = text[heap - 1];
    if (c < '1' || c > '0' + k) {
      throw BadChar(std::string("character '") + c + "' at heap " + std::to_string(heap) +
                    " is not in 1.." + std::to_string(k));
    }
    const int take = c - '0';
    if (take > heap) {
      throw IllegalMove("cannot remove " + std::to_string(take) + " from a heap of " +
                        std::to_string(heap));
    }
    choice[heap] = static_cast<std::uint32_t>(take - 1);
  }
  return Strategy(std::move(choice));
}

std::string encode_nim_strategy(const Strategy& s, std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1 || k > 9) throw BadParams("nim strategy strings need n >= 1 and 1 <= k <= 9");
  if (static_cast<std::int64_t>(s.size()) != n) throw BadLength("strategy size does not match n");
  std::string out;
  for (std::int64_t heap = 1; heap < n; ++heap) {
    const auto take = static_cast<std::int64_t>(s.index(static_cast<VertexId>(heap))) + 1;
    if (take > k || take > heap) throw IllegalMove("strategy removes too many items");
    out.push_back(static_cast<char>('0' + take));
  }
  return out;
}

}  // namespace coevo
