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

// Benchmark games and small hand-drawn fixtures.
//
// Position encodings (vertex ids are stable across runs):
//
//   subtraction_nim(n, k)  id = heap size, root n-1. F(v) is ordered by
//                          increasing subtrahend: index i removes i+1 items.
//   silver_dollar(m, k)    k-tuples of occupied squares (1-based, increasing),
//                          ids in lexicographic order of the tuples. Moves are
//                          ordered by coin (left to right) and then by target
//                          square from nearest to farthest.
//   turning_turtles(m)     id = heads mask, coin c <-> bit c-1. Moves are
//                          ordered by the coin turned to tails (ascending),
//                          first without a second flip, then with the second
//                          flip at coin 1, 2, ... .
//   chomp(m)               row lengths (l1 >= ... >= lm), row 1 holds the
//                          poison square; ids in lexicographic order of the
//                          tuples with the empty board dropped, so the sink
//                          (1,0,...,0) is id 0. Moves are ordered row-major by
//                          the chomped cell (row, column).
//
// Games are materialised as explicit graphs; anything above kMaxGameVertices
// positions is refused with BadParams.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coevo/game_graph.hpp"

namespace coevo {

inline constexpr std::uint64_t kMaxGameVertices = std::uint64_t{1} << 22;
/// Generators attach human-readable labels only up to this many positions.
inline constexpr std::uint64_t kMaxLabelledVertices = std::uint64_t{1} << 16;

enum class GameFamily { subtraction_nim, silver_dollar, turning_turtles, chomp, fixture, custom };

struct GameSpec {
  GameFamily family = GameFamily::subtraction_nim;
  std::int64_t n = 0;  // subtraction_nim
  std::int64_t k = 0;  // subtraction_nim, silver_dollar
  std::int64_t m = 0;  // silver_dollar, turning_turtles, chomp
  /// silver_dollar only: starting squares, defaults to the rightmost k.
  std::vector<std::int64_t> start;
  /// fixture name, or a file path for custom games.
  std::string name;
};

std::string_view family_name(GameFamily f);
GameFamily parse_family(std::string_view name);

/// Builds the game described by spec. Custom specs load the JSON file at
/// spec.name.
GameGraph make_game(const GameSpec& spec);
/// Short identifier, e.g. "subtraction_nim(16,2)".
std::string describe(const GameSpec& spec);

GameGraph subtraction_nim(std::int64_t n, std::int64_t k);
GameGraph silver_dollar(std::int64_t m, std::int64_t k,
                        const std::vector<std::int64_t>& start = {});
GameGraph turning_turtles(std::int64_t m);
GameGraph chomp(std::int64_t m);

/// A figure fixture plus what the figure highlights.
struct Fixture {
  GameGraph graph;
  /// The vertex the figure singles out (v in fig3_*, u in fig2), if any.
  std::optional<VertexId> marked;
  /// The highlighted edge set (the drawn switcher), if any.
  std::vector<Edge> highlighted;
};

/// Vertex numbering:
///   fig1         v0=0, a=1, b=2, c=3, d=4.
///   fig2         v0=0, layer B=1..5, u=6, w=7; each b has F(b) = (u, w).
///   fig3_top     chain v0..v7 = 0..7 with skip edges i->i+2; marked v = 5.
///   fig3_bottom  v0=0; column c (1..4) has top=3c-2, middle=3c-1,
///                bottom=3c; marked v = top of column 3 = 7.
///   fig4         chain v0..v7 = 0..7, u=8, w=9; F(vi) = (v(i+1), u).
Fixture fixture_details(std::string_view name);
GameGraph fixture(std::string_view name);
const std::vector<std::string>& fixture_names();

/// Strategy string for subtraction_nim(n, k): character i (1-based) is the
/// number of items removed from a heap of size i. Requires k <= 9.
Strategy decode_nim_strategy(std::string_view text, std::int64_t n, std::int64_t k);
std::string encode_nim_strategy(const Strategy& s, std::int64_t n, std::int64_t k);

/// Number of positions a family instance will have, computed without
/// building it (subtraction_nim: n, silver_dollar: C(m,k), turning_turtles:
/// 2^m, chomp: C(2m,m)-1). Saturates at UINT64_MAX.
std::uint64_t expected_position_count(const GameSpec& spec);

}  // namespace coevo
