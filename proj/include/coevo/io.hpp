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

// JSON and DOT forms of games, strategies, models and results.
//
// Game file:
//   {"root": 0, "vertices": [{"id": 0, "succ": [1, 2], "label": "v0"}, ...]}
// ids must be exactly 0..n-1 (any order); "label" is optional.
//
// Model file: {"gamma": g, "dists": [[p00, p01], [], ...]}. A run file is
// also accepted, in which case its final model is read.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coevo/game_graph.hpp"
#include "coevo/grundy.hpp"
#include "coevo/prob_model.hpp"
#include "coevo/switchability.hpp"
#include "coevo/umda.hpp"

namespace coevo {

using Json = nlohmann::ordered_json;

Json game_to_json(const GameGraph& g);
/// Throws ParseError on malformed input, plus the build_graph errors.
GameGraph game_from_json(const Json& j);
GameGraph load_game_file(const std::string& path);

/// Graphviz digraph. The root is drawn doubled, the marked vertex filled and
/// highlighted edges bold.
std::string game_to_dot(const GameGraph& g, std::optional<VertexId> marked = std::nullopt,
                        const std::vector<Edge>& highlighted = {});

Json strategy_to_json(const GameGraph& g, const Strategy& s);
Json model_to_json(const ProbModel& m);
ProbModel model_from_json(const Json& j);
ProbModel load_model_file(const std::string& path, const GameGraph& g);

Json grundy_to_json(const GameGraph& g, const GrundyData& gd);
Json edges_to_json(const std::vector<Edge>& edges);
Json switch_report_to_json(const SwitchabilityReport& r);
Json run_result_to_json(const GameGraph& g, const RunResult& r);

std::string read_file(const std::string& path);
/// Writes to a temporary sibling and renames it over path.
void write_file_atomic(const std::string& path, const std::string& content);
/// dump(2) plus a trailing newline.
std::string to_text(const Json& j);

}  // namespace coevo
