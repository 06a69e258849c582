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

#include "coevo/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coevo/error.hpp"

namespace coevo {

namespace {

std::string vertex_name(const GameGraph& g, VertexId v) {
  return g.label(v).empty() ? std::to_string(v) : g.label(v);
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Json game_to_json(const GameGraph& g) {
  Json verts = Json::array();
  for (VertexId v = 0; v < g.size(); ++v) {
    Json jv = {{"id", v}, {"succ", std::vector<VertexId>(g.successors(v).begin(),
                                                         g.successors(v).end())}};
    if (!g.label(v).empty()) jv["label"] = g.label(v);
    verts.push_back(std::move(jv));
  }
  return Json{{"root", g.root()}, {"vertices", std::move(verts)}};
}

GameGraph game_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("root") || !j.contains("vertices")) {
      throw ParseError("game JSON needs \"root\" and \"vertices\"");
    }
    const auto& verts = j.at("vertices");
    if (!verts.is_array()) throw ParseError("\"vertices\" must be an array");
    const std::size_t n = verts.size();
    std::vector<std::vector<VertexId>> adj(n);
    std::vector<std::string> labels(n);
    std::vector<char> seen(n, 0);
    bool any_label = false;
    for (const auto& jv : verts) {
      const auto id = jv.at("id").get<std::int64_t>();
      if (id < 0 || static_cast<std::size_t>(id) >= n || seen[id]) {
        throw ParseError("vertex ids must be exactly 0.." + std::to_string(n - 1));
      }
      seen[id] = 1;
      for (const auto& s : jv.at("succ")) {
        const auto w = s.get<std::int64_t>();
        if (w < 0 || static_cast<std::size_t>(w) >= n) {
          throw BadEdge("successor " + std::to_string(w) + " of vertex " + std::to_string(id) +
                        " is out of range");
        }
        adj[id].push_back(static_cast<VertexId>(w));
      }
      if (jv.contains("label")) {
        labels[id] = jv.at("label").get<std::string>();
        any_label = true;
      }
    }
    const auto root = j.at("root").get<std::int64_t>();
    if (root < 0 || static_cast<std::size_t>(root) >= std::max<std::size_t>(n, 1)) {
      throw BadEdge("root " + std::to_string(root) + " is out of range");
    }
    if (!any_label) labels.clear();
    return build_graph(adj, static_cast<VertexId>(root), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("game JSON: ") + e.what());
  }
}

GameGraph load_game_file(const std::string& path) {
  const std::string text = read_file(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return game_from_json(j);
}

std::string game_to_dot(const GameGraph& g, std::optional<VertexId> marked,
                        const std::vector<Edge>& highlighted) {
  std::ostringstream out;
  out << "digraph game {\n";
  for (VertexId v = 0; v < g.size(); ++v) {
    out << "  " << v << " [label=\"" << dot_escape(vertex_name(g, v)) << "\"";
    if (v == g.root()) out << ", shape=doublecircle";
    if (marked && *marked == v) out << ", style=filled, fillcolor=lightblue";
    out << "];\n";
  }
  for (VertexId u = 0; u < g.size(); ++u) {
    for (VertexId w : g.successors(u)) {
      out << "  " << u << " -> " << w;
      if (std::find(highlighted.begin(), highlighted.end(), Edge{u, w}) != highlighted.end()) {
        out << " [color=blue, penwidth=2]";
      }
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

Json strategy_to_json(const GameGraph& g, const Strategy& s) {
  Json moves = Json::object();
  for (VertexId v : g.interior()) moves[std::to_string(v)] = s.move(g, v);
  return Json{{"indices", s.indices()}, {"moves", std::move(moves)}};
}

Json model_to_json(const ProbModel& m) {
  return Json{{"gamma", m.gamma()}, {"dists", m.dists()}};
}

ProbModel model_from_json(const Json& j) {
  try {
    const Json& src = j.contains("result") ? j.at("result").at("final_model") : j;
    return ProbModel(src.at("dists").get<std::vector<std::vector<double>>>(),
                     src.at("gamma").get<double>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("model JSON: ") + e.what());
  }
}

ProbModel load_model_file(const std::string& path, const GameGraph& g) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  ProbModel m = model_from_json(j);
  if (m.size() != g.size()) throw ParseError(path + ": model does not match the game's size");
  for (VertexId v = 0; v < g.size(); ++v) {
    if (m.dist(v).size() != g.out_degree(v)) {
      throw ParseError(path + ": distribution at vertex " + std::to_string(v) +
                       " does not match its out-degree");
    }
  }
  return m;
}

Json grundy_to_json(const GameGraph& g, const GrundyData& gd) {
  Json labels = Json::array();
  if (g.has_labels()) {
    for (VertexId v = 0; v < g.size(); ++v) labels.push_back(g.label(v));
  }
  Json j{{"n", g.size()},
         {"root", g.root()},
         {"h", gd.h},
         {"zero_set", gd.zero_set},
         {"critical", gd.critical}};
  if (g.has_labels()) j["labels"] = std::move(labels);
  return j;
}

Json edges_to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.from, e.to});
  return out;
}

Json switch_report_to_json(const SwitchabilityReport& r) {
  Json j{{"vertex", r.vertex},
         {"exact", r.exact ? Json(*r.exact) : Json(nullptr)},
         {"upper_bound", r.upper_bound},
         {"witness", r.witness ? edges_to_json(*r.witness) : Json(nullptr)},
         {"method", switch_method_name(r.method)}};
  return j;
}

Json run_result_to_json(const GameGraph& g, const RunResult& r) {
  Json trace = Json::array();
  for (const auto& snap : r.trace) {
    trace.push_back({{"generation", snap.generation}, {"model", model_to_json(snap.model)}});
  }
  return Json{{"generations_used", r.generations_used},
              {"evaluations", r.evaluations},
              {"succeeded", r.succeeded},
              {"stop_rule", stop_rule_name(r.stop_rule)},
              {"optimal_witness",
               r.optimal_witness ? strategy_to_json(g, *r.optimal_witness) : Json(nullptr)},
              {"final_model", model_to_json(r.final_model)},
              {"trace", std::move(trace)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot rename onto " + path + ": " + ec.message());
  }
}

std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace coevo
