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

#include "coevo/cli.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coevo/error.hpp"
#include "coevo/games.hpp"
#include "coevo/grundy.hpp"
#include "coevo/harness.hpp"
#include "coevo/io.hpp"
#include "coevo/oracles.hpp"
#include "coevo/switchability.hpp"
#include "coevo/theorem.hpp"
#include "coevo/umda.hpp"

namespace coevo {

namespace {

// Where a subcommand gets its game from: --game (a JSON file or a spec such
// as "chomp(3)"), --fixture, or --family with its parameters.
struct GameSource {
  std::string game;
  std::string fixture;
  std::string family;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::vector<std::int64_t> start;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--game", game, "game JSON file, or a spec like subtraction_nim(16,2)");
    cmd->add_option("--fixture", fixture, "named fixture (fig1, fig2, fig3_top, ...)");
    cmd->add_option("--family", family,
                    "subtraction_nim | silver_dollar | turning_turtles | chomp");
    cmd->add_option("--n", n, "subtraction_nim heap size bound");
    cmd->add_option("--k", k, "subtraction_nim move bound / silver_dollar coin count");
    cmd->add_option("--m", m, "board size");
    cmd->add_option("--start", start, "silver_dollar starting squares");
  }

  GameSpec spec() const {
    const int chosen = !game.empty() + !fixture.empty() + !family.empty();
    if (chosen != 1) throw CLI::ValidationError("exactly one of --game, --fixture, --family");
    GameSpec s;
    if (!fixture.empty()) {
      s.family = GameFamily::fixture;
      s.name = fixture;
    } else if (!family.empty()) {
      s.family = parse_family(family);
      s.n = n;
      s.k = k;
      s.m = m;
      s.start = start;
      if (s.family == GameFamily::fixture || s.family == GameFamily::custom) {
        throw CLI::ValidationError("use --fixture or --game for " + family);
      }
    } else if (std::filesystem::exists(game)) {
      s.family = GameFamily::custom;
      s.name = game;
    } else {
      s = parse_spec_string(game);
    }
    return s;
  }

  static GameSpec parse_spec_string(const std::string& text) {
    const auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')') {
      throw CLI::ValidationError("--game: no such file and not a spec like chomp(3): " + text);
    }
    GameSpec s;
    s.family = parse_family(text.substr(0, open));
    const std::string inner = text.substr(open + 1, text.size() - open - 2);
    if (s.family == GameFamily::fixture || s.family == GameFamily::custom) {
      s.name = inner;
      return s;
    }
    std::vector<std::int64_t> args;
    std::size_t pos = 0;
    while (pos <= inner.size()) {
      const auto comma = inner.find(',', pos);
      const std::string part =
          inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        args.push_back(std::stoll(part));
      } catch (const std::logic_error&) {
        throw CLI::ValidationError("--game: bad parameter '" + part + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    const std::size_t want = s.family == GameFamily::subtraction_nim ||
                                     s.family == GameFamily::silver_dollar
                                 ? 2
                                 : 1;
    if (args.size() != want) throw CLI::ValidationError("--game: wrong parameter count");
    if (s.family == GameFamily::subtraction_nim) {
      s.n = args[0];
      s.k = args[1];
    } else if (s.family == GameFamily::silver_dollar) {
      s.m = args[0];
      s.k = args[1];
    } else {
      s.m = args[0];
    }
    return s;
  }
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file_atomic(path, text);
  }
}

Json game_summary(const GameSpec& spec, const GameGraph& instance, const GameGraph& played) {
  return Json{{"spec", describe(spec)},
              {"n", instance.size()},
              {"delta", instance.max_degree()},
              {"edges", instance.edge_count()},
              {"augmented", played.size() != instance.size()}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coevolution of strategies for impartial games", "coevo"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");

  // gen
  GameSource gen_src;
  std::string gen_out, gen_dot;
  auto* gen = app.add_subcommand("gen", "materialise a game as JSON (and optionally DOT)");
  gen_src.add_to(gen);
  gen->add_option("--out", gen_out, "output JSON path (stdout if omitted)");
  gen->add_option("--dot", gen_dot, "also write a Graphviz file here");

  // solve
  GameSource solve_src;
  std::string solve_out, solve_rule = "literal";
  auto* solve = app.add_subcommand("solve", "Grundy values, zero set, critical positions");
  solve_src.add_to(solve);
  solve->add_option("--rule", solve_rule, "critical-position rule: literal | multi_choice")
      ->check(CLI::IsMember({"literal", "multi_choice"}));
  solve->add_option("--out", solve_out, "output JSON path");

  // run
  GameSource run_src;
  std::uint64_t run_mu = 0, run_max_gen = 10000, run_seed = 0, run_trace = 0;
  double run_gamma = -1.0;
  bool run_gamma_theorem = false;
  std::string run_stop = "exact", run_out;
  auto* run = app.add_subcommand("run", "one UMDA run");
  run_src.add_to(run);
  run->add_option("--mu", run_mu, "population size")->required()->check(CLI::PositiveNumber);
  auto* gamma_opt = run->add_option("--gamma", run_gamma, "fixed lower bound on probabilities");
  run->add_flag("--gamma-theorem", run_gamma_theorem, "gamma = 1/(20 delta n) (default)")
      ->excludes(gamma_opt);
  run->add_option("--max-gen", run_max_gen, "generation cap");
  run->add_option("--seed", run_seed, "RNG seed");
  run->add_option("--stop", run_stop, "exact | sufficient | cap")
      ->check(CLI::IsMember({"exact", "sufficient", "cap"}));
  run->add_option("--trace-every", run_trace, "model snapshot period (0 = off)");
  run->add_option("--out", run_out, "output JSON path");

  // sweep
  std::string sw_family, sw_out, sw_plot, sw_summary, sw_stop = "exact", sw_smode = "hybrid";
  std::vector<std::int64_t> sw_n, sw_m;
  std::vector<std::string> sw_fixtures;
  std::int64_t sw_k = 0;
  std::vector<std::uint64_t> sw_mu;
  std::uint64_t sw_reps = 1, sw_seed = 0, sw_max_gen = 10000;
  std::size_t sw_edge_limit = kDefaultEdgeLimit;
  double sw_gamma = -1.0, sw_K = 1.0, sw_C = 1.0;
  unsigned sw_threads = 1;
  bool sw_timing = false;
  auto* sweep = app.add_subcommand("sweep", "replicated runs over instances and mu values");
  sweep->add_option("--family", sw_family, "game family")->required();
  sweep->add_option("--n", sw_n, "subtraction_nim sizes");
  sweep->add_option("--k", sw_k, "subtraction_nim / silver_dollar k");
  sweep->add_option("--m", sw_m, "board sizes");
  sweep->add_option("--fixture", sw_fixtures, "fixture names (family fixture)");
  sweep->add_option("--mu", sw_mu, "population sizes, ascending")->required();
  sweep->add_option("--replicates", sw_reps, "replicates per instance and mu");
  sweep->add_option("--seed", sw_seed, "base seed");
  sweep->add_option("--max-gen", sw_max_gen, "generation cap");
  sweep->add_option("--stop", sw_stop, "exact | sufficient | cap")
      ->check(CLI::IsMember({"exact", "sufficient", "cap"}));
  sweep->add_option("--gamma", sw_gamma, "fixed gamma (default: 1/(20 delta n))");
  sweep->add_option("--s-mode", sw_smode, "exact | bound | hybrid")
      ->check(CLI::IsMember({"exact", "bound", "hybrid"}));
  sweep->add_option("--edge-limit", sw_edge_limit, "largest game for exact switchability");
  sweep->add_option("--K", sw_K, "budget constant K");
  sweep->add_option("--C", sw_C, "budget constant C");
  sweep->add_option("--threads", sw_threads, "worker threads");
  sweep->add_flag("--timing", sw_timing, "fill the wall_ms column");
  sweep->add_option("--out", sw_out, "CSV path");
  sweep->add_option("--plot", sw_plot, "plot description JSON path");
  sweep->add_option("--summary", sw_summary, "summary CSV path");

  // switch
  GameSource sw_src;
  std::int64_t switch_vertex = -1;
  bool switch_all = false;
  std::string switch_mode = "hybrid", switch_out, switch_dot;
  std::size_t switch_edge_limit = kDefaultEdgeLimit;
  auto* sw = app.add_subcommand("switch", "switchability of a vertex");
  sw_src.add_to(sw);
  auto* vertex_opt = sw->add_option("--vertex", switch_vertex, "vertex id");
  sw->add_flag("--all", switch_all, "report every vertex")->excludes(vertex_opt);
  sw->add_option("--mode", switch_mode, "exact | bound | hybrid")
      ->check(CLI::IsMember({"exact", "bound", "hybrid"}));
  sw->add_option("--edge-limit", switch_edge_limit, "largest game for exact search");
  sw->add_option("--dot", switch_dot, "Graphviz file with the witness highlighted");
  sw->add_option("--out", switch_out, "output JSON path");

  // analyze
  GameSource an_src;
  std::string an_model, an_out;
  double an_gamma = 0.0;
  auto* analyze = app.add_subcommand("analyze", "reach, win and selection probabilities");
  an_src.add_to(analyze);
  analyze->add_option("--model", an_model, "model or run JSON (uniform if omitted)");
  analyze->add_option("--gamma", an_gamma, "gamma of the uniform model");
  analyze->add_option("--out", an_out, "output JSON path");

  // intrans
  GameSource in_src;
  std::uint64_t in_triples = 100000, in_seed = 0;
  std::string in_out;
  auto* intrans = app.add_subcommand("intrans", "search for an intransitive strategy triple");
  in_src.add_to(intrans);
  intrans->add_option("--triples", in_triples, "random triples when not exhaustive");
  intrans->add_option("--seed", in_seed, "RNG seed");
  intrans->add_option("--out", in_out, "output JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const GameSpec spec = gen_src.spec();
      const GameGraph g = make_game(spec);
      emit(gen_out, to_text(game_to_json(g)), out);
      if (!gen_dot.empty()) {
        std::optional<VertexId> marked;
        std::vector<Edge> highlighted;
        if (spec.family == GameFamily::fixture) {
          const Fixture f = fixture_details(spec.name);
          marked = f.marked;
          highlighted = f.highlighted;
        }
        write_file_atomic(gen_dot, game_to_dot(g, marked, highlighted));
      }
    } else if (solve->parsed()) {
      const GameSpec spec = solve_src.spec();
      const GameGraph g = make_game(spec);
      const auto rule =
          solve_rule == "literal" ? CriticalRule::literal : CriticalRule::multi_choice;
      const GrundyData gd = grundy_values(g, rule);
      Json j = grundy_to_json(g, gd);
      j["spec"] = describe(spec);
      j["rule"] = solve_rule;
      j["first_player_wins"] = gd.first_player_wins(g);
      j["canonical_strategy"] = gd.first_player_wins(g)
                                    ? strategy_to_json(g, canonical_optimal_strategy(g, gd))
                                    : Json(nullptr);
      emit(solve_out, to_text(j), out);
    } else if (run->parsed()) {
      const GameSpec spec = run_src.spec();
      const GameGraph instance = make_game(spec);
      const GameGraph g = ensure_first_player_win(instance);
      UmdaConfig cfg;
      cfg.mu = run_mu;
      cfg.gamma = run_gamma >= 0.0 ? run_gamma
                                   : theorem_gamma(instance.size(), instance.max_degree());
      cfg.max_generations = run_max_gen;
      cfg.seed = run_seed;
      cfg.stop_rule = parse_stop_rule(run_stop);
      cfg.trace_every = run_trace;
      const RunResult res = run_umda(g, cfg);
      Json j{{"config",
              {{"game", describe(spec)},
               {"mu", cfg.mu},
               {"gamma", cfg.gamma},
               {"gamma_rule", run_gamma >= 0.0 ? "fixed" : "theorem"},
               {"max_generations", cfg.max_generations},
               {"seed", cfg.seed},
               {"stop_rule", stop_rule_name(cfg.stop_rule)},
               {"trace_every", cfg.trace_every}}},
             {"game", game_summary(spec, instance, g)},
             {"result", run_result_to_json(g, res)}};
      emit(run_out, to_text(j), out);
    } else if (sweep->parsed()) {
      std::vector<GameSpec> instances;
      const GameFamily fam = parse_family(sw_family);
      auto need = [](bool ok, const char* what) {
        if (!ok) throw CLI::ValidationError(what);
      };
      switch (fam) {
        case GameFamily::subtraction_nim:
          need(!sw_n.empty() && sw_k > 0, "subtraction_nim sweep needs --n and --k");
          for (auto n : sw_n) instances.push_back({fam, n, sw_k, 0, {}, ""});
          break;
        case GameFamily::silver_dollar:
          need(!sw_m.empty() && sw_k > 0, "silver_dollar sweep needs --m and --k");
          for (auto m : sw_m) instances.push_back({fam, 0, sw_k, m, {}, ""});
          break;
        case GameFamily::turning_turtles:
        case GameFamily::chomp:
          need(!sw_m.empty(), "this sweep needs --m");
          for (auto m : sw_m) instances.push_back({fam, 0, 0, m, {}, ""});
          break;
        case GameFamily::fixture:
          need(!sw_fixtures.empty(), "fixture sweep needs --fixture");
          for (const auto& f : sw_fixtures) instances.push_back({fam, 0, 0, 0, {}, f});
          break;
        case GameFamily::custom: throw CLI::ValidationError("custom games cannot be swept");
      }
      ExperimentConfig cfg;
      cfg.mu_grid = sw_mu;
      cfg.gamma_rule = sw_gamma >= 0.0 ? GammaRule::fixed : GammaRule::theorem;
      cfg.gamma_value = std::max(sw_gamma, 0.0);
      cfg.replicates = sw_reps;
      cfg.base_seed = sw_seed;
      cfg.max_generations = sw_max_gen;
      cfg.stop_rule = parse_stop_rule(sw_stop);
      cfg.s_mode = parse_profile_mode(sw_smode);
      cfg.edge_limit = sw_edge_limit;
      cfg.K = sw_K;
      cfg.C = sw_C;
      cfg.record_time = sw_timing;
      cfg.threads = sw_threads;
      cfg.output_path = sw_out;
      const SweepResult res = sweep_scaling(instances, cfg);
      if (sw_out.empty()) out << to_csv(res.records);
      if (!sw_plot.empty()) write_file_atomic(sw_plot, to_text(res.plot));
      if (!sw_summary.empty()) write_file_atomic(sw_summary, summary_to_csv(res.summary));
    } else if (sw->parsed()) {
      const GameSpec spec = sw_src.spec();
      const GameGraph g = make_game(spec);
      const ProfileMode mode = parse_profile_mode(switch_mode);
      if (switch_all) {
        const SwitchabilityProfile prof = switchability_profile(g, mode, switch_edge_limit);
        Json reports = Json::array();
        for (const auto& r : prof.reports) reports.push_back(switch_report_to_json(r));
        emit(switch_out,
             to_text(Json{{"spec", describe(spec)},
                          {"mode", profile_mode_name(mode)},
                          {"all_exact", prof.all_exact},
                          {"s_bar", prof.s_bar},
                          {"s_hat", prof.s_hat},
                          {"reports", std::move(reports)}}),
             out);
      } else {
        if (switch_vertex < 0) throw CLI::ValidationError("--vertex or --all is required");
        const auto v = static_cast<VertexId>(switch_vertex);
        SwitchabilityReport r;
        const bool exact = mode == ProfileMode::exact ||
                           (mode == ProfileMode::hybrid && g.edge_count() <= switch_edge_limit);
        if (exact) {
          r = exact_switchability(g, v, switch_edge_limit);
        } else {
          r.vertex = v;
          r.upper_bound = upper_bound_switchability(g, v);
          r.witness = shortest_path_switcher(g, v);
        }
        Json j = switch_report_to_json(r);
        j["spec"] = describe(spec);
        j["mode"] = profile_mode_name(mode);
        emit(switch_out, to_text(j), out);
        if (!switch_dot.empty()) {
          write_file_atomic(switch_dot, game_to_dot(g, v, r.witness ? *r.witness : EdgeSet{}));
        }
      }
    } else if (analyze->parsed()) {
      const GameSpec spec = an_src.spec();
      const GameGraph g = make_game(spec);
      const ProbModel model =
          an_model.empty() ? uniform_model(g, an_gamma) : load_model_file(an_model, g);
      const ModelAnalysis a = analyze_model(g, model);
      Json sel = Json::object();
      for (VertexId u : g.interior()) sel[std::to_string(u)] = a.selection[u];
      emit(an_out,
           to_text(Json{{"spec", describe(spec)},
                        {"gamma", model.gamma()},
                        {"reach", a.reach},
                        {"win", a.win},
                        {"selection", std::move(sel)}}),
           out);
    } else if (intrans->parsed()) {
      const GameSpec spec = in_src.spec();
      const GameGraph g = make_game(spec);
      Rng rng = make_rng(in_seed);
      const IntransitivityResult res = intransitivity_search(g, in_triples, rng);
      Json witness = nullptr;
      if (res.witness) {
        witness = Json::array();
        for (const Strategy& s : *res.witness) {
          Json js = strategy_to_json(g, s);
          if (spec.family == GameFamily::subtraction_nim && spec.k <= 9) {
            js["string"] = encode_nim_strategy(s, spec.n, spec.k);
          }
          witness.push_back(std::move(js));
        }
      }
      Json j{{"spec", describe(spec)},
             {"exhaustive", res.exhaustive},
             {"triples_checked", res.triples_checked},
             {"witness", std::move(witness)}};
      if (res.exhaustive) j["cycles"] = res.cycles;
      emit(in_out, to_text(j), out);
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace coevo
