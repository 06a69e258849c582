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

#include <doctest.h>

#include <filesystem>

#include "coevo/error.hpp"
#include "coevo/games.hpp"
#include "coevo/harness.hpp"
#include "coevo/io.hpp"
#include "support/support.hpp"

using namespace coevo;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.game = {GameFamily::subtraction_nim, 10, 2, 0, {}, ""};
  cfg.mu_grid = {4, 16};
  cfg.replicates = 3;
  cfg.base_seed = 99;
  cfg.max_generations = 200;
  return cfg;
}

}  // namespace

TEST_CASE("run_experiment rows") {
  const ExperimentConfig cfg = small_config();
  const auto rows = run_experiment(cfg);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    CHECK(r.family == "subtraction_nim");
    CHECK(r.params == "n=10;k=2");
    CHECK(r.n == 10);
    CHECK(r.delta == 2);
    CHECK(r.mu == cfg.mu_grid[i / 3]);
    CHECK(r.replicate == i % 3);
    CHECK(r.seed == derive_seed(99, i % 3));
    CHECK(r.gamma == 1.0 / 400);
    CHECK(r.evaluations == r.mu * r.generations);
    CHECK(r.stop_rule == "exact");
    CHECK(r.s_mode == "exact");
    CHECK_FALSE(r.wall_ms.has_value());
  }
}

TEST_CASE("single forced game succeeds at once") {
  ExperimentConfig cfg;
  cfg.game = {GameFamily::subtraction_nim, 2, 1, 0, {}, ""};
  cfg.mu_grid = {1};
  const auto rows = run_experiment(cfg);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].success);
  CHECK(rows[0].generations == 1);
}

TEST_CASE("experiments are reproducible and schedule independent") {
  ExperimentConfig cfg = small_config();
  const std::string a = to_csv(run_experiment(cfg));
  const std::string b = to_csv(run_experiment(cfg));
  CHECK(a == b);
  cfg.threads = 3;
  CHECK(to_csv(run_experiment(cfg)) == a);
  cfg.base_seed = 100;
  CHECK(to_csv(run_experiment(cfg)) != a);
}

TEST_CASE("fixed gamma and timing") {
  ExperimentConfig cfg = small_config();
  cfg.gamma_rule = GammaRule::fixed;
  cfg.gamma_value = 0.125;
  cfg.record_time = true;
  for (const auto& r : run_experiment(cfg)) {
    CHECK(r.gamma == 0.125);
    CHECK(r.wall_ms.has_value());
  }
}

TEST_CASE("config validation") {
  ExperimentConfig cfg = small_config();
  cfg.mu_grid = {};
  CHECK_THROWS_AS(run_experiment(cfg), BadParams);
  cfg.mu_grid = {16, 4};
  CHECK_THROWS_AS(run_experiment(cfg), BadParams);
  cfg.mu_grid = {4};
  cfg.replicates = 0;
  CHECK_THROWS_AS(run_experiment(cfg), BadParams);
}

TEST_CASE("failed runs leave the finished rows on disk") {
  ExperimentConfig cfg = small_config();
  cfg.gamma_rule = GammaRule::fixed;
  cfg.gamma_value = 0.75;
  cfg.output_path = testing::scratch_dir() + "/partial.csv";
  std::filesystem::remove(cfg.output_path);
  CHECK_THROWS_AS(run_experiment(cfg), GammaTooLarge);
  REQUIRE(std::filesystem::exists(cfg.output_path));
  CHECK(parse_csv(read_file(cfg.output_path)).empty());
}

TEST_CASE("CSV round trip") {
  auto rows = run_experiment(small_config());
  rows[0].wall_ms = 12.5;
  rows[1].theorem_eval_budget = std::numeric_limits<double>::infinity();
  rows[2].gamma = 0.1;
  const std::string text = to_csv(rows);
  const auto back = parse_csv(text);
  CHECK(back == rows);
  CHECK(to_csv(back) == text);
  CHECK(text.substr(0, text.find('\n')) ==
        "family,params,n,delta,s_bar,s_mode,mu,gamma,seed,replicate,generations,evaluations,"
        "success,stop_rule,theorem_eval_budget,wall_ms");
  CHECK_THROWS_AS(parse_csv("nope\n"), ParseError);
  CHECK_THROWS_AS(parse_csv(csv_header() + "\na,b,c\n"), ParseError);
  CHECK_THROWS_AS(parse_csv(csv_header() + "\n" + to_csv_row(rows[0]).replace(0, 15, "x,y,z,")),
                  ParseError);
}

TEST_CASE("sweep columns follow the family formulas") {
  ExperimentConfig cfg;
  cfg.mu_grid = {8};
  cfg.max_generations = 50;
  cfg.s_mode = ProfileMode::bound;

  const auto nim = sweep_scaling({{GameFamily::subtraction_nim, 8, 2, 0, {}, ""},
                                  {GameFamily::subtraction_nim, 16, 2, 0, {}, ""},
                                  {GameFamily::subtraction_nim, 32, 2, 0, {}, ""},
                                  {GameFamily::subtraction_nim, 64, 2, 0, {}, ""}},
                                 cfg);
  REQUIRE(nim.records.size() == 4);
  const std::uint64_t ns[] = {8, 16, 32, 64};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(nim.records[i].n == ns[i]);
    CHECK(nim.records[i].delta == 2);
    CHECK(nim.records[i].s_mode == "bound");
  }

  const auto ch = sweep_scaling({{GameFamily::chomp, 0, 0, 2, {}, ""},
                                 {GameFamily::chomp, 0, 0, 3, {}, ""},
                                 {GameFamily::chomp, 0, 0, 4, {}, ""}},
                                cfg);
  CHECK(ch.records[0].n == 5);
  CHECK(ch.records[1].n == 19);
  CHECK(ch.records[2].n == 69);

  const auto tt = sweep_scaling({{GameFamily::turning_turtles, 0, 0, 3, {}, ""},
                                 {GameFamily::turning_turtles, 0, 0, 4, {}, ""},
                                 {GameFamily::turning_turtles, 0, 0, 5, {}, ""}},
                                cfg);
  const std::uint64_t tn[] = {8, 16, 32}, td[] = {6, 10, 15};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(tt.records[i].n == tn[i]);
    CHECK(tt.records[i].delta <= td[i]);
  }

  CHECK(nim.summary.size() == 4);
  CHECK(nim.plot.contains("series"));
  CHECK(nim.plot["xscale"] == "log");
  CHECK(nim.plot["series"].size() == 2);
  CHECK(nim.plot["series"][0]["x"].size() == 4);
  CHECK(summary_to_csv(nim.summary).find("success_rate") != std::string::npos);
}

TEST_CASE("intransitive triples in the small subtraction game") {
  const GameGraph g = subtraction_nim(7, 2);
  Rng rng = make_rng(61);
  const auto res = intransitivity_search(g, 0, rng);
  CHECK(res.exhaustive);
  CHECK(res.triples_checked == 32 * 31 * 30);
  CHECK(res.cycles == 234);
  REQUIRE(res.witness.has_value());
  const auto& w = *res.witness;
  CHECK(beats(g, w[0], w[1]));
  CHECK(beats(g, w[1], w[2]));
  CHECK(beats(g, w[2], w[0]));

  CHECK_FALSE(intransitivity_search(subtraction_nim(6, 1), 10, rng).witness.has_value());
  CHECK_FALSE(intransitivity_search(build_graph({{1}, {}}, 0), 10, rng).witness.has_value());

  // Sampling mode on a larger space still returns only genuine cycles.
  const GameGraph big = subtraction_nim(13, 2);
  const auto sampled = intransitivity_search(big, 20000, rng);
  CHECK_FALSE(sampled.exhaustive);
  if (sampled.witness) {
    const auto& s = *sampled.witness;
    CHECK(beats(big, s[0], s[1]));
    CHECK(beats(big, s[1], s[2]));
    CHECK(beats(big, s[2], s[0]));
  }
}

TEST_CASE("theorem gamma") {
  CHECK(theorem_gamma(16, 2) == 1.0 / 640);
  CHECK(theorem_gamma(7, 2) == 1.0 / 280);
  CHECK(spec_params({GameFamily::silver_dollar, 0, 2, 6, {2, 6}, ""}) == "m=6;k=2;start=2 6");
}
