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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coevo/cli.hpp"
#include "coevo/games.hpp"
#include "coevo/grundy.hpp"
#include "coevo/harness.hpp"
#include "coevo/io.hpp"
#include "coevo/oracles.hpp"
#include "coevo/prob_model.hpp"
#include "coevo/switchability.hpp"
#include "coevo/umda.hpp"
#include "support/support.hpp"

using namespace coevo;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.clear();
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& text) {
    if (pass) detail += (detail.empty() ? "" : "; ") + text;
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

int cli(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "coevo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Outcome grundy_fixture() {
  Outcome o;
  std::string text;
  o.require(cli({"solve", "--fixture", "fig1"}, &text) == kExitOk, "solve exited nonzero");
  const Json j = Json::parse(text);
  o.require(j["h"] == Json::array({1, 0, 2, 1, 0}), "h = " + j["h"].dump());
  o.require(j["critical"] == Json::array({0, 2}), "critical = " + j["critical"].dump());

  std::vector<double> times;
  for (int i = 0; i < 201; ++i) {
    const auto t0 = Clock::now();
    cli({"solve", "--fixture", "fig1"}, &text);
    times.push_back(ms_since(t0));
  }
  std::nth_element(times.begin(), times.begin() + 100, times.end());
  const double med = times[100];
  o.require(med < 1.0, "median solve time " + fmt("%.3f", med) + " ms");
  o.note("h=(1,0,2,1,0), critical={v0,b}, median " + fmt("%.3f", med) + " ms");
  return o;
}

Outcome optimality_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  Rng rng = make_rng(1001);
  std::uint64_t strategies = 0, canonical = 0;
  for (int t = 0; t < 200; ++t) {
    const GameGraph g = testing::random_small_game(rng, 12, 3, 10000);
    const std::uint64_t count = *strategy_count(g);
    for (std::uint64_t r = 0; r < count; ++r) {
      const Strategy x = strategy_from_rank(g, r);
      if (is_optimal_exact(g, x) != is_optimal_by_playout(g, x)) {
        o.require(false, "disagreement on game " + std::to_string(t) + " strategy " +
                             std::to_string(r));
      }
      ++strategies;
    }
    const GrundyData gd = grundy_values(g);
    if (gd.h[g.root()] != 0) {
      ++canonical;
      o.require(is_optimal_by_playout(g, canonical_optimal_strategy(g, gd)),
                "canonical strategy not optimal on game " + std::to_string(t));
    }
  }
  const double ms = ms_since(t0);
  o.require(ms < 60000.0, "took " + fmt("%.0f", ms) + " ms");
  o.note(std::to_string(strategies) + " strategies, " + std::to_string(canonical) +
         " canonical checks, " + fmt("%.0f", ms) + " ms");
  return o;
}

Outcome restriction_properties() {
  Outcome o;
  Rng rng = make_rng(1002);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t size = 1 + uniform_below(rng, 8);
    const double gamma = uniform01(rng) / static_cast<double>(size);
    std::vector<double> p(size);
    double psum = 0.0;
    for (double& x : p) {
      const double u = uniform01(rng);
      x = u * u * u;
      psum += x;
    }
    if (psum == 0.0) continue;
    for (double& x : p) x /= psum;
    const auto q = restrict_distribution(p, gamma);
    double beta_minus = 0.0, sum = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
      beta_minus += std::max(gamma - p[i], 0.0);
      sum += q[i];
    }
    bool ok = std::abs(sum - 1.0) <= 1e-12;
    double pa = 0.0, qa = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
      ok = ok && q[i] >= gamma - 1e-12;
      if (p[i] >= gamma) {
        const double lower = (1.0 - beta_minus / (1.0 - gamma * static_cast<double>(size))) * p[i];
        ok = ok && q[i] >= lower - 1e-12 && q[i] <= p[i] + 1e-12;
      }
      ok = ok && q[i] <= std::max(gamma, p[i]) + 1e-12;
      if (uniform01(rng) < 0.5) {
        pa += p[i];
        qa += q[i];
      }
    }
    ok = ok && qa <= pa + gamma * static_cast<double>(size) + 1e-12;
    if (!ok) {
      o.require(false, "instance " + std::to_string(t) + " violates a property");
      break;
    }
  }
  o.note("10000 instances, |S| <= 8, slack 1e-12");
  return o;
}

Outcome selection_distribution_check() {
  Outcome o;
  const GameGraph g = fixture("fig1");
  const ProbModel uni = uniform_model(g, 0.0);
  const auto sel = selection_distribution(g, uni, 0);
  double sum = 0.0;
  for (double x : sel) sum += x;
  o.require(std::abs(sum - 1.0) <= 1e-12, "selection sums to " + fmt("%.17g", sum));

  Rng rng = make_rng(1003);
  const auto mc = monte_carlo_selection(g, uni, 0, 1000000, rng);
  const double tv = total_variation(mc.frequency, sel);
  o.require(tv < 0.005, "total variation " + fmt("%.5f", tv));

  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const GameGraph r = testing::random_dag(rng, 3 + t % 15, 4, 0.3);
    const ProbModel m =
        testing::random_model(rng, r, 0.5 / static_cast<double>(r.max_degree() + 1));
    for (VertexId u : r.interior()) {
      const auto s = selection_distribution(r, m, u);
      const auto rep = replicator_form(r, m, u);
      for (std::size_t i = 0; i < s.size(); ++i) {
        worst = std::max(worst, std::abs(rep.q_next[i] - s[i]));
      }
    }
  }
  o.require(worst <= 1e-12, "replicator mismatch " + fmt("%.3g", worst));
  o.note("TV " + fmt("%.5f", tv) + ", replicator max error " + fmt("%.3g", worst));
  return o;
}

Outcome switchability_fixtures() {
  Outcome o;
  const Fixture top = fixture_details("fig3_top");
  const Fixture bottom = fixture_details("fig3_bottom");
  const auto s_top = exact_switchability(top.graph, *top.marked);
  const auto s_bottom = exact_switchability(bottom.graph, *bottom.marked);
  o.require(s_top.exact == 1u, "top fixture value " + std::to_string(s_top.exact.value_or(99)));
  o.require(s_bottom.exact == 2u,
            "bottom fixture value " + std::to_string(s_bottom.exact.value_or(99)));

  const GameGraph nim = subtraction_nim(12, 3);
  for (VertexId v = 0; v < nim.size(); ++v) {
    std::vector<Edge> a;
    for (VertexId i = 1; i <= 2; ++i) {
      if (v + i < nim.size() && nim.has_edge(v + i, v)) a.push_back({v + i, v});
    }
    const EdgeSet set = make_edge_set(nim, a);
    // The root needs no switcher, so its set is empty with depth zero.
    o.require(is_switcher(nim, set, v) && depth(nim, set) <= 1 && (v == nim.root() || depth(nim, set) == 1),
              "A_v fails at v=" + std::to_string(v));
  }

  Rng rng = make_rng(1004);
  std::uint64_t verdicts = 0;
  for (int t = 0; t < 500; ++t) {
    const GameGraph g = testing::random_dag(rng, 2 + t % 8, 3, 0.4);
    const EdgeSet a = testing::random_edge_subset(rng, g, uniform01(rng));
    for (VertexId v = 0; v < g.size(); ++v) {
      ++verdicts;
      if (is_switcher(g, a, v) != testing::literal_is_switcher(g, a, v)) {
        o.require(false, "forced graph disagrees on graph " + std::to_string(t));
      }
    }
  }
  o.note("values 1 and 2, A_v on 12 vertices, " + std::to_string(verdicts) +
         " verdicts on 500 graphs");
  return o;
}

Outcome reach_lower_bound() {
  Outcome o;
  Rng rng = make_rng(1005);
  std::uint64_t checks = 0;
  for (const char* name : {"fig1", "fig2", "fig3_top", "fig3_bottom"}) {
    const GameGraph g = fixture(name);
    const auto prof = switchability_profile(g, ProfileMode::exact);
    for (int t = 0; t < 50; ++t) {
      const Rational gamma(1, static_cast<long>(g.max_degree() + 1 + uniform_below(rng, 20)));
      const auto m = testing::random_rational_model(rng, g, gamma);
      const auto reach = reach_probabilities(g, m);
      for (VertexId v = 0; v < g.size(); ++v) {
        Rational bound = 1;
        for (std::uint32_t i = 0; i < *prof.reports[v].exact; ++i) bound *= gamma;
        ++checks;
        if (!(reach[v] >= bound)) {
          o.require(false, std::string(name) + " vertex " + std::to_string(v));
        }
      }
    }
  }
  o.note(std::to_string(checks) + " exact comparisons");
  return o;
}

Outcome census() {
  Outcome o;
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t k = 1; k <= 6; ++k) {
      const GameGraph g = subtraction_nim(n, k);
      o.require(g.size() == static_cast<std::size_t>(n) && g.max_degree() <= static_cast<std::size_t>(k),
                "subtraction_nim(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
  }
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t k = 1; k <= m; ++k) {
      const GameGraph g = silver_dollar(m, k);
      o.require(g.size() == choose(m, k) && g.max_degree() <= static_cast<std::size_t>(m - k),
                "silver_dollar(" + std::to_string(m) + "," + std::to_string(k) + ")");
    }
  }
  for (std::int64_t m = 1; m <= 12; ++m) {
    const GameGraph g = turning_turtles(m);
    o.require(g.size() == (std::size_t{1} << m) &&
                  g.max_degree() <= static_cast<std::size_t>(m + m * (m - 1) / 2),
              "turning_turtles(" + std::to_string(m) + ")");
  }
  for (std::int64_t m = 1; m <= 5; ++m) {
    const GameGraph g = chomp(m);
    o.require(g.size() == choose(2 * m, m) - 1 && g.max_degree() <= static_cast<std::size_t>(m * m),
              "chomp(" + std::to_string(m) + ")");
  }
  o.note("nim n<=40, silver dollar m<=12, turtles m<=12, chomp m<=5");
  return o;
}

Outcome convergence() {
  Outcome o;
  ExperimentConfig cfg;
  cfg.game = {GameFamily::subtraction_nim, 16, 2, 0, {}, ""};
  cfg.replicates = 20;
  cfg.base_seed = 2026;
  cfg.max_generations = 10000;
  cfg.mu_grid = {256, 1024, 4096};
  const auto t0 = Clock::now();
  const auto rows = run_experiment(cfg);
  const double ms = ms_since(t0);

  std::vector<int> wins(3, 0);
  std::string failed_seeds;
  for (const auto& r : rows) {
    const std::size_t i = r.mu == 256 ? 0 : r.mu == 1024 ? 1 : 2;
    wins[i] += r.success;
    if (r.mu == 4096 && !r.success) failed_seeds += " " + std::to_string(r.seed);
  }
  o.require(rows.front().gamma == 1.0 / 640, "gamma " + fmt("%.17g", rows.front().gamma));
  o.require(wins[2] >= 18, "mu=4096 succeeded " + std::to_string(wins[2]) +
                                "/20, failed seeds:" + failed_seeds);
  // Pairwise comparisons over the three population sizes.
  const int monotone = (wins[0] <= wins[1]) + (wins[1] <= wins[2]) + (wins[0] <= wins[2]);
  o.require(monotone >= 2, "success not monotone in mu: " + std::to_string(wins[0]) + "/" +
                               std::to_string(wins[1]) + "/" + std::to_string(wins[2]));
  o.note("successes at mu 256/1024/4096: " + std::to_string(wins[0]) + "/" +
         std::to_string(wins[1]) + "/" + std::to_string(wins[2]) + " of 20, " +
         std::to_string(monotone) + "/3 monotone pairs, " + fmt("%.1f", ms / 1000.0) + " s");
  return o;
}

Outcome intransitivity() {
  Outcome o;
  const GameGraph g = subtraction_nim(7, 2);
  Rng rng = make_rng(1006);
  const auto t0 = Clock::now();
  const auto res = intransitivity_search(g, 0, rng);
  const double ms = ms_since(t0);
  o.require(res.exhaustive, "search was not exhaustive");
  o.require(res.witness.has_value(), "no three-cycle found");
  if (res.witness) {
    const auto& w = *res.witness;
    o.require(beats(g, w[0], w[1]) && beats(g, w[1], w[2]) && beats(g, w[2], w[0]),
              "witness is not a cycle");
    o.note("witness " + encode_nim_strategy(w[0], 7, 2) + " > " + encode_nim_strategy(w[1], 7, 2) +
           " > " + encode_nim_strategy(w[2], 7, 2));
  }
  o.require(ms < 1000.0, "took " + fmt("%.1f", ms) + " ms");
  o.note(std::to_string(res.cycles) + " ordered cycles, " + fmt("%.1f", ms) + " ms");
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::string dir = testing::scratch_dir();
  auto same = [&](const std::vector<std::string>& args, const std::string& stem) {
    std::vector<std::string> a = args, b = args;
    a.insert(a.end(), {"--out", dir + "/" + stem + "_a"});
    b.insert(b.end(), {"--out", dir + "/" + stem + "_b"});
    const bool ran = cli(a) == kExitOk && cli(b) == kExitOk;
    return ran && read_file(dir + "/" + stem + "_a") == read_file(dir + "/" + stem + "_b");
  };
  o.require(same({"run", "--family", "subtraction_nim", "--n", "16", "--k", "2", "--mu", "256",
                  "--seed", "11", "--trace-every", "1"},
                 "acc_run"),
            "run output differs");
  o.require(same({"sweep", "--family", "chomp", "--m", "2", "3", "--mu", "16", "64",
                  "--replicates", "3", "--seed", "12", "--max-gen", "500"},
                 "acc_sweep"),
            "sweep output differs");
  ExperimentConfig cfg;
  cfg.game = {GameFamily::turning_turtles, 0, 0, 3, {}, ""};
  cfg.mu_grid = {8, 32};
  cfg.replicates = 4;
  cfg.max_generations = 300;
  const std::string serial = to_csv(run_experiment(cfg));
  cfg.threads = 3;
  o.require(to_csv(run_experiment(cfg)) == serial, "threaded sweep differs from serial");
  o.note("run, sweep and threaded sweep byte-identical");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"grundy-fixture", grundy_fixture},
      {"optimality-oracle-equivalence", optimality_equivalence},
      {"restriction-properties", restriction_properties},
      {"selection-distribution", selection_distribution_check},
      {"switchability-fixtures", switchability_fixtures},
      {"reach-lower-bound", reach_lower_bound},
      {"game-census", census},
      {"empirical-convergence", convergence},
      {"intransitivity", intransitivity},
      {"determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << criteria.size() - failures << "/"
            << criteria.size() << std::endl;
  return failures ? 1 : 0;
}
