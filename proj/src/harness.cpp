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

#include "coevo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "coevo/error.hpp"
#include "coevo/grundy.hpp"
#include "coevo/theorem.hpp"

namespace coevo {

namespace {

constexpr const char* kColumns[] = {
    "family", "params", "n",           "delta",       "s_bar",    "s_mode",
    "mu",     "gamma",  "seed",        "replicate",   "generations", "evaluations",
    "success", "stop_rule", "theorem_eval_budget", "wall_ms"};
constexpr std::size_t kColumnCount = std::size(kColumns);

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  const double x = std::stod(s, &used);
  if (used != s.size()) throw ParseError("bad number '" + s + "'");
  return x;
}

std::uint64_t parse_u64(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("bad integer '" + s + "'");
  }
  return std::stoull(s);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double median(std::vector<double> xs) {
  if (xs.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : (xs[mid - 1] + xs[mid]) / 2.0;
}

void flush_partial(const ExperimentConfig& cfg, const std::vector<ExperimentRecord>& rows,
                   const std::vector<char>& done) {
  if (cfg.output_path.empty()) return;
  std::vector<ExperimentRecord> finished;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (done[i]) finished.push_back(rows[i]);
  }
  write_file_atomic(cfg.output_path, to_csv(finished));
}

}  // namespace

std::string spec_params(const GameSpec& spec) {
  switch (spec.family) {
    case GameFamily::subtraction_nim:
      return "n=" + std::to_string(spec.n) + ";k=" + std::to_string(spec.k);
    case GameFamily::silver_dollar: {
      std::string s = "m=" + std::to_string(spec.m) + ";k=" + std::to_string(spec.k);
      if (!spec.start.empty()) {
        s += ";start=";
        for (std::size_t i = 0; i < spec.start.size(); ++i) {
          if (i) s += ' ';
          s += std::to_string(spec.start[i]);
        }
      }
      return s;
    }
    case GameFamily::turning_turtles:
    case GameFamily::chomp: return "m=" + std::to_string(spec.m);
    case GameFamily::fixture: return "name=" + spec.name;
    case GameFamily::custom: return "file=" + spec.name;
  }
  return "";
}

double theorem_gamma(std::uint64_t n, std::uint64_t delta) {
  return 1.0 / (20.0 * static_cast<double>(std::max<std::uint64_t>(delta, 1)) *
                static_cast<double>(n));
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.mu_grid.empty()) throw BadParams("mu grid must not be empty");
  if (!std::is_sorted(cfg.mu_grid.begin(), cfg.mu_grid.end())) {
    throw BadParams("mu grid must be ascending");
  }
  if (cfg.mu_grid.front() < 1) throw BadParams("mu must be at least 1");
  if (cfg.replicates < 1) throw BadParams("replicates must be at least 1");
  if (cfg.gamma_rule == GammaRule::fixed && !(cfg.gamma_value >= 0.0)) {
    throw BadParams("gamma must be non-negative");
  }
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const GameGraph instance = make_game(cfg.game);
  const GameGraph g = ensure_first_player_win(instance);
  const GrundyData gd = grundy_values(g);
  const SwitchabilityProfile prof = switchability_profile(g, gd, cfg.s_mode, cfg.edge_limit);
  const TheoremParameters tp = theorem_parameters(g, gd, prof.values(), cfg.K, cfg.C);

  ExperimentRecord base;
  base.family = std::string(family_name(cfg.game.family));
  base.params = spec_params(cfg.game);
  base.n = instance.size();
  base.delta = instance.max_degree();
  base.s_bar = prof.s_bar;
  base.s_mode = prof.all_exact ? "exact" : "bound";
  base.gamma = cfg.gamma_rule == GammaRule::theorem ? theorem_gamma(base.n, base.delta)
                                                    : cfg.gamma_value;
  base.stop_rule = std::string(stop_rule_name(cfg.stop_rule));
  base.theorem_eval_budget = tp.corollary_eval_budget ? tp.corollary_eval_budget->value : 0.0;

  const std::size_t total = cfg.mu_grid.size() * cfg.replicates;
  std::vector<ExperimentRecord> rows(total, base);
  std::vector<char> done(total, 0);

  auto run_one = [&](std::size_t job) {
    ExperimentRecord& rec = rows[job];
    rec.mu = cfg.mu_grid[job / cfg.replicates];
    rec.replicate = job % cfg.replicates;
    rec.seed = derive_seed(cfg.base_seed, rec.replicate);
    UmdaConfig uc;
    uc.mu = rec.mu;
    uc.gamma = rec.gamma;
    uc.max_generations = cfg.max_generations;
    uc.seed = rec.seed;
    uc.stop_rule = cfg.stop_rule;
    const auto t0 = std::chrono::steady_clock::now();
    const RunResult res = run_umda(g, uc);
    const auto t1 = std::chrono::steady_clock::now();
    rec.generations = res.generations_used;
    rec.evaluations = res.evaluations;
    rec.success = res.succeeded;
    if (cfg.record_time) {
      rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
  };

  std::exception_ptr failure;
  const unsigned threads = std::max(1u, cfg.threads);
  if (threads == 1) {
    try {
      for (std::size_t job = 0; job < total; ++job) {
        run_one(job);
        done[job] = 1;
      }
    } catch (...) {
      failure = std::current_exception();
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t job; (job = next.fetch_add(1)) < total;) {
          try {
            run_one(job);
            done[job] = 1;
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = total;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  if (failure) {
    flush_partial(cfg, rows, done);
    std::rethrow_exception(failure);
  }
  if (!cfg.output_path.empty()) write_file_atomic(cfg.output_path, to_csv(rows));
  return rows;
}

std::string csv_header() {
  std::string s;
  for (std::size_t i = 0; i < kColumnCount; ++i) {
    if (i) s += ',';
    s += kColumns[i];
  }
  return s;
}

std::string to_csv_row(const ExperimentRecord& r) {
  std::ostringstream out;
  out << r.family << ',' << r.params << ',' << r.n << ',' << r.delta << ',' << r.s_bar << ','
      << r.s_mode << ',' << r.mu << ',' << format_double(r.gamma) << ',' << r.seed << ','
      << r.replicate << ',' << r.generations << ',' << r.evaluations << ','
      << (r.success ? 1 : 0) << ',' << r.stop_rule << ',' << format_double(r.theorem_eval_budget)
      << ',' << (r.wall_ms ? format_double(*r.wall_ms) : "");
  return out.str();
}

std::string to_csv(const std::vector<ExperimentRecord>& records) {
  std::string out = csv_header() + "\n";
  for (const auto& r : records) out += to_csv_row(r) + "\n";
  return out;
}

std::vector<ExperimentRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != csv_header()) throw ParseError("missing CSV header");
  std::vector<ExperimentRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != kColumnCount) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(kColumnCount) + " fields");
    }
    try {
      ExperimentRecord r;
      r.family = f[0];
      r.params = f[1];
      r.n = parse_u64(f[2]);
      r.delta = parse_u64(f[3]);
      r.s_bar = static_cast<std::uint32_t>(parse_u64(f[4]));
      r.s_mode = f[5];
      r.mu = parse_u64(f[6]);
      r.gamma = parse_double(f[7]);
      r.seed = parse_u64(f[8]);
      r.replicate = parse_u64(f[9]);
      r.generations = parse_u64(f[10]);
      r.evaluations = parse_u64(f[11]);
      if (f[12] != "0" && f[12] != "1") throw ParseError("success must be 0 or 1");
      r.success = f[12] == "1";
      r.stop_rule = f[13];
      r.theorem_eval_budget = parse_double(f[14]);
      if (!f[15].empty()) r.wall_ms = parse_double(f[15]);
      out.push_back(std::move(r));
    } catch (const std::logic_error& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

SweepResult sweep_scaling(const std::vector<GameSpec>& instances,
                          const ExperimentConfig& cfg_template) {
  SweepResult result;
  std::map<std::uint64_t, Json> median_series;  // keyed by mu
  Json budget_x = Json::array();
  Json budget_y = Json::array();

  for (const GameSpec& spec : instances) {
    ExperimentConfig cfg = cfg_template;
    cfg.game = spec;
    cfg.output_path.clear();
    std::vector<ExperimentRecord> recs;
    try {
      recs = run_experiment(cfg);
    } catch (...) {
      if (!cfg_template.output_path.empty()) {
        write_file_atomic(cfg_template.output_path, to_csv(result.records));
      }
      throw;
    }
    for (std::uint64_t mu : cfg.mu_grid) {
      SweepSummaryRow row;
      std::vector<double> evals;
      std::uint64_t runs = 0;
      for (const auto& r : recs) {
        if (r.mu != mu) continue;
        row.params = r.params;
        row.n = r.n;
        row.delta = r.delta;
        row.s_bar = r.s_bar;
        row.theorem_eval_budget = r.theorem_eval_budget;
        ++runs;
        if (r.success) evals.push_back(static_cast<double>(r.evaluations));
      }
      row.mu = mu;
      row.success_rate = runs ? static_cast<double>(evals.size()) / static_cast<double>(runs) : 0;
      row.median_evaluations = median(evals);
      auto& series = median_series[mu];
      if (series.is_null()) series = Json{{"x", Json::array()}, {"y", Json::array()}};
      series["x"].push_back(row.n);
      series["y"].push_back(std::isnan(row.median_evaluations) ? Json(nullptr)
                                                              : Json(row.median_evaluations));
      result.summary.push_back(row);
    }
    budget_x.push_back(recs.front().n);
    budget_y.push_back(std::isinf(recs.front().theorem_eval_budget)
                           ? Json(nullptr)
                           : Json(recs.front().theorem_eval_budget));
    result.records.insert(result.records.end(), recs.begin(), recs.end());
  }

  Json series = Json::array();
  for (auto& [mu, s] : median_series) {
    series.push_back({{"name", "median evaluations, mu=" + std::to_string(mu)},
                      {"x", s["x"]},
                      {"y", s["y"]}});
  }
  series.push_back({{"name", "theorem-shaped budget (C=" + format_double(cfg_template.C) +
                                 ", K=" + format_double(cfg_template.K) + ")"},
                    {"x", budget_x},
                    {"y", budget_y}});
  result.plot = {{"series", series},
                 {"xlabel", "positions n"},
                 {"ylabel", "evaluations"},
                 {"xscale", "log"},
                 {"yscale", "log"}};
  if (!cfg_template.output_path.empty()) {
    write_file_atomic(cfg_template.output_path, to_csv(result.records));
  }
  return result;
}

std::string summary_to_csv(const std::vector<SweepSummaryRow>& rows) {
  std::string out = "params,n,delta,s_bar,mu,success_rate,median_evaluations,theorem_eval_budget\n";
  for (const auto& r : rows) {
    out += r.params + ',' + std::to_string(r.n) + ',' + std::to_string(r.delta) + ',' +
           std::to_string(r.s_bar) + ',' + std::to_string(r.mu) + ',' +
           format_double(r.success_rate) + ',' + format_double(r.median_evaluations) + ',' +
           format_double(r.theorem_eval_budget) + '\n';
  }
  return out;
}

bool beats(const GameGraph& g, const Strategy& x, const Strategy& y) {
  return play_winner(g, x, y) == 1 && play_winner(g, y, x) == -1;
}

IntransitivityResult intransitivity_search(const GameGraph& g, std::uint64_t triples, Rng& rng) {
  IntransitivityResult res;
  const auto count = strategy_count(g);
  if (count && *count <= kExhaustiveIntransitivityLimit) {
    res.exhaustive = true;
    const std::size_t m = *count;
    std::vector<Strategy> all;
    for (std::uint64_t r = 0; r < m; ++r) all.push_back(strategy_from_rank(g, r));
    std::vector<char> b(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) b[i * m + j] = i != j && beats(g, all[i], all[j]);
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
          if (i == j || j == k || i == k) continue;
          ++res.triples_checked;
          if (b[i * m + j] && b[j * m + k] && b[k * m + i]) {
            ++res.cycles;
            if (!res.witness) res.witness = std::array<Strategy, 3>{all[i], all[j], all[k]};
          }
        }
      }
    }
    return res;
  }

  const std::uint64_t space = count ? *count : 0;
  auto draw = [&] {
    if (space) return strategy_from_rank(g, uniform_below(rng, space));
    // Strategy space beyond 64 bits: draw each choice uniformly.
    Strategy s = first_choice_strategy(g);
    for (VertexId v : g.interior()) {
      s.set_index(v, static_cast<std::uint32_t>(uniform_below(rng, g.out_degree(v))));
    }
    return s;
  };
  for (std::uint64_t t = 0; t < triples; ++t) {
    const Strategy a = draw();
    const Strategy b = draw();
    const Strategy c = draw();
    ++res.triples_checked;
    if (beats(g, a, b) && beats(g, b, c) && beats(g, c, a)) {
      res.witness = std::array<Strategy, 3>{a, b, c};
      break;
    }
  }
  return res;
}

}  // namespace coevo
