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

#include "coevo/theorem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "coevo/error.hpp"

namespace coevo {

namespace {

using boost::multiprecision::cpp_int;

BigValue from_log10(double lg) {
  BigValue b;
  b.log10 = lg;
  b.value = lg > std::log10(std::numeric_limits<double>::max())
                ? std::numeric_limits<double>::infinity()
                : std::pow(10.0, lg);
  return b;
}

double log10_of(const cpp_int& x) {
  // Keep the leading 17 digits for the mantissa.
  const std::string digits = x.str();
  const std::size_t keep = std::min<std::size_t>(digits.size(), 17);
  const double lead = std::stod(digits.substr(0, keep));
  return std::log10(lead) + static_cast<double>(digits.size() - keep);
}

}  // namespace

TheoremParameters theorem_parameters(const GameGraph& g, const GrundyData& gd,
                                     const std::vector<std::optional<std::uint32_t>>& s_values,
                                     double K, double C) {
  if (s_values.size() != g.size()) {
    throw MissingSwitchability("switchability vector must have one slot per vertex");
  }
  TheoremParameters tp;
  const auto n = static_cast<std::uint64_t>(g.size());
  tp.base = 20 * static_cast<std::uint64_t>(std::max<std::size_t>(g.max_degree(), 1)) * n;
  tp.gamma = 1.0 / static_cast<double>(tp.base);
  const cpp_int base = tp.base;

  cpp_int critical_sum = 0;
  for (VertexId v : gd.critical) {
    if (!s_values[v]) {
      throw MissingSwitchability("no switchability value for critical vertex " +
                                 std::to_string(v));
    }
    tp.s_hat = std::max(tp.s_hat, *s_values[v]);
    critical_sum += boost::multiprecision::pow(base, *s_values[v]);
  }
  if (std::all_of(s_values.begin(), s_values.end(), [](const auto& s) { return s.has_value(); })) {
    std::uint32_t s_bar = 0;
    for (const auto& s : s_values) s_bar = std::max(s_bar, *s);
    tp.s_bar = s_bar;
  }

  const double log_n = std::log(static_cast<double>(n));
  // ln n is 0 for a one-vertex game; every budget is then 0 as well.
  const double lg_log_n = log_n > 0 ? std::log10(log_n) : -std::numeric_limits<double>::infinity();
  const double lg_C = std::log10(C);

  const cpp_int mu_power = boost::multiprecision::pow(base, 1 + 2 * tp.s_hat);
  tp.mu_power_exact = mu_power.str();
  tp.critical_sum_exact = critical_sum.str();
  tp.mu_min = from_log10(lg_C + std::log10(K + tp.s_hat + 1.0) + log10_of(mu_power) + lg_log_n);
  tp.generation_budget =
      critical_sum == 0 ? BigValue{} : from_log10(lg_C + log10_of(critical_sum) + lg_log_n);
  tp.eval_budget = critical_sum == 0
                       ? BigValue{}
                       : from_log10(tp.mu_min.log10 + tp.generation_budget.log10);
  if (tp.s_bar) {
    const cpp_int cor_power = boost::multiprecision::pow(base, 2 + 3 * *tp.s_bar);
    tp.corollary_power_exact = cor_power.str();
    tp.corollary_eval_budget = from_log10(2 * lg_C + std::log10(K + *tp.s_bar + 1.0) +
                                          log10_of(cor_power) + 2 * lg_log_n);
  }
  return tp;
}

}  // namespace coevo
