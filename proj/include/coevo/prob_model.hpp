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

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coevo/error.hpp"
#include "coevo/game_graph.hpp"

namespace coevo {

using Rational = boost::multiprecision::cpp_rational;

/// Sum drift above which restricted double vectors are renormalised.
inline constexpr double kRenormaliseThreshold = 1e-12;

/// Product-distribution state of the EDA: one categorical distribution per
/// interior vertex over its successors in canonical order. Sinks hold an
/// empty vector. T is double in the algorithm and Rational in exact checks.
template <class T>
class BasicProbModel {
 public:
  BasicProbModel() = default;
  BasicProbModel(std::vector<std::vector<T>> dists, T gamma)
      : dists_(std::move(dists)), gamma_(std::move(gamma)) {}

  std::span<const T> dist(VertexId v) const { return dists_[v]; }
  std::vector<T>& mutable_dist(VertexId v) { return dists_[v]; }
  const T& prob(VertexId u, std::uint32_t index) const { return dists_[u][index]; }
  const T& gamma() const noexcept { return gamma_; }
  std::size_t size() const noexcept { return dists_.size(); }
  const std::vector<std::vector<T>>& dists() const noexcept { return dists_; }

  friend bool operator==(const BasicProbModel&, const BasicProbModel&) = default;

 private:
  std::vector<std::vector<T>> dists_;
  T gamma_{};
};

using ProbModel = BasicProbModel<double>;

/// Uniform distribution at every interior vertex. Throws GammaTooLarge unless
/// gamma * max_degree < 1.
template <class T = double>
BasicProbModel<T> uniform_model(const GameGraph& g, T gamma = T{0}) {
  if (gamma < T{0} || gamma * T(g.max_degree()) >= T{1}) {
    throw GammaTooLarge("gamma must satisfy 0 <= gamma * max_degree < 1");
  }
  std::vector<std::vector<T>> dists(g.size());
  for (VertexId v : g.interior()) {
    const auto d = g.out_degree(v);
    dists[v].assign(d, T{1} / T(d));
  }
  return BasicProbModel<T>(std::move(dists), gamma);
}

/// Maps a distribution p over S onto P_gamma(S) = {q : q(s) >= gamma}.
/// With beta_plus = sum max(p - gamma, 0) and beta_minus = sum max(gamma - p, 0):
/// entries at or below gamma become gamma, the rest become
/// gamma + (1 - beta_minus / beta_plus) * (p(s) - gamma).
/// For |S| = 2 this is the clamp to [gamma, 1 - gamma].
/// Requires gamma * |S| < 1, which guarantees beta_plus >= 1 - gamma |S| > 0.
template <class T>
std::vector<T> restrict_distribution(std::span<const T> p, const T& gamma) {
  T beta_plus{0};
  T beta_minus{0};
  for (const T& x : p) {
    if (x > gamma) beta_plus += x - gamma;
    if (x < gamma) beta_minus += gamma - x;
  }
  std::vector<T> out(p.size());
  if (beta_minus == T{0}) {
    out.assign(p.begin(), p.end());
    return out;
  }
  const T shrink = T{1} - beta_minus / beta_plus;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = p[i] <= gamma ? gamma : T(gamma + shrink * (p[i] - gamma));
  }
  if constexpr (std::is_floating_point_v<T>) {
    T sum{0};
    for (const T& x : out) sum += x;
    if (std::abs(sum - T{1}) > kRenormaliseThreshold) {
      for (T& x : out) x /= sum;
    }
  }
  return out;
}

template <class T>
std::vector<T> restrict_distribution(const std::vector<T>& p, const T& gamma) {
  return restrict_distribution(std::span<const T>(p), gamma);
}

}  // namespace coevo
