/*
   Copyright 2026 The fclt Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "fclt/innovations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fclt/counter_rng.hpp"

namespace fclt {
namespace {

constexpr std::uint32_t kStreamInnovation = 0;
constexpr std::uint32_t kStreamChain = 1;

// Inverse CDF of the Pareto-balanced law with scale 1.
double base_quantile(double alpha, double p, double u) {
  const double q = 1.0 - p;  // left-tail weight
  if (u < q) return -std::pow(u / q, -1.0 / alpha);
  return std::pow((1.0 - u) / p, -1.0 / alpha);
}

// Inverse-CDF step of the volatility chain: next state from row `s` under
// the shared uniform u.
int chain_step(const std::vector<std::vector<double>>& trans, int s, double u) {
  const auto& row = trans[static_cast<std::size_t>(s)];
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < row.size(); ++j) {
    acc += row[j];
    if (u < acc) return static_cast<int>(j);
  }
  return static_cast<int>(row.size()) - 1;
}

std::vector<double> solve_stationary(
    const std::vector<std::vector<double>>& trans) {
  // Solve pi P = pi, sum pi = 1 by Gaussian elimination on (P^T - I).
  const std::size_t n = trans.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = trans[j][i];
    a[i][i] -= 1.0;
  }
  // Replace last equation with the normalization.
  for (std::size_t j = 0; j < n; ++j) a[n - 1][j] = 1.0;
  a[n - 1][n] = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    if (std::fabs(a[c][c]) < 1e-14)
      throw std::invalid_argument("transition matrix is singular");
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<double> pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = a[i][n] / a[i][i];
  for (double& x : pi) x = std::max(x, 0.0);
  const double s = std::accumulate(pi.begin(), pi.end(), 0.0);
  for (double& x : pi) x /= s;
  return pi;
}

void check_irreducible_aperiodic(
    const std::vector<std::vector<double>>& trans) {
  const int n = static_cast<int>(trans.size());
  auto reach = [&](bool forward) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        const double w = forward ? trans[u][v] : trans[v][u];
        if (w > 0.0 && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
  };
  if (!reach(true) || !reach(false))
    throw std::invalid_argument("volatility chain is not irreducible");

  // Period = gcd over edges (u,v) of depth[u] + 1 - depth[v] (BFS from 0).
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<int> queue = {0};
  depth[0] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int u = queue[h];
    for (int v = 0; v < n; ++v)
      if (trans[u][v] > 0.0 && depth[v] < 0) {
        depth[v] = depth[u] + 1;
        queue.push_back(v);
      }
  }
  int g = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (trans[u][v] > 0.0) g = std::gcd(g, depth[u] + 1 - depth[v]);
  if (std::abs(g) != 1)
    throw std::invalid_argument("volatility chain is not aperiodic");
}

}  // namespace

void DistributionSpec::validate() const {
  if (!(alpha > 0.0) || !(alpha <= 2.0))
    throw std::invalid_argument("alpha must lie in (0, 2]");
  if (!(balance_p >= 0.0) || !(balance_p <= 1.0))
    throw std::invalid_argument("balance_p must lie in [0, 1]");
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
}

DependenceSpec DependenceSpec::markov(std::vector<double> scales,
                                      std::vector<std::vector<double>> trans) {
  DependenceSpec d;
  d.kind = Kind::markov_volatility;
  d.state_scales = std::move(scales);
  d.transition = std::move(trans);
  return d;
}

DependenceSpec DependenceSpec::constant(double value) {
  DependenceSpec d;
  d.kind = Kind::constant;
  d.constant_value = value;
  return d;
}

void DependenceSpec::validate() const {
  if (kind != Kind::markov_volatility) return;
  const std::size_t n = state_scales.size();
  if (n == 0) throw std::invalid_argument("markov model needs states");
  for (double s : state_scales)
    if (!(s > 0.0)) throw std::invalid_argument("state scales must be > 0");
  if (transition.size() != n)
    throw std::invalid_argument("transition matrix must be square");
  for (const auto& row : transition) {
    if (row.size() != n)
      throw std::invalid_argument("transition matrix must be square");
    double sum = 0.0;
    for (double w : row) {
      if (w < 0.0) throw std::invalid_argument("negative transition weight");
      sum += w;
    }
    if (std::fabs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("transition rows must sum to 1");
  }
  check_irreducible_aperiodic(transition);
}

InnovationModel::InnovationModel(DistributionSpec dist, DependenceSpec dep)
    : dist_(dist), dep_(std::move(dep)) {
  dist_.validate();
  dep_.validate();
  if (is_markov()) stationary_ = solve_stationary(dep_.transition);
}

const std::vector<double>& InnovationModel::stationary() const {
  if (!is_markov())
    throw std::invalid_argument("stationary(): not a markov model");
  return stationary_;
}

double InnovationModel::sample_base(std::int64_t index,
                                    std::uint64_t seed) const {
  const CounterRng rng(seed);
  return dist_.scale *
         base_quantile(dist_.alpha, dist_.balance_p,
                       rng.uniform(index, 0, kStreamInnovation));
}

int InnovationModel::state_at(std::int64_t index, std::uint64_t seed) const {
  if (!is_markov())
    throw std::invalid_argument("state_at(): not a markov model");
  const CounterRng rng(seed);
  const int n = static_cast<int>(dep_.state_scales.size());
  // Coupling from the past: compose the inverse-CDF maps of u_{index-m+1},
  // ..., u_index from every start state; once they coalesce the value is an
  // exact stationary draw and is independent of anything before index - m,
  // so overlapping windows agree.
  std::vector<int> cur(static_cast<std::size_t>(n));
  for (std::int64_t m = 64; m <= (1 << 22); m *= 2) {
    for (int s = 0; s < n; ++s) cur[static_cast<std::size_t>(s)] = s;
    for (std::int64_t i = index - m + 1; i <= index; ++i) {
      const double u = rng.uniform(i, 0, kStreamChain);
      for (int s = 0; s < n; ++s)
        cur[static_cast<std::size_t>(s)] =
            chain_step(dep_.transition, cur[static_cast<std::size_t>(s)], u);
      if (std::all_of(cur.begin(), cur.end(),
                      [&](int v) { return v == cur[0]; }) &&
          i < index) {
        // Already coalesced; finish the remaining steps on one trajectory.
        int s = cur[0];
        for (std::int64_t j = i + 1; j <= index; ++j)
          s = chain_step(dep_.transition, s,
                         rng.uniform(j, 0, kStreamChain));
        return s;
      }
    }
    if (std::all_of(cur.begin(), cur.end(),
                    [&](int v) { return v == cur[0]; }))
      return cur[0];
  }
  throw std::runtime_error(
      "volatility chain failed to coalesce; transition matrix too stiff");
}

std::vector<double> InnovationModel::sample_window(std::int64_t lo,
                                                   std::int64_t hi,
                                                   std::uint64_t seed) const {
  if (lo > hi + 1)
    throw std::invalid_argument("sample_window: lo > hi + 1");
  std::vector<double> out;
  if (lo == hi + 1) return out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));

  if (is_constant()) {
    out.assign(static_cast<std::size_t>(hi - lo + 1), dep_.constant_value);
    return out;
  }
  if (!is_markov()) {
    for (std::int64_t j = lo; j <= hi; ++j) out.push_back(sample_base(j, seed));
    return out;
  }
  const CounterRng rng(seed);
  int s = state_at(lo, seed);
  for (std::int64_t j = lo; j <= hi; ++j) {
    if (j > lo)
      s = chain_step(dep_.transition, s, rng.uniform(j, 0, kStreamChain));
    out.push_back(dep_.state_scales[static_cast<std::size_t>(s)] *
                  sample_base(j, seed));
  }
  return out;
}

double InnovationModel::tail_prob(double x) const {
  if (!(x > 0.0)) throw std::invalid_argument("tail_prob: x must be > 0");
  if (is_constant())
    throw std::invalid_argument("tail_prob: constant hook has no Pareto tail");
  auto base_tail = [&](double scale, double y) {
    return y <= scale ? 1.0 : std::pow(y / scale, -dist_.alpha);
  };
  if (!is_markov()) return base_tail(dist_.scale, x);
  double p = 0.0;
  for (std::size_t i = 0; i < stationary_.size(); ++i)
    p += stationary_[i] * base_tail(dist_.scale * dep_.state_scales[i], x);
  return p;
}

double InnovationModel::cdf(double x) const {
  if (is_constant())
    throw std::invalid_argument("cdf: constant hook has no Pareto law");
  auto base_cdf = [&](double scale, double y) {
    const double q = 1.0 - dist_.balance_p;
    if (y <= -scale) return q * std::pow(-y / scale, -dist_.alpha);
    if (y < scale) return q;
    return 1.0 - dist_.balance_p * std::pow(y / scale, -dist_.alpha);
  };
  if (!is_markov()) return base_cdf(dist_.scale, x);
  double p = 0.0;
  for (std::size_t i = 0; i < stationary_.size(); ++i)
    p += stationary_[i] * base_cdf(dist_.scale * dep_.state_scales[i], x);
  return p;
}

namespace {

// E |eta|^beta I(|eta| <= x) for the scale-1 Pareto magnitude law
// (density alpha * y^(-alpha-1) on [1, inf)).
double base_abs_below(double alpha, double beta, double x) {
  if (x <= 1.0) return 0.0;
  if (std::fabs(beta - alpha) < 1e-14) return alpha * std::log(x);
  return alpha * (std::pow(x, beta - alpha) - 1.0) / (beta - alpha);
}

double base_abs_above(double alpha, double beta, double x) {
  const double x0 = std::max(x, 1.0);
  return alpha / (alpha - beta) * std::pow(x0, beta - alpha);
}

}  // namespace

double InnovationModel::truncated_second_moment(double x) const {
  if (!(x > 0.0))
    throw std::invalid_argument("truncated_second_moment: x must be > 0");
  if (is_constant())
    throw std::invalid_argument("truncated moments: constant hook");
  auto one = [&](double scale) {
    return scale * scale * base_abs_below(dist_.alpha, 2.0, x / scale);
  };
  if (!is_markov()) return one(dist_.scale);
  double m = 0.0;
  for (std::size_t i = 0; i < stationary_.size(); ++i)
    m += stationary_[i] * one(dist_.scale * dep_.state_scales[i]);
  return m;
}

double InnovationModel::truncated_mean(double x) const {
  if (!(x > 0.0)) throw std::invalid_argument("truncated_mean: x must be > 0");
  if (is_constant())
    throw std::invalid_argument("truncated moments: constant hook");
  const double skew = 2.0 * dist_.balance_p - 1.0;
  auto one = [&](double scale) {
    return skew * scale * base_abs_below(dist_.alpha, 1.0, x / scale);
  };
  if (!is_markov()) return one(dist_.scale);
  double m = 0.0;
  for (std::size_t i = 0; i < stationary_.size(); ++i)
    m += stationary_[i] * one(dist_.scale * dep_.state_scales[i]);
  return m;
}

double InnovationModel::truncated_abs_moment(double beta, double x,
                                             bool above) const {
  if (!(x > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("truncated_abs_moment: beta, x must be > 0");
  if (is_constant())
    throw std::invalid_argument("truncated moments: constant hook");
  if (above && beta >= dist_.alpha)
    throw std::invalid_argument(
        "truncated_abs_moment: E|xi|^beta diverges for beta >= alpha");
  auto one = [&](double scale) {
    const double z = x / scale;
    const double b = std::pow(scale, beta);
    return b * (above ? base_abs_above(dist_.alpha, beta, z)
                      : base_abs_below(dist_.alpha, beta, z));
  };
  if (!is_markov()) return one(dist_.scale);
  double m = 0.0;
  for (std::size_t i = 0; i < stationary_.size(); ++i)
    m += stationary_[i] * one(dist_.scale * dep_.state_scales[i]);
  return m;
}

double InnovationModel::mean() const {
  if (is_constant()) return dep_.constant_value;
  if (!(dist_.alpha > 1.0))
    throw std::invalid_argument("mean: undefined for alpha <= 1");
  const double skew = 2.0 * dist_.balance_p - 1.0;
  auto one = [&](double scale) {
    return skew * scale * dist_.alpha / (dist_.alpha - 1.0);
  };
  if (!is_markov()) return one(dist_.scale);
  double m = 0.0;
  for (std::size_t i = 0; i < stationary_.size(); ++i)
    m += stationary_[i] * one(dist_.scale * dep_.state_scales[i]);
  return m;
}

}  // namespace fclt
