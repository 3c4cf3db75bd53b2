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

#include "fclt/normalize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace fclt {

double bn_analytic(const InnovationModel& model, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("bn_analytic: n must be >= 1");
  if (n == 1) return 0.0;  // inf over the level-0 set
  const double target = 1.0 / static_cast<double>(n);
  const double alpha = model.dist().alpha;
  if (!model.is_markov())
    return model.dist().scale * std::pow(target, -1.0 / alpha);

  // Mixture tail: piecewise pure power between the per-state support edges
  // s_i = scale * sigma_i; invert segment by segment.
  const auto& pi = model.stationary();
  const auto& sig = model.dep().state_scales;
  std::vector<double> edges;
  edges.reserve(sig.size());
  for (double s : sig) edges.push_back(model.dist().scale * s);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  // On [edges[k], edges[k+1]) the tail is C_k x^(-alpha) + D_k.
  for (std::size_t k = 0; k < edges.size(); ++k) {
    double c = 0.0, d = 0.0;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      const double si = model.dist().scale * sig[i];
      if (si <= edges[k])
        c += pi[i] * std::pow(si, alpha);
      else
        d += pi[i];
    }
    if (target <= d) continue;  // tail never reaches target on this segment
    const double x = std::pow((target - d) / c, -1.0 / alpha);
    const double hi =
        (k + 1 < edges.size()) ? edges[k + 1] : std::numeric_limits<double>::infinity();
    if (x >= edges[k] && x < hi) return x;
  }
  throw std::runtime_error("bn_analytic: tail inversion failed");
}

double bn_empirical(std::span<const double> sample, std::int64_t n) {
  if (sample.empty()) throw std::invalid_argument("bn_empirical: empty sample");
  if (n < 2) throw std::invalid_argument("bn_empirical: n must be >= 2");
  std::vector<double> abs(sample.size());
  std::transform(sample.begin(), sample.end(), abs.begin(),
                 [](double x) { return std::fabs(x); });
  std::sort(abs.begin(), abs.end());
  const double level = 1.0 - 1.0 / static_cast<double>(n);
  const auto size = static_cast<double>(abs.size());
  // smallest i with i/N >= level
  auto idx = static_cast<std::size_t>(std::ceil(level * size));
  idx = std::min(std::max<std::size_t>(idx, 1), abs.size());
  return abs[idx - 1];
}

double cn_analytic(const InnovationModel& model, std::int64_t n) {
  if (n < 2) throw std::invalid_argument("cn_analytic: n must be >= 2");
  return model.truncated_mean(bn_analytic(model, n));
}

std::pair<double, double> centering_constants(const InnovationModel& model,
                                              std::int64_t n) {
  const double alpha = model.dist().alpha;
  if (alpha == 1.0)
    throw std::invalid_argument(
        "centering_constants: alpha == 1 is not supported");
  const double c = alpha < 1.0 ? 0.0 : model.mean();
  const double b = bn_analytic(model, n);
  const double cn = cn_analytic(model, n);
  const double c_tilde = static_cast<double>(n) * (cn - c) / b;
  return {c, c_tilde};
}

NormalizationSeq NormalizationSeq::analytic(const InnovationModel& model,
                                            std::int64_t n) {
  NormalizationSeq s;
  s.n = n;
  s.mode = Mode::analytic;
  s.b_n = bn_analytic(model, n);
  s.c_n = cn_analytic(model, n);
  if (model.dist().alpha != 1.0) {
    const auto [c, ct] = centering_constants(model, n);
    s.c = c;
    s.c_tilde = ct;
  }
  return s;
}

double karamata_ratio(const InnovationModel& model, double beta, double x) {
  const double alpha = model.dist().alpha;
  if (beta >= alpha)
    throw std::invalid_argument("karamata_ratio: beta must be < alpha");
  if (!(x > model.dist().scale))
    throw std::invalid_argument("karamata_ratio: x must exceed the support");
  const double above = model.truncated_abs_moment(beta, x, true);
  const double below2 = model.truncated_second_moment(x);
  return std::pow(x, 2.0 - beta) * above / below2;
}

ConditionReport check_conditions_abn(const InnovationModel& model,
                                     std::span<const std::int64_t> n_list) {
  if (n_list.empty())
    throw std::invalid_argument("check_conditions_abn: empty n list");
  ConditionReport rep;
  rep.rows.reserve(n_list.size());
  for (std::int64_t n : n_list) {
    ConditionRow row;
    row.n = n;
    row.b_n = bn_analytic(model, n);
    row.c_n = cn_analytic(model, n);
    row.c_n_over_b_n = row.c_n / row.b_n;
    row.second_moment_ratio = static_cast<double>(n) / (row.b_n * row.b_n) *
                              model.truncated_second_moment(row.b_n);
    rep.rows.push_back(row);
  }
  rep.b_n_increasing = std::is_sorted(
      rep.rows.begin(), rep.rows.end(),
      [](const ConditionRow& a, const ConditionRow& b) { return a.b_n < b.b_n; });
  rep.centering_ratio_vanishing = true;
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    if (std::fabs(rep.rows[i].c_n_over_b_n) >
        std::fabs(rep.rows[i - 1].c_n_over_b_n) + 1e-15)
      rep.centering_ratio_vanishing = false;
  for (const auto& r : rep.rows)
    rep.max_second_moment_ratio =
        std::max(rep.max_second_moment_ratio, r.second_moment_ratio);
  return rep;
}

std::string ConditionReport::to_csv() const {
  std::string out = "n,b_n,c_n,c_n_over_b_n,second_moment_ratio\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g,%.17g,%.17g\n",
                  static_cast<long long>(r.n), r.b_n, r.c_n, r.c_n_over_b_n,
                  r.second_moment_ratio);
    out += buf;
  }
  return out;
}

double hill_alpha(std::span<const double> sample, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(sample.size());
  if (k < 1 || k >= n)
    throw std::invalid_argument("hill_alpha: need 1 <= k < sample size");
  std::vector<double> abs(sample.size());
  std::transform(sample.begin(), sample.end(), abs.begin(),
                 [](double x) { return std::fabs(x); });
  std::sort(abs.begin(), abs.end(), std::greater<>());
  const double threshold = abs[static_cast<std::size_t>(k)];
  if (!(threshold > 0.0))
    throw std::invalid_argument("hill_alpha: needs k+1 nonzero entries");
  double acc = 0.0;
  for (std::int64_t i = 0; i < k; ++i)
    acc += std::log(abs[static_cast<std::size_t>(i)] / threshold);
  const double gamma = acc / static_cast<double>(k);
  return gamma > 0.0 ? 1.0 / gamma : std::numeric_limits<double>::infinity();
}

}  // namespace fclt
