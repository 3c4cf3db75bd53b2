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

#include "fclt/stable.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "fclt/counter_rng.hpp"
#include "fclt/quadrature.hpp"

namespace fclt {
namespace {

constexpr std::uint32_t kStreamStable = 2;
constexpr double kPi = std::numbers::pi;

// Standardized (scale 1, location 0) CMS draw from two open-(0,1) uniforms.
double cms_standard(double alpha, double beta, double u1, double u2) {
  const double U = kPi * (u1 - 0.5);
  const double W = -std::log(u2);
  if (alpha == 1.0) {
    const double h = kPi / 2 + beta * U;
    return (2.0 / kPi) *
           (h * std::tan(U) -
            beta * std::log((kPi / 2) * W * std::cos(U) / h));
  }
  const double t = std::tan(kPi * alpha / 2);
  const double theta0 = std::atan(beta * t) / alpha;
  const double pre = std::pow(1.0 + beta * beta * t * t, 0.5 / alpha);
  return pre * std::sin(alpha * (U + theta0)) /
         std::pow(std::cos(U), 1.0 / alpha) *
         std::pow(std::cos(U - alpha * (U + theta0)) / W,
                  (1.0 - alpha) / alpha);
}

// First-order Paretian tail; C_alpha = (2/pi) Gamma(alpha) sin(pi alpha/2).
double tail_constant(double alpha) {
  return 2.0 / kPi * std::tgamma(alpha) * std::sin(kPi * alpha / 2);
}

// Standardized CDF via Gil-Pelaez:
//   F(z) = 1/2 - (1/pi) Int_0^inf e^{-th^alpha} sin(-z th + d th^alpha)/th dth
// with d = beta tan(pi alpha / 2).  Split along sin(a+b): the linear-phase
// part is bounded near 0; the skew part behaves like th^(alpha-1) and is
// integrated in u = th^alpha when alpha < 1.
double cdf_standard(double alpha, double beta, double z) {
  const double d = alpha == 1.0 ? 0.0 : beta * std::tan(kPi * alpha / 2);
  const double theta_max = std::pow(34.0, 1.0 / alpha);
  const double tol = 2.5e-8;

  const auto part1 = [&](double th) {
    const double damp = std::exp(-std::pow(th, alpha));
    const double lin = th == 0.0 ? -z : std::sin(-z * th) / th;
    return damp * lin * std::cos(d * std::pow(th, alpha));
  };
  double integral = integrate_gk(part1, 0.0, theta_max, tol);

  if (d != 0.0) {
    if (alpha < 1.0) {
      // u = th^alpha; integrand stays bounded at 0.
      const auto part2u = [&](double u) {
        if (u == 0.0) return d / alpha;
        const double th = std::pow(u, 1.0 / alpha);
        return std::exp(-u) * std::cos(-z * th) * std::sin(d * u) / (alpha * u);
      };
      integral += integrate_gk(part2u, 0.0, 34.0, tol);
    } else {
      const auto part2 = [&](double th) {
        const double ta = std::pow(th, alpha);
        if (th == 0.0) return 0.0;
        return std::exp(-ta) * std::cos(-z * th) * std::sin(d * ta) / th;
      };
      integral += integrate_gk(part2, 0.0, theta_max, tol);
    }
  }
  return std::clamp(0.5 - integral / kPi, 0.0, 1.0);
}

double cdf_standard_with_tails(double alpha, double beta, double z) {
  constexpr double kTailSwitch = 1000.0;
  if (z > kTailSwitch)
    return 1.0 - tail_constant(alpha) * (1.0 + beta) / 2 * std::pow(z, -alpha);
  if (z < -kTailSwitch)
    return tail_constant(alpha) * (1.0 - beta) / 2 * std::pow(-z, -alpha);
  return cdf_standard(alpha, beta, z);
}

}  // namespace

void StableParams::validate() const {
  if (!(alpha > 0.0) || !(alpha <= 2.0))
    throw std::invalid_argument("StableParams: alpha must lie in (0, 2]");
  if (!(beta >= -1.0) || !(beta <= 1.0))
    throw std::invalid_argument("StableParams: beta must lie in [-1, 1]");
  if (!(scale > 0.0))
    throw std::invalid_argument("StableParams: scale must be positive");
  if (!std::isfinite(location))
    throw std::invalid_argument("StableParams: location must be finite");
}

std::vector<double> sample_stable(const StableParams& params,
                                  std::int64_t count, std::uint64_t seed) {
  params.validate();
  if (count < 0) throw std::invalid_argument("sample_stable: count < 0");
  const CounterRng rng(seed);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    const double u1 = rng.uniform(i, 0, kStreamStable);
    const double u2 = rng.uniform(i, 1, kStreamStable);
    out.push_back(params.location +
                  params.scale * cms_standard(params.alpha, params.beta, u1, u2));
  }
  return out;
}

double stable_cdf(const StableParams& params, double x) {
  params.validate();
  if (params.alpha == 1.0 && params.beta != 0.0)
    throw std::invalid_argument(
        "stable_cdf: alpha = 1 with beta != 0 is unsupported");
  const double z = (x - params.location) / params.scale;
  return cdf_standard_with_tails(params.alpha, params.beta, z);
}

std::vector<double> stable_cdf_grid(const StableParams& params,
                                    std::span<const double> xs,
                                    double* cleanup) {
  std::vector<std::size_t> order(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> out(xs.size());
  double run = 0.0, worst = 0.0;
  for (std::size_t idx : order) {
    double v = stable_cdf(params, xs[idx]);
    if (v < run) {  // isotonic cleanup of quadrature wiggle
      worst = std::max(worst, run - v);
      v = run;
    }
    run = v;
    out[idx] = v;
  }
  if (cleanup) *cleanup = worst;
  return out;
}

std::string stable_cdf_table_csv(const StableParams& params,
                                 std::span<const double> xs) {
  const std::vector<double> fs = stable_cdf_grid(params, xs);
  std::string out = "x,F\n";
  char buf[96];
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", xs[i], fs[i]);
    out += buf;
  }
  return out;
}

StepPath levy_path(const StableParams& params, std::int64_t n_grid, double T,
                   std::uint64_t seed) {
  params.validate();
  if (n_grid < 1) throw std::invalid_argument("levy_path: n_grid must be >= 1");
  if (!(T > 0.0)) throw std::invalid_argument("levy_path: T must be > 0");
  StableParams inc = params;
  inc.location = 0.0;
  inc.scale = params.scale *
              std::pow(T / static_cast<double>(n_grid), 1.0 / params.alpha);
  const std::vector<double> steps = sample_stable(inc, n_grid, seed);
  std::vector<double> times(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i)
    times[i] = T * static_cast<double>(i + 1) / static_cast<double>(n_grid);
  return StepPath(T, 0.0, std::move(times), std::vector<double>(steps));
}

double ks_statistic(std::span<const double> sample,
                    const std::function<double(double)>& cdf) {
  if (sample.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::vector<double> xs(sample.begin(), sample.end());
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, f - static_cast<double>(i) / n,
                  static_cast<double>(i + 1) / n - f});
  }
  return d;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("ks_two_sample: empty sample");
  std::vector<double> xs(a.begin(), a.end());
  std::vector<double> ys(b.begin(), b.end());
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  const double na = static_cast<double>(xs.size());
  const double nb = static_cast<double>(ys.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    const double v = std::min(xs[i], ys[j]);
    while (i < xs.size() && xs[i] == v) ++i;
    while (j < ys.size() && ys[j] == v) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na -
                              static_cast<double>(j) / nb));
  }
  return d;
}

}  // namespace fclt
