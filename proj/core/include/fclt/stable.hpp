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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fclt/step_path.hpp"

namespace fclt {

/// Alpha-stable law in the type-1 ("S1") parametrization:
///   E exp(i theta X) = exp(i location theta
///        - scale^alpha |theta|^alpha (1 - i beta sign(theta) tan(pi alpha/2)))
/// for alpha != 1, with the usual logarithmic correction at alpha = 1.
/// Special cases: alpha=2 is Gaussian with variance 2 scale^2 (beta
/// irrelevant), alpha=1 beta=0 is Cauchy, alpha=1/2 beta=1 is Levy.
struct StableParams {
  double alpha = 1.5;
  double beta = 0.0;
  double scale = 1.0;
  double location = 0.0;

  void validate() const;
};

/// iid draws via the Chambers-Mallows-Stuck transform; deterministic in
/// (params, seed), one draw per counter index.
std::vector<double> sample_stable(const StableParams& params,
                                  std::int64_t count, std::uint64_t seed);

/// CDF by Gil-Pelaez inversion of the characteristic function with adaptive
/// Gauss-Kronrod quadrature; absolute error <= 1e-6 for |x - location| up to
/// 1000 scale, first-order Paretian tail beyond.  alpha = 1 with beta != 0
/// is not supported (the log-term quadrature is too fragile there).
double stable_cdf(const StableParams& params, double x);

/// Batch CDF on an arbitrary grid with an isotonic cleanup pass (values are
/// clipped into [0,1] and made nondecreasing along the sorted grid).  The
/// magnitude of the largest adjustment is reported in *cleanup; it should
/// stay below 1e-7.
std::vector<double> stable_cdf_grid(const StableParams& params,
                                    std::span<const double> xs,
                                    double* cleanup = nullptr);

/// CSV table (x, F(x)) for plotting.
std::string stable_cdf_table_csv(const StableParams& params,
                                 std::span<const double> xs);

/// Levy process skeleton: step path with iid stable increments of scale
/// (T/n_grid)^(1/alpha) at the grid times i T / n_grid, started at 0.
StepPath levy_path(const StableParams& params, std::int64_t n_grid, double T,
                   std::uint64_t seed);

/// One-sample Kolmogorov-Smirnov statistic against a CDF.
double ks_statistic(std::span<const double> sample,
                    const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov statistic (exact sup over the merged grid).
double ks_two_sample(std::span<const double> a, std::span<const double> b);

}  // namespace fclt
