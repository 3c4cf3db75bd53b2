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

#include "fclt/linear_process.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fclt {

LinearSeries build_linear_series(const InnovationModel& model,
                                 const CoefficientSeq& seq, std::int64_t K,
                                 std::int64_t n, std::uint64_t seed) {
  if (K < 0) throw std::invalid_argument("build_linear_series: K must be >= 0");
  if (n < 1) throw std::invalid_argument("build_linear_series: n must be >= 1");
  const std::vector<double> xi = model.sample_window(1 - K, n + K, seed);
  const std::vector<double> a = seq.window(K);
  LinearSeries out;
  out.truncation_K = K;
  out.seed = seed;
  out.values.assign(static_cast<std::size_t>(n), 0.0);
  // Z_j = sum_k a_k xi_{j-k}; accumulate one diagonal of the band per k so
  // the inner loop runs over contiguous memory.
  for (std::int64_t k = -K; k <= K; ++k) {
    const double ak = a[static_cast<std::size_t>(k + K)];
    if (ak == 0.0) continue;
    // xi index j - k lives at offset (j - k) - (1 - K) in the window.
    const double* src = xi.data() + (K - k);
    double* dst = out.values.data();
    for (std::int64_t j = 0; j < n; ++j) dst[j] += ak * src[j];
  }
  return out;
}

StepPath partial_sum_path(std::span<const double> values, double b_n,
                          double center, std::int64_t n, double T) {
  if (!(b_n > 0.0))
    throw std::invalid_argument("partial_sum_path: b_n must be > 0");
  if (!(T > 0.0)) throw std::invalid_argument("partial_sum_path: T must be > 0");
  const auto steps = static_cast<std::int64_t>(
      std::floor(static_cast<double>(n) * T));
  if (steps > static_cast<std::int64_t>(values.size()))
    throw std::invalid_argument("partial_sum_path: not enough values for n*T");
  std::vector<double> times;
  std::vector<double> sizes;
  times.reserve(static_cast<std::size_t>(steps));
  sizes.reserve(static_cast<std::size_t>(steps));
  for (std::int64_t j = 1; j <= steps; ++j) {
    times.push_back(static_cast<double>(j) / static_cast<double>(n));
    sizes.push_back((values[static_cast<std::size_t>(j - 1)] - center) / b_n);
  }
  return StepPath(T, 0.0, std::move(times), std::move(sizes));
}

StepPath truncated_process_path(const InnovationModel& model,
                                const CoefficientSeq& seq, std::int64_t m,
                                std::int64_t n, double b_n, double c_n,
                                double T, std::uint64_t seed) {
  if (m < 0) throw std::invalid_argument("truncated_process_path: m >= 0");
  const auto steps = static_cast<std::int64_t>(
      std::floor(static_cast<double>(n) * T));
  const LinearSeries zs =
      build_linear_series(model, seq, m, std::max<std::int64_t>(steps, 1), seed);
  const double center = seq.total_mass(m) * c_n;
  return partial_sum_path(zs.values, b_n, center, n, T);
}

double approximation_gap(const StepPath& x, const StepPath& y, double T) {
  if (x.horizon() != T || y.horizon() != T)
    throw std::invalid_argument("approximation_gap: horizon mismatch");
  return uniform_distance(x, y);
}

ShiftCheck shift_check(const InnovationModel& model, std::int64_t k,
                       std::int64_t n, double b_n, double c_n, double T,
                       std::uint64_t seed) {
  if (k == 0) throw std::invalid_argument("shift_check: k must be nonzero");
  if (std::llabs(k) > n)
    throw std::invalid_argument("shift_check: |k| must not exceed n");
  const auto steps = static_cast<std::int64_t>(
      std::floor(static_cast<double>(n) * T));

  // Shifted path: jumps (xi_{j-k} - c_n)/b_n at j/n.
  const std::vector<double> shifted =
      model.sample_window(1 - k, steps - k, seed);
  const StepPath y = partial_sum_path(shifted, b_n, c_n, n, T);

  // Unshifted path evaluated at s_n(t) = max{0, t - k/n}, re-anchored at
  // s_n(0); for k > 0 the comparison starts where the floor windows match.
  const std::int64_t extra = std::max<std::int64_t>(-k, 0);
  const std::vector<double> base = model.sample_window(1, steps + extra, seed);
  const double t_lo = k > 0 ? static_cast<double>(k) / static_cast<double>(n)
                            : 0.0;

  auto partial = [&](std::int64_t upto) {  // sum_{j<=upto} (xi_j - c_n)/b_n
    double s = 0.0;
    for (std::int64_t j = 1; j <= upto; ++j)
      s += (base[static_cast<std::size_t>(j - 1)] - c_n) / b_n;
    return s;
  };
  const double anchor = k < 0 ? partial(-k) : 0.0;

  // Both paths are constant between the grid points l/n; evaluate just after
  // each grid point in the comparison region.
  double lhs = 0.0;
  const auto l_lo = static_cast<std::int64_t>(std::ceil(t_lo * n - 1e-9));
  double run = partial(std::max<std::int64_t>(l_lo - k, 0)) - anchor;
  double run_y = 0.0;
  for (std::int64_t j = 1; j <= std::max<std::int64_t>(l_lo, 0); ++j)
    run_y += (shifted[static_cast<std::size_t>(j - 1)] - c_n) / b_n;
  lhs = std::fabs(run_y - run);
  for (std::int64_t l = l_lo + 1; l <= steps; ++l) {
    run_y += (shifted[static_cast<std::size_t>(l - 1)] - c_n) / b_n;
    run += (base[static_cast<std::size_t>(l - k - 1)] - c_n) / b_n;
    lhs = std::max(lhs, std::fabs(run_y - run));
  }

  // Boundary sum: j = 1-k..0 for k > 0; empty for k < 0.
  double boundary = 0.0;
  if (k > 0) {
    const std::vector<double> pre = model.sample_window(1 - k, 0, seed);
    for (double v : pre) boundary += (v - c_n) / b_n;
  }
  ShiftCheck res;
  res.lhs = lhs;
  res.rhs = std::fabs(boundary);
  res.ok = res.lhs <= res.rhs + 1e-12;
  return res;
}

std::string LinearSeries::to_csv() const {
  std::string out = "index,value\n";
  char buf[96];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", i + 1, values[i]);
    out += buf;
  }
  return out;
}

}  // namespace fclt
