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

#include "fclt/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fclt {

std::string rows_to_csv(std::span<const ReportRow> rows) {
  std::string out = "experiment,n,m,statistic,value,mc_se,replicas,seed\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%lld,%lld,%s,%.17g,%.17g,%lld,%llu\n",
                  r.experiment.c_str(), static_cast<long long>(r.n),
                  static_cast<long long>(r.m), r.statistic.c_str(), r.value,
                  r.mc_se, static_cast<long long>(r.replicas),
                  static_cast<unsigned long long>(r.seed));
    out += buf;
  }
  return out;
}

double mean_of(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean_of: empty");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double mean_se(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  const double n = static_cast<double>(xs.size());
  return std::sqrt(ss / (n - 1.0) / n);
}

double median_of(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("median_of: empty");
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

double median_se(std::vector<double> xs) {
  if (xs.size() < 4) return 0.0;
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  const double half = 0.5 * std::sqrt(n);
  const auto lo = static_cast<std::size_t>(
      std::clamp(n / 2 - half, 0.0, n - 1.0));
  const auto hi = static_cast<std::size_t>(
      std::clamp(n / 2 + half, 0.0, n - 1.0));
  return 0.5 * (xs[hi] - xs[lo]);
}

double probability_se(double p_hat, std::int64_t replicas) {
  if (replicas <= 0) return 0.0;
  return std::sqrt(std::max(p_hat * (1.0 - p_hat), 0.0) /
                   static_cast<double>(replicas));
}

}  // namespace fclt
