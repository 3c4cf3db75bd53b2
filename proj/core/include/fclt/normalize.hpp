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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fclt/innovations.hpp"

namespace fclt {

/// Normalization pair (b_n, c_n) with the centering constants of the
/// shifted-limit dichotomy (c = 0 below the mean barrier, c = E xi above).
struct NormalizationSeq {
  enum class Mode { analytic, empirical };

  std::int64_t n = 0;
  double b_n = 0.0;
  double c_n = 0.0;
  Mode mode = Mode::analytic;
  std::optional<double> c;        ///< law centering; absent when alpha == 1
  std::optional<double> c_tilde;  ///< n * (c_n - c) / b_n

  static NormalizationSeq analytic(const InnovationModel& model,
                                   std::int64_t n);
};

/// Exact (1 - 1/n) quantile of |xi_1|.  Level-0 quantile at n = 1 returns 0.
double bn_analytic(const InnovationModel& model, std::int64_t n);

/// Left-continuous empirical (1 - 1/n) quantile of |sample| (smallest order
/// statistic whose empirical CDF reaches the level).
double bn_empirical(std::span<const double> sample, std::int64_t n);

/// c_n = E(xi_1 I(|xi_1| <= b_n)) with the analytic b_n.
double cn_analytic(const InnovationModel& model, std::int64_t n);

/// (c, c_tilde_n): c = 0 for alpha < 1 and c = E xi_1 for alpha > 1;
/// c_tilde_n = n (c_n - c) / b_n.  alpha == 1 is rejected.
std::pair<double, double> centering_constants(const InnovationModel& model,
                                              std::int64_t n);

/// x^(2-beta) E(|xi|^beta I(|xi| > x)) / E(xi^2 I(|xi| <= x)); converges to
/// (2 - alpha) / (alpha - beta) as x grows.
double karamata_ratio(const InnovationModel& model, double beta, double x);

struct ConditionRow {
  std::int64_t n;
  double b_n;
  double c_n;
  double c_n_over_b_n;
  double second_moment_ratio;  ///< n b_n^{-2} E(xi^2 I(|xi| <= b_n))
};

struct ConditionReport {
  std::vector<ConditionRow> rows;
  bool b_n_increasing = false;
  bool centering_ratio_vanishing = false;  ///< |c_n/b_n| nonincreasing to 0
  double max_second_moment_ratio = 0.0;

  std::string to_csv() const;
};

/// Finite-n diagnostics for the normalization conditions: b_n growth,
/// c_n/b_n decay, and boundedness of n b_n^{-2} E(xi^2 I(|xi| <= b_n)).
ConditionReport check_conditions_abn(const InnovationModel& model,
                                     std::span<const std::int64_t> n_list);

/// Hill tail-index estimate from the top k+1 order statistics of |sample|.
double hill_alpha(std::span<const double> sample, std::int64_t k);

}  // namespace fclt
