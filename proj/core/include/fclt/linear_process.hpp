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
#include <span>
#include <string>
#include <vector>

#include "fclt/coefficients.hpp"
#include "fclt/innovations.hpp"
#include "fclt/step_path.hpp"

namespace fclt {

/// Z_1..Z_n of the truncated two-sided moving average
/// Z_j = sum_{|k| <= K} a_k xi_{j-k}, built over the shared innovation
/// window [1-K, n+K] so that different truncation levels of the same seed
/// are coupled through identical innovations.
struct LinearSeries {
  std::vector<double> values;
  std::int64_t truncation_K = 0;
  std::uint64_t seed = 0;

  std::string to_csv() const;
};

LinearSeries build_linear_series(const InnovationModel& model,
                                 const CoefficientSeq& seq, std::int64_t K,
                                 std::int64_t n, std::uint64_t seed);

/// Step path of t -> (1/b_n) sum_{j <= [n t]} (values_j - center), with
/// jumps at j/n for j = 1..[nT].  Needs floor(nT) values.
StepPath partial_sum_path(std::span<const double> values, double b_n,
                          double center, std::int64_t n, double T);

/// Path of the order-m approximant
///   (1/b_n) sum_{j <= [nt]} sum_{|k| <= m} a_k (xi_{j-k} - c_n),
/// sharing the innovation window of any other path built from `seed`.
StepPath truncated_process_path(const InnovationModel& model,
                                const CoefficientSeq& seq, std::int64_t m,
                                std::int64_t n, double b_n, double c_n,
                                double T, std::uint64_t seed);

/// sup_{0 <= t <= T} |x(t) - y(t)| for coupled paths on the same horizon.
double approximation_gap(const StepPath& x, const StepPath& y, double T);

struct ShiftCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = false;
};

/// Realizes the index-shift identity behind the lemma that shifted partial
/// sums share their limit: the path built from innovations xi_{j-k},
/// compared on the matched region with the unshifted path evaluated at
/// s_n(t) = max{0, t - k/n} and re-anchored at s_n(0), differs by the
/// constant boundary sum
///   sum_{j=1-k..0} (xi_j - c_n)   for k > 0     (empty for k < 0),
/// so lhs equals rhs up to rounding, and ok = (lhs <= rhs + 1e-12).
ShiftCheck shift_check(const InnovationModel& model, std::int64_t k,
                       std::int64_t n, double b_n, double c_n, double T,
                       std::uint64_t seed);

}  // namespace fclt
