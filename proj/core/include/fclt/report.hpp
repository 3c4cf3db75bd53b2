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

namespace fclt {

/// One Monte Carlo statistic at one parameter point.  m = -1 when the
/// experiment has no truncation parameter.
struct ReportRow {
  std::string experiment;
  std::int64_t n = 0;
  std::int64_t m = -1;
  std::string statistic;
  double value = 0.0;
  double mc_se = 0.0;
  std::int64_t replicas = 0;
  std::uint64_t seed = 0;
};

/// Named pass/fail outcome of an experiment-level check.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::string rows_to_csv(std::span<const ReportRow> rows);

// Sample statistics used by the experiments; SE conventions:
// mean -> sd/sqrt(R); probability -> sqrt(p(1-p)/R); median -> half-width of
// the central +-sqrt(R)/2 order-statistic interval.
double mean_of(std::span<const double> xs);
double mean_se(std::span<const double> xs);
double median_of(std::vector<double> xs);
double median_se(std::vector<double> xs);
double probability_se(double p_hat, std::int64_t replicas);

}  // namespace fclt
