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
#include <stdexcept>
#include <string>
#include <vector>

#include "fclt/coefficients.hpp"
#include "fclt/innovations.hpp"

namespace fclt {

/// Rejected configuration input (malformed JSON, unknown keys, bad values).
struct ConfigError : std::invalid_argument {
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// One Monte Carlo experiment run.  Parsed from strict JSON: unknown keys
/// are errors, every numeric field is validated, and all fields except
/// `experiment` carry defaults (see schema_text()).
struct ExperimentConfig {
  std::string experiment;

  // model
  double alpha = 1.5;
  double balance_p = 0.5;
  double scale = 1.0;
  DependenceSpec dependence;

  // coefficients
  CoefficientSeq coefficients = CoefficientSeq::finite({1.0});

  std::vector<std::int64_t> n_values = {1000};
  std::vector<std::int64_t> m_values = {};
  std::int64_t replicas = 200;
  double s_exponent = 2.0;
  double tau = 0.5;
  double delta = 0.1;
  std::vector<double> delta_values = {};  ///< optional grid; falls back to delta
  double T = 1.0;
  double epsilon = 1.0;
  std::uint64_t seed = 1;
  double refine_eps = 1e-3;
  std::string output_dir = "out";

  double r_n_exponent = 0.6;                ///< anticluster window rule
  std::vector<std::int64_t> k_values = {-3, 3};  ///< shift grid (diagnostics)
  double se_multiplier = 2.0;               ///< k in "value +- k * SE" checks
  double bound_margin = 0.5;                ///< slack on analytic bounds
  double truncation_r = 1.0;                ///< r for choose_truncation
  double truncation_tol = 1e-8;             ///< tail-mass tolerance

  InnovationModel model() const {
    return InnovationModel({alpha, balance_p, scale}, dependence);
  }

  static ExperimentConfig from_json_text(const std::string& text);
  static ExperimentConfig from_json_file(const std::string& path);
  std::string to_json_text() const;  ///< config echo for summaries

  /// Human-readable schema listing for `fclt list`.
  static std::string schema_text();
};

}  // namespace fclt
