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
#include <vector>

namespace fclt {

/// Marginal law with an exact power tail ("Pareto-balanced"):
///   Pr(xi > x)  = balance_p     * (x/scale)^(-alpha)   for x >= scale,
///   Pr(xi < -x) = (1-balance_p) * (x/scale)^(-alpha)   for x >= scale,
/// and no mass inside (-scale, scale).  Every tail and truncated-moment
/// quantity of this family has a closed form, which the test oracles rely on.
struct DistributionSpec {
  double alpha = 1.5;      ///< tail index, in (0, 2]
  double balance_p = 0.5;  ///< right-tail weight, in [0, 1]
  double scale = 1.0;      ///< support lower bound of |xi|, > 0

  void validate() const;
};

/// Dependence structure of the innovation sequence.
///
/// `markov_volatility` draws xi_j = state_scales[S_j] * eta_j where eta is
/// iid Pareto-balanced and S is a stationary finite-state Markov chain
/// (irreducible and aperiodic, checked at construction).  The marginal law is
/// the stationary scale mixture, identical for every j.
///
/// `constant` is a deterministic test hook: every xi_j equals
/// constant_value.  It is non-statistical; the analytic tail/moment
/// operations reject it.
struct DependenceSpec {
  enum class Kind { iid, markov_volatility, constant };

  Kind kind = Kind::iid;
  std::vector<double> state_scales;            ///< sigma_i > 0 (markov only)
  std::vector<std::vector<double>> transition; ///< row-stochastic (markov only)
  double constant_value = 0.0;                 ///< constant hook only

  static DependenceSpec iid_spec() { return DependenceSpec{}; }
  static DependenceSpec markov(std::vector<double> scales,
                               std::vector<std::vector<double>> trans);
  static DependenceSpec constant(double value);

  void validate() const;
};

class InnovationModel {
 public:
  InnovationModel(DistributionSpec dist, DependenceSpec dep);

  static InnovationModel iid(double alpha, double balance_p = 0.5,
                             double scale = 1.0) {
    return InnovationModel({alpha, balance_p, scale}, DependenceSpec{});
  }
  static InnovationModel constant(double value) {
    return InnovationModel({1.5, 0.5, 1.0}, DependenceSpec::constant(value));
  }

  const DistributionSpec& dist() const { return dist_; }
  const DependenceSpec& dep() const { return dep_; }
  bool is_markov() const {
    return dep_.kind == DependenceSpec::Kind::markov_volatility;
  }
  bool is_constant() const {
    return dep_.kind == DependenceSpec::Kind::constant;
  }

  /// Stationary distribution of the volatility chain (markov models only).
  const std::vector<double>& stationary() const;

  /// xi_lo .. xi_hi of the conceptually two-sided sequence.  Deterministic in
  /// (model, lo, hi, seed); overlapping windows with the same seed agree on
  /// shared indices.  lo = hi + 1 yields an empty window.
  std::vector<double> sample_window(std::int64_t lo, std::int64_t hi,
                                    std::uint64_t seed) const;

  /// Volatility state at a single index (markov models), realized by
  /// coupling-from-the-past so that any window sees the same stationary path.
  int state_at(std::int64_t index, std::uint64_t seed) const;

  // Analytic marginal quantities (reject the constant hook).
  double tail_prob(double x) const;               ///< Pr(|xi_1| > x), x > 0
  double cdf(double x) const;                     ///< Pr(xi_1 <= x)
  double truncated_second_moment(double x) const; ///< E xi^2 I(|xi| <= x)
  double truncated_mean(double x) const;          ///< E xi   I(|xi| <= x)
  /// E |xi|^beta I(|xi| > x) (side above; needs beta < alpha) or
  /// E |xi|^beta I(|xi| <= x) (side below).
  double truncated_abs_moment(double beta, double x, bool above) const;
  /// E xi_1 (alpha > 1 only).
  double mean() const;

 private:
  double sample_base(std::int64_t index, std::uint64_t seed) const;

  DistributionSpec dist_;
  DependenceSpec dep_;
  std::vector<double> stationary_;
};

}  // namespace fclt
