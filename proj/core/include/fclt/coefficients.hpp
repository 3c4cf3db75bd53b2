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
#include <limits>
#include <vector>

namespace fclt {

/// Two-sided moving-average coefficient sequence {a_k : k in Z}.
///
/// Three families: an explicit finite list a_{-K}..a_K, the geometric family
/// a_k = c rho^|k| (0 < rho < 1), and the polynomial family
/// a_k = c (1 + |k|)^(-beta) (beta > 0).  r-summability of sum |a_k|^r is
/// decidable per family, and tail masses / partial sums have closed or
/// tightly error-bounded forms.
class CoefficientSeq {
 public:
  enum class Kind { finite_list, geometric, polynomial };

  static CoefficientSeq finite(std::vector<double> values_centered);
  static CoefficientSeq geometric(double c, double rho);
  static CoefficientSeq polynomial(double c, double beta);

  Kind kind() const { return kind_; }
  double at(std::int64_t k) const;
  bool all_nonnegative() const;       ///< sign pattern of the sequence
  bool summable(double r) const;      ///< is sum |a_k|^r finite?

  /// sum_{|k| > K} |a_k|^r.  Exact for finite and geometric; for polynomial,
  /// explicit partial summation plus an Euler-Maclaurin remainder with
  /// absolute error below 1e-12.
  double tail_mass(double r, std::int64_t K) const;

  /// Smallest K with tail_mass(r, K) <= tol.
  std::int64_t choose_truncation(double r, double tol) const;

  /// A_m = sum_{|k| <= m} a_k; pass m = kInfinite for the full mass A.
  double total_mass(std::int64_t m = kInfinite) const;

  /// Materialized a_{-K} .. a_K.
  std::vector<double> window(std::int64_t K) const;

  static constexpr std::int64_t kInfinite =
      std::numeric_limits<std::int64_t>::max();

  // Family parameters (used by the config echo).
  double param_c() const { return c_; }
  double param_rho() const { return rho_; }
  double param_beta() const { return beta_; }
  const std::vector<double>& values() const { return values_; }

 private:
  CoefficientSeq() = default;

  Kind kind_ = Kind::finite_list;
  std::vector<double> values_;  // finite_list, centered at index K_
  std::int64_t half_width_ = 0;
  double c_ = 0.0;
  double rho_ = 0.0;
  double beta_ = 0.0;
};

}  // namespace fclt
