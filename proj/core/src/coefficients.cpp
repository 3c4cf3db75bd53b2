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

#include "fclt/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace fclt {
namespace {

// sum_{m >= M} m^(-q) for q > 1: explicit summation of the first block plus
// an Euler-Maclaurin tail.  The first omitted EM correction is of order
// q(q+1)(q+2) M'^(-q-3) / 720, far below 1e-12 for M' >= 4096.
double zeta_tail(double q, std::int64_t M) {
  if (!(q > 1.0)) throw std::invalid_argument("zeta_tail: q must be > 1");
  const std::int64_t block_end = std::max<std::int64_t>(M + 1, 4096);
  double s = 0.0;
  for (std::int64_t m = M; m < block_end; ++m)
    s += std::pow(static_cast<double>(m), -q);
  const double x = static_cast<double>(block_end);
  s += std::pow(x, 1.0 - q) / (q - 1.0) + 0.5 * std::pow(x, -q) -
       q / 12.0 * std::pow(x, -q - 1.0);
  return s;
}

}  // namespace

CoefficientSeq CoefficientSeq::finite(std::vector<double> values_centered) {
  if (values_centered.empty() || values_centered.size() % 2 == 0)
    throw std::invalid_argument(
        "finite coefficient list must have odd length (a_{-K}..a_K)");
  CoefficientSeq s;
  s.kind_ = Kind::finite_list;
  s.half_width_ = static_cast<std::int64_t>(values_centered.size() / 2);
  s.values_ = std::move(values_centered);
  return s;
}

CoefficientSeq CoefficientSeq::geometric(double c, double rho) {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::invalid_argument("geometric: rho must lie in (0, 1)");
  CoefficientSeq s;
  s.kind_ = Kind::geometric;
  s.c_ = c;
  s.rho_ = rho;
  return s;
}

CoefficientSeq CoefficientSeq::polynomial(double c, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("polynomial: beta must be > 0");
  CoefficientSeq s;
  s.kind_ = Kind::polynomial;
  s.c_ = c;
  s.beta_ = beta;
  return s;
}

double CoefficientSeq::at(std::int64_t k) const {
  const std::int64_t a = std::llabs(k);
  switch (kind_) {
    case Kind::finite_list:
      if (a > half_width_) return 0.0;
      return values_[static_cast<std::size_t>(k + half_width_)];
    case Kind::geometric:
      return c_ * std::pow(rho_, static_cast<double>(a));
    case Kind::polynomial:
      return c_ * std::pow(1.0 + static_cast<double>(a), -beta_);
  }
  return 0.0;
}

bool CoefficientSeq::all_nonnegative() const {
  if (kind_ != Kind::finite_list) return c_ >= 0.0;
  for (double v : values_)
    if (v < 0.0) return false;
  return true;
}

bool CoefficientSeq::summable(double r) const {
  if (!(r > 0.0)) return false;
  switch (kind_) {
    case Kind::finite_list:
    case Kind::geometric:
      return true;
    case Kind::polynomial:
      return beta_ * r > 1.0;
  }
  return false;
}

double CoefficientSeq::tail_mass(double r, std::int64_t K) const {
  if (K < 0) throw std::invalid_argument("tail_mass: K must be >= 0");
  if (!summable(r))
    throw std::invalid_argument("tail_mass: sum |a_k|^r diverges");
  switch (kind_) {
    case Kind::finite_list: {
      double s = 0.0;
      for (std::int64_t k = K + 1; k <= half_width_; ++k)
        s += std::pow(std::fabs(at(k)), r) + std::pow(std::fabs(at(-k)), r);
      return s;
    }
    case Kind::geometric: {
      const double rr = std::pow(rho_, r);
      return 2.0 * std::pow(std::fabs(c_), r) *
             std::pow(rho_, r * static_cast<double>(K + 1)) / (1.0 - rr);
    }
    case Kind::polynomial:
      // |k| > K means 1 + |k| >= K + 2 on each side.
      return 2.0 * std::pow(std::fabs(c_), r) * zeta_tail(beta_ * r, K + 2);
  }
  return 0.0;
}

std::int64_t CoefficientSeq::choose_truncation(double r, double tol) const {
  if (!(tol > 0.0)) throw std::invalid_argument("choose_truncation: tol <= 0");
  if (!summable(r))
    throw std::invalid_argument("choose_truncation: sum |a_k|^r diverges");
  if (tail_mass(r, 0) <= tol) return 0;
  std::int64_t hi = 1;
  while (tail_mass(r, hi) > tol) {
    if (hi > (std::int64_t{1} << 33))
      throw std::invalid_argument(
          "choose_truncation: tolerance needs an impractically large K");
    hi *= 2;
  }
  std::int64_t lo = hi / 2;  // tail_mass(lo) > tol
  while (lo + 1 < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (tail_mass(r, mid) <= tol ? hi : lo) = mid;
  }
  return hi;
}

double CoefficientSeq::total_mass(std::int64_t m) const {
  if (m < 0) throw std::invalid_argument("total_mass: m must be >= 0");
  const bool infinite = (m == kInfinite);
  switch (kind_) {
    case Kind::finite_list: {
      const std::int64_t top = infinite ? half_width_ : std::min(m, half_width_);
      double s = at(0);
      for (std::int64_t k = 1; k <= top; ++k) s += at(k) + at(-k);
      return s;
    }
    case Kind::geometric: {
      if (infinite) return c_ * (1.0 + 2.0 * rho_ / (1.0 - rho_));
      return c_ * (1.0 + 2.0 * rho_ * (1.0 - std::pow(rho_, static_cast<double>(m))) /
                             (1.0 - rho_));
    }
    case Kind::polynomial: {
      if (infinite) {
        if (!(beta_ > 1.0))
          throw std::invalid_argument("total_mass: sum |a_k| diverges");
        return c_ * (1.0 + 2.0 * zeta_tail(beta_, 2));
      }
      double s = at(0);
      for (std::int64_t k = 1; k <= m; ++k) s += 2.0 * at(k);
      return s;
    }
  }
  return 0.0;
}

std::vector<double> CoefficientSeq::window(std::int64_t K) const {
  if (K < 0) throw std::invalid_argument("window: K must be >= 0");
  std::vector<double> w(static_cast<std::size_t>(2 * K + 1));
  for (std::int64_t k = -K; k <= K; ++k)
    w[static_cast<std::size_t>(k + K)] = at(k);
  return w;
}

}  // namespace fclt
