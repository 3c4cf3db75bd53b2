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

#include <cstddef>
#include <string>
#include <vector>

namespace fclt {

/// Completed-graph polyline: vertices (time, value), times nondecreasing;
/// vertical runs (equal times) encode jumps.
struct Polyline {
  std::vector<std::pair<double, double>> vertices;

  std::string to_csv() const;
};

/// A cadlag piecewise-constant function on [0, T]: an origin value plus
/// finitely many jumps at strictly increasing times in (0, T].
///
/// Construction canonicalizes: jump lists are sorted, jumps at equal times
/// are merged by summing sizes, and zero-size jumps are dropped, so distinct
/// canonical forms represent distinct functions.
class StepPath {
 public:
  /// Zero-jump path with the given origin.
  explicit StepPath(double horizon, double origin = 0.0);

  /// Canonicalizing constructor; times may arrive unsorted.
  StepPath(double horizon, double origin, std::vector<double> times,
           std::vector<double> sizes);

  double horizon() const { return horizon_; }
  double origin() const { return origin_; }
  std::size_t jump_count() const { return times_.size(); }
  const std::vector<double>& jump_times() const { return times_; }
  const std::vector<double>& jump_sizes() const { return sizes_; }

  /// Value right after the i-th jump; piece_value(-1)-style access is
  /// provided by value_before(0) == origin.
  double value_after(std::size_t i) const { return cum_[i + 1]; }
  /// Piece values v_0..v_N (v_0 = origin, v_i = value after jump i).
  const std::vector<double>& piece_values() const { return cum_; }

  /// x(t) for t in [0, T]; right-continuous.
  double eval(double t) const;
  /// Left limit x(t-); x(0-) is defined as the origin.
  double eval_left(double t) const;

  /// Final value x(T).
  double terminal() const { return cum_.back(); }

  bool operator==(const StepPath& other) const = default;

  /// Pointwise sum (equal horizons), canonicalized.
  friend StepPath add(const StepPath& x, const StepPath& y);

  /// Exact sup_t |x(t) - y(t)| (equal horizons).
  friend double uniform_distance(const StepPath& x, const StepPath& y);

  /// Completed graph with vertical segments filling each jump.
  Polyline completed_graph() const;

  /// CSV with an origin/horizon header block followed by (time, size) rows.
  std::string to_csv() const;
  static StepPath from_csv(const std::string& text);

 private:
  double horizon_;
  double origin_;
  std::vector<double> times_;
  std::vector<double> sizes_;
  std::vector<double> cum_;  // piece values v_0..v_N
};

}  // namespace fclt
