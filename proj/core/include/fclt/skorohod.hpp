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

#include "fclt/step_path.hpp"

namespace fclt {

/// J1 distance between step paths:
///   inf over increasing bijections lambda of
///   max( sup |lambda(t) - t|, sup |x(t) - y(lambda(t))| ).
///
/// For step paths the infimum is attained (in the closure) by piecewise
/// linear lambdas pinned at an order-preserving partial matching of the two
/// jump sequences, so the metric reduces to a bottleneck dynamic program
/// over the matching grid: a matched pair costs its time offset, an
/// unmatched jump of y costs its distance to the hosting inter-jump gap of
/// x, and every visited value pair costs its discrepancy.  Exact up to
/// floating-point rounding.
double j1_distance(const StepPath& x, const StepPath& y);

/// M1 distance: discrete Frechet distance between the two completed graphs
/// under the box metric max(|dt|, |dvalue|), after refining both graphs so
/// that no segment is longer than refine_eps (dyadic subdivision, so finer
/// eps refines coarser ones and the value is nonincreasing in refine_eps).
/// The result is within refine_eps of the true M1 distance.
double m1_distance(const StepPath& x, const StepPath& y, double refine_eps);

/// Segment-oscillation modulus: sup over t1 <= t2 <= t3 with t3 - t1 <= delta
/// of the distance from x(t2) to the closed segment [x(t1), x(t3)].  Exact
/// for step paths (enumerates piece triples).
double m1_modulus(const StepPath& x, double delta);

/// Classical w' modulus: inf over partitions 0 = t_0 < ... < t_k = T with
/// min gap > delta of the max oscillation of x inside the cells [t_{i-1},
/// t_i).  Computed by a feasibility dynamic program over jump blocks (cuts
/// may fall strictly between jumps or exactly on one, which splits the jump
/// across the boundary) plus bisection on the oscillation level; the
/// bisection terminates below 1e-12 absolute.
double j1_modulus(const StepPath& x, double delta);

/// Max over pairs of jumps within time-distance <= window of the smaller
/// absolute jump size; 0 when no such pair exists.  A positive value forces
/// j1_modulus(x, delta) >= that value for delta >= window.
double split_jump_statistic(const StepPath& x, double window);

/// Refined completed graph used by m1_distance (exposed for tests/plots).
Polyline refine_polyline(const Polyline& g, double eps);

/// Discrete Frechet distance between polylines under the box metric.
double discrete_frechet_box(const Polyline& a, const Polyline& b);

}  // namespace fclt
