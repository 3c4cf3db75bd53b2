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

#include "fclt/skorohod.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

namespace fclt {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double j1_distance(const StepPath& x, const StepPath& y) {
  if (x.horizon() != y.horizon())
    throw std::invalid_argument("j1_distance: horizon mismatch");
  const double T = x.horizon();
  const auto& sx = x.jump_times();
  const auto& sy = y.jump_times();
  const auto& ux = x.piece_values();
  const auto& wy = y.piece_values();
  const std::size_t p = sx.size(), q = sy.size();

  // d(i, j): best bottleneck cost with i jumps of x and j jumps of y
  // consumed.  Transitions: skip an x jump (free in time), place a y jump in
  // the current inter-jump gap of x (costs its distance to that gap), or
  // match the two next jumps (costs their time offset).
  std::vector<double> prev(q + 1), cur(q + 1);
  auto gap_cost = [&](std::size_t i, double t) {
    const double lo = i == 0 ? 0.0 : sx[i - 1];
    const double hi = i == p ? T : sx[i];
    return std::max({0.0, lo - t, t - hi});
  };
  for (std::size_t i = 0; i <= p; ++i) {
    for (std::size_t j = 0; j <= q; ++j) {
      double best;
      if (i == 0 && j == 0)
        best = 0.0;
      else {
        best = kInf;
        if (i >= 1) best = std::min(best, prev[j]);
        if (j >= 1)
          best = std::min(best, std::max(cur[j - 1], gap_cost(i, sy[j - 1])));
        if (i >= 1 && j >= 1)
          best = std::min(
              best, std::max(prev[j - 1], std::fabs(sx[i - 1] - sy[j - 1])));
      }
      cur[j] = std::max(std::fabs(ux[i] - wy[j]), best);
    }
    std::swap(prev, cur);
  }
  return prev[q];
}

Polyline refine_polyline(const Polyline& g, double eps) {
  Polyline out;
  if (g.vertices.empty()) return out;
  out.vertices.push_back(g.vertices.front());
  for (std::size_t i = 1; i < g.vertices.size(); ++i) {
    const auto [t0, v0] = g.vertices[i - 1];
    const auto [t1, v1] = g.vertices[i];
    const double len = std::max(std::fabs(t1 - t0), std::fabs(v1 - v0));
    // Dyadic subdivision counts keep refinements nested across eps levels.
    std::size_t pieces = 1;
    while (len / static_cast<double>(pieces) > eps && pieces < (1u << 30))
      pieces *= 2;
    for (std::size_t k = 1; k <= pieces; ++k) {
      const double f = static_cast<double>(k) / static_cast<double>(pieces);
      out.vertices.emplace_back(t0 + f * (t1 - t0), v0 + f * (v1 - v0));
    }
  }
  return out;
}

double discrete_frechet_box(const Polyline& a, const Polyline& b) {
  const auto& A = a.vertices;
  const auto& B = b.vertices;
  if (A.empty() || B.empty())
    throw std::invalid_argument("discrete_frechet_box: empty polyline");
  auto dist = [&](std::size_t i, std::size_t j) {
    return std::max(std::fabs(A[i].first - B[j].first),
                    std::fabs(A[i].second - B[j].second));
  };
  std::vector<double> prev(B.size()), cur(B.size());
  for (std::size_t j = 0; j < B.size(); ++j)
    prev[j] = std::max(j == 0 ? 0.0 : prev[j - 1], dist(0, j));
  for (std::size_t i = 1; i < A.size(); ++i) {
    cur[0] = std::max(prev[0], dist(i, 0));
    for (std::size_t j = 1; j < B.size(); ++j)
      cur[j] = std::max(std::min({prev[j], cur[j - 1], prev[j - 1]}),
                        dist(i, j));
    std::swap(prev, cur);
  }
  return prev[B.size() - 1];
}

double m1_distance(const StepPath& x, const StepPath& y, double refine_eps) {
  if (!(refine_eps > 0.0))
    throw std::invalid_argument("m1_distance: refine_eps must be > 0");
  if (x.horizon() != y.horizon())
    throw std::invalid_argument("m1_distance: horizon mismatch");
  const Polyline ga = refine_polyline(x.completed_graph(), refine_eps);
  const Polyline gb = refine_polyline(y.completed_graph(), refine_eps);
  return discrete_frechet_box(ga, gb);
}

double m1_modulus(const StepPath& x, double delta) {
  const double T = x.horizon();
  if (!(delta > 0.0) || delta > T)
    throw std::invalid_argument("m1_modulus: need 0 < delta <= T");
  const auto& tau = x.jump_times();
  const auto& v = x.piece_values();
  const std::size_t N = tau.size();
  if (N == 0) return 0.0;
  // Piece i covers [tau_i, tau_{i+1}) with tau_0 = 0, tau_{N+1} = T.  Pieces
  // i1 < i3 admit t1 in piece i1 and t3 in piece i3 with t3 - t1 <= delta
  // iff the start of piece i3 is less than delta past the end of piece i1;
  // interior pieces supply the candidate x(t2) values.
  double best = 0.0;
  for (std::size_t i1 = 0; i1 < N; ++i1) {
    const double t_exit = tau[i1];  // upper end of piece i1
    double lo = v[i1], hi = v[i1];
    for (std::size_t i3 = i1 + 1; i3 <= N; ++i3) {
      if (!(tau[i3 - 1] - t_exit < delta)) break;
      if (i3 > i1 + 1) {
        lo = std::min(lo, v[i3 - 1]);
        hi = std::max(hi, v[i3 - 1]);
      }
      const double a = v[i1], b = v[i3];
      best = std::max({best, hi - std::max(a, b), std::min(a, b) - lo});
    }
  }
  return best;
}

namespace {

// Feasibility core of the w' modulus.  Cuts either fall strictly between
// jumps (the neighbouring cells share the intermediate piece value) or
// exactly on a jump time, which assigns that jump to neither cell.  States
// are indexed by the next unassigned jump i (1-based) with p[i] = infimum of
// the last-cut position; minp[e] = min over blocks ending at e (including
// the empty block) of the reachable predecessor p.
bool wprime_feasible(const std::vector<double>& tau,
                     const std::vector<double>& v, double T, double delta,
                     double lambda) {
  const std::size_t N = tau.size();
  const double eps = 1e-15 * (1.0 + std::fabs(lambda));
  std::vector<double> p(N + 2, kInf);
  p[1] = 0.0;
  std::vector<double> minp(N + 1, kInf);

  std::deque<std::size_t> maxd, mind;  // v-indices, window [lo-1 .. e]
  std::deque<std::size_t> pd;          // block starts j, increasing p[j]
  std::size_t lo = 1;                  // smallest admissible block start
  auto push_v = [&](std::size_t idx) {
    while (!maxd.empty() && v[maxd.back()] <= v[idx]) maxd.pop_back();
    maxd.push_back(idx);
    while (!mind.empty() && v[mind.back()] >= v[idx]) mind.pop_back();
    mind.push_back(idx);
  };
  auto push_p = [&](std::size_t j) {
    if (p[j] == kInf) return;
    while (!pd.empty() && p[pd.back()] >= p[j]) pd.pop_back();
    pd.push_back(j);
  };

  push_v(0);  // v_0 enters with block start j = 1
  push_p(1);
  minp[0] = p[1];  // block ending at 0 can only be the empty one (j = 1)
  for (std::size_t e = 1; e <= N; ++e) {
    push_v(e);
    while (v[maxd.front()] - v[mind.front()] > lambda + eps) {
      ++lo;  // window over v now starts at lo - 1
      while (!maxd.empty() && maxd.front() + 1 < lo) maxd.pop_front();
      while (!mind.empty() && mind.front() + 1 < lo) mind.pop_front();
      while (!pd.empty() && pd.front() < lo) pd.pop_front();
    }
    const double m_block = pd.empty() ? kInf : p[pd.front()];
    const double t_next = e < N ? tau[e] : T;  // tau_{e+1}, tau_{N+1} := T
    double cand = kInf;
    // Open cut in (tau_e, tau_{e+1}) after a (nonempty) block j..e.
    if (m_block + delta < t_next) cand = std::max(tau[e - 1], m_block + delta);
    // Cut exactly at tau_e after a block ending at e-1: jump e is split off.
    if (minp[e - 1] != kInf && tau[e - 1] > minp[e - 1] + delta)
      cand = std::min(cand, tau[e - 1]);
    p[e + 1] = cand;
    push_p(e + 1);
    // minp[e] also admits the empty block j = e+1 sitting after a cut.
    minp[e] = pd.empty() ? kInf : p[pd.front()];
  }

  // Accept from any state whose final cell oscillation fits.
  std::vector<double> sufmax(N + 2), sufmin(N + 2);
  sufmax[N + 1] = -kInf;
  sufmin[N + 1] = kInf;
  for (std::size_t i = N + 1; i-- > 0;) {
    sufmax[i] = std::max(v[i], sufmax[i + 1]);
    sufmin[i] = std::min(v[i], sufmin[i + 1]);
  }
  for (std::size_t i = 1; i <= N + 1; ++i) {
    if (p[i] == kInf) continue;
    const double osc = sufmax[i - 1] - sufmin[i - 1];
    if (osc <= lambda + eps && T > p[i] + delta) return true;
  }
  return false;
}

}  // namespace

double j1_modulus(const StepPath& x, double delta) {
  const double T = x.horizon();
  if (!(delta > 0.0) || !(delta < T))
    throw std::invalid_argument("j1_modulus: need 0 < delta < T");
  const auto& tau = x.jump_times();
  const auto& v = x.piece_values();
  if (tau.empty()) return 0.0;
  if (wprime_feasible(tau, v, T, delta, 0.0)) return 0.0;
  double lo = 0.0;
  double hi = *std::max_element(v.begin(), v.end()) -
              *std::min_element(v.begin(), v.end());
  for (int it = 0; it < 80 && hi - lo > 1e-13 * (1.0 + hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (wprime_feasible(tau, v, T, delta, mid) ? hi : lo) = mid;
  }
  return hi;
}

double split_jump_statistic(const StepPath& x, double window) {
  if (!(window > 0.0))
    throw std::invalid_argument("split_jump_statistic: window must be > 0");
  const auto& tau = x.jump_times();
  const auto& sz = x.jump_sizes();
  double best = 0.0;
  std::size_t j = 0;
  for (std::size_t i = 1; i < tau.size(); ++i) {
    while (tau[i] - tau[j] > window) ++j;
    for (std::size_t k = j; k < i; ++k)
      best = std::max(best, std::min(std::fabs(sz[k]), std::fabs(sz[i])));
  }
  return best;
}

}  // namespace fclt
