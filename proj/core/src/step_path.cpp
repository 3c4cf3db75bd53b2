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

#include "fclt/step_path.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fclt {
namespace {

void rebuild_cum(double origin, const std::vector<double>& sizes,
                 std::vector<double>& cum) {
  cum.assign(1, origin);
  cum.reserve(sizes.size() + 1);
  for (double s : sizes) cum.push_back(cum.back() + s);
}

}  // namespace

StepPath::StepPath(double horizon, double origin)
    : horizon_(horizon), origin_(origin) {
  if (!(horizon > 0.0))
    throw std::invalid_argument("StepPath: horizon must be positive");
  rebuild_cum(origin_, sizes_, cum_);
}

StepPath::StepPath(double horizon, double origin, std::vector<double> times,
                   std::vector<double> sizes)
    : horizon_(horizon), origin_(origin) {
  if (!(horizon > 0.0))
    throw std::invalid_argument("StepPath: horizon must be positive");
  if (times.size() != sizes.size())
    throw std::invalid_argument("StepPath: times/sizes length mismatch");
  std::vector<std::size_t> order(times.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return times[a] < times[b]; });
  times_.reserve(times.size());
  sizes_.reserve(times.size());
  for (std::size_t idx : order) {
    const double t = times[idx];
    const double s = sizes[idx];
    if (!(t > 0.0) || t > horizon_)
      throw std::invalid_argument("StepPath: jump time outside (0, T]");
    if (!times_.empty() && times_.back() == t)
      sizes_.back() += s;  // merge coincident jumps
    else {
      times_.push_back(t);
      sizes_.push_back(s);
    }
    if (sizes_.back() == 0.0) {  // drop cancelled jumps
      times_.pop_back();
      sizes_.pop_back();
    }
  }
  rebuild_cum(origin_, sizes_, cum_);
}

double StepPath::eval(double t) const {
  if (t < 0.0 || t > horizon_)
    throw std::invalid_argument("eval: t outside [0, T]");
  const auto it = std::upper_bound(times_.begin(), times_.end(), t);
  return cum_[static_cast<std::size_t>(it - times_.begin())];
}

double StepPath::eval_left(double t) const {
  if (t < 0.0 || t > horizon_)
    throw std::invalid_argument("eval_left: t outside [0, T]");
  const auto it = std::lower_bound(times_.begin(), times_.end(), t);
  return cum_[static_cast<std::size_t>(it - times_.begin())];
}

StepPath add(const StepPath& x, const StepPath& y) {
  if (x.horizon_ != y.horizon_)
    throw std::invalid_argument("add: horizon mismatch");
  std::vector<double> times;
  std::vector<double> sizes;
  times.reserve(x.times_.size() + y.times_.size());
  sizes.reserve(times.capacity());
  times.insert(times.end(), x.times_.begin(), x.times_.end());
  sizes.insert(sizes.end(), x.sizes_.begin(), x.sizes_.end());
  times.insert(times.end(), y.times_.begin(), y.times_.end());
  sizes.insert(sizes.end(), y.sizes_.begin(), y.sizes_.end());
  return StepPath(x.horizon_, x.origin_ + y.origin_, std::move(times),
                  std::move(sizes));
}

double uniform_distance(const StepPath& x, const StepPath& y) {
  if (x.horizon_ != y.horizon_)
    throw std::invalid_argument("uniform_distance: horizon mismatch");
  double best = std::fabs(x.origin_ - y.origin_);
  std::size_t i = 0, j = 0;
  while (i < x.times_.size() || j < y.times_.size()) {
    const double tx = i < x.times_.size() ? x.times_[i]
                                          : std::numeric_limits<double>::infinity();
    const double ty = j < y.times_.size() ? y.times_[j]
                                          : std::numeric_limits<double>::infinity();
    if (tx <= ty) ++i;
    if (ty <= tx) ++j;
    best = std::max(best, std::fabs(x.cum_[i] - y.cum_[j]));
  }
  return best;
}

Polyline StepPath::completed_graph() const {
  Polyline g;
  g.vertices.reserve(2 * times_.size() + 2);
  g.vertices.emplace_back(0.0, origin_);
  for (std::size_t i = 0; i < times_.size(); ++i) {
    g.vertices.emplace_back(times_[i], cum_[i]);      // end of constant run
    g.vertices.emplace_back(times_[i], cum_[i + 1]);  // jump segment
  }
  if (g.vertices.back() != std::pair{horizon_, cum_.back()})
    g.vertices.emplace_back(horizon_, cum_.back());
  // Collapse duplicate consecutive vertices (first run may be empty).
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()),
                   g.vertices.end());
  return g;
}

std::string StepPath::to_csv() const {
  char buf[128];
  std::string out = "origin,horizon\n";
  std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", origin_, horizon_);
  out += buf;
  out += "time,size\n";
  for (std::size_t i = 0; i < times_.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", times_[i], sizes_[i]);
    out += buf;
  }
  return out;
}

StepPath StepPath::from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "origin,horizon")
    throw std::invalid_argument("StepPath::from_csv: bad header");
  if (!std::getline(in, line))
    throw std::invalid_argument("StepPath::from_csv: missing origin/horizon");
  double origin = 0.0, horizon = 0.0;
  if (std::sscanf(line.c_str(), "%lg,%lg", &origin, &horizon) != 2)
    throw std::invalid_argument("StepPath::from_csv: bad origin/horizon");
  if (!std::getline(in, line) || line != "time,size")
    throw std::invalid_argument("StepPath::from_csv: bad column header");
  std::vector<double> times, sizes;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double t = 0.0, s = 0.0;
    if (std::sscanf(line.c_str(), "%lg,%lg", &t, &s) != 2)
      throw std::invalid_argument("StepPath::from_csv: bad row");
    times.push_back(t);
    sizes.push_back(s);
  }
  return StepPath(horizon, origin, std::move(times), std::move(sizes));
}

std::string Polyline::to_csv() const {
  std::string out = "time,value\n";
  char buf[128];
  for (const auto& [t, v] : vertices) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", t, v);
    out += buf;
  }
  return out;
}

}  // namespace fclt
