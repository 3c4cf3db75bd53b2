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

#include "fclt/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace fclt {
namespace {

// Kronrod-15 nodes/weights on [-1, 1] and the embedded Gauss-7 weights.
constexpr double kXgk[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,                0.207784955007898,
    0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
constexpr double kWgk[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
constexpr double kWg[7] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469,
                           0.381830050505119, 0.279705391489277,
                           0.129484966168870};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate(const std::function<double(double)>& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  double k15 = 0.0, g7 = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double y = f(c + h * kXgk[i]);
    k15 += kWgk[i] * y;
    if (i % 2 == 1) g7 += kWg[i / 2] * y;
  }
  return {a, b, k15 * h, std::fabs((k15 - g7) * h)};
}

}  // namespace

double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    double tol, int max_intervals) {
  if (!(b > a)) return 0.0;
  std::priority_queue<Panel> queue;
  queue.push(evaluate(f, a, b));
  double total = queue.top().value;
  double total_err = queue.top().error;
  int used = 1;
  while (total_err > tol) {
    if (used >= max_intervals || queue.empty())
      throw NumericError("integrate_gk: no convergence after " +
                         std::to_string(used) + " panels (err=" +
                         std::to_string(total_err) + ", tol=" +
                         std::to_string(tol) + ")");
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = evaluate(f, worst.a, mid);
    const Panel right = evaluate(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++used;
  }
  return total;
}

}  // namespace fclt
