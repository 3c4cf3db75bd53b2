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

#include <functional>
#include <stdexcept>
#include <string>

namespace fclt {

/// Raised when adaptive quadrature cannot reach the requested tolerance.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b] to the
/// absolute tolerance tol.  Throws NumericError when the interval budget is
/// exhausted before the error estimate drops below tol.
double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    double tol, int max_intervals = 200000);

}  // namespace fclt
