/*
   Copyright 2026 The symmpoly Authors

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

namespace symmpoly {

/// Regularized incomplete beta I_x(a, b) (Boost.Math).
double regularized_incomplete_beta(double a, double b, double x);

/// CDF of Beta(a, b).
double beta_cdf(double x, double a, double b);

/// Adaptive Gauss-Kronrod (7/15) quadrature on [lo, hi]; hi may be +inf.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol = 1e-12, double rel_tol = 1e-12);

/// Integral over [lo, inf).
double integrate_to_infinity(const std::function<double(double)>& f, double lo,
                             double abs_tol = 1e-12, double rel_tol = 1e-12);

}  // namespace symmpoly
