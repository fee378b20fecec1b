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

#include "symmpoly/special.hpp"

#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "symmpoly/error.hpp"

namespace symmpoly {
namespace {

constexpr unsigned kMaxDepth = 15;
// Estimates above this are treated as a failed integration.
constexpr double kHardError = 1e-6;

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) fail(ErrorKind::Domain, "incomplete beta: need a, b > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return boost::math::ibeta(a, b, x);
}

double beta_cdf(double x, double a, double b) { return regularized_incomplete_beta(a, b, x); }

double integrate(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
                 double rel_tol) {
  if (hi < lo) return -integrate(f, hi, lo, abs_tol, rel_tol);
  if (hi == lo) return 0.0;
  double error = 0.0, l1 = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, lo, hi, kMaxDepth, rel_tol, &error, &l1);
  if (!std::isfinite(value)) fail(ErrorKind::Domain, "integrate: non-finite result");
  if (error > std::max(abs_tol, rel_tol * l1) && error > kHardError * std::max(1.0, l1)) {
    fail(ErrorKind::Reliability, "integrate: tolerance not reached");
  }
  return value;
}

double integrate_to_infinity(const std::function<double(double)>& f, double lo, double abs_tol,
                             double rel_tol) {
  return integrate(f, lo, std::numeric_limits<double>::infinity(), abs_tol, rel_tol);
}

}  // namespace symmpoly
