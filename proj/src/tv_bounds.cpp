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

#include "symmpoly/tv_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "symmpoly/error.hpp"

namespace symmpoly {
namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void undefined(const std::string& what) { fail(ErrorKind::BoundUndefined, what); }

void check_block(const char* name, int r, int s, int n) {
  if (r < 1 || s < 1 || !(r + s + 2 < n)) {
    undefined(std::string(name) + ": need r, s >= 1 and r + s + 2 < n");
  }
}

void check_segment(const char* name, int k, int n) {
  if (k < 1 || k > n - 5) undefined(std::string(name) + ": need 1 <= k <= n - 5");
}

int param(const std::map<std::string, int>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) undefined("missing parameter '" + key + "'");
  return it->second;
}

}  // namespace

double ortho_block_bound(int r, int s, int n) {
  check_block("ortho_block_bound", r, s, n);
  const double t = std::min(r, s);
  const double ratio = 1.0 - static_cast<double>(r + s + 2) / n;
  return 2.0 * (std::pow(ratio, -t * t / 2.0) - 1.0);
}

double sphere_marginal_bound(int k, int m) {
  if (k < 1 || k > m - 4) undefined("sphere_marginal_bound: need 1 <= k <= m - 4");
  return 2.0 * (k + 3.0) / (m - k - 3.0);
}

double unitary_block_bound(int r, int s, int n) {
  check_block("unitary_block_bound", r, s, n);
  const double t = std::min(r, s);
  const double ratio = 1.0 - static_cast<double>(r + s) / n;
  return 2.0 * (std::pow(ratio, -t * t) - 1.0);
}

double b2(int k, int n) {
  check_segment("b2", k, n);
  const double kd = k, nd = n;
  const double gap = nd - kd - 4.0;
  return 2.0 * ((2.0 * kd + 3.0) / (2.0 * nd - 2.0 * kd - 3.0) +
                (2.0 * nd - kd - 4.0) * (kd + 4.0) / (gap * gap));
}

double b3(int k, int n) {
  check_segment("b3", k, n);
  if (k == 1) return unitary_block_bound(1, 2, n) + sphere_marginal_bound(4, 4 * n);
  const double kd = k, nd = n;
  const double ratio = nd / (nd - kd - 2.0);
  const double ratio2 = ratio * ratio;
  return 2.0 * ((4.0 * kd + 3.0) / (4.0 * nd - 4.0 * kd - 3.0) + ratio2 * ratio2 - 1.0);
}

double asymptotic_slope(int dim, int k) {
  if (dim == 2) {
    if (k < 1) fail(ErrorKind::Domain, "asymptotic_slope: need k >= 1");
    return 6.0 * k + 19.0;
  }
  if (dim == 3) {
    if (k < 1) fail(ErrorKind::Domain, "asymptotic_slope: need k >= 1");
    // k = 1: 2 * 1 * (1 + 2) from the block term plus 2(4 + 3)/4 from the sphere term.
    return k == 1 ? 9.5 : 10.0 * k + 17.5;
  }
  fail(ErrorKind::InvalidDimension, "asymptotic_slope: dim must be 2 or 3");
}

double alpha_limit(int dim, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorKind::Domain, "alpha_limit: alpha must lie in (0, 1)");
  const double rest = 1.0 - alpha;
  if (dim == 2) return 2.0 * alpha * (3.0 - 2.0 * alpha) / (rest * rest);
  if (dim == 3) {
    const double rest2 = rest * rest;
    return 2.0 * (alpha / rest + 1.0 / (rest2 * rest2) - 1.0);
  }
  fail(ErrorKind::InvalidDimension, "alpha_limit: dim must be 2 or 3");
}

AlphaThreshold alpha_threshold_search(int dim, double tolerance) {
  if (dim != 2 && dim != 3) fail(ErrorKind::InvalidDimension, "alpha_threshold: dim must be 2 or 3");
  // The limit is continuous and increasing on (0, 1), tends to 0 at 0+ and
  // to infinity at 1-, so [0, 1] always brackets the root.
  double lo = 0.0, hi = 1.0;
  int iterations = 0;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (alpha_limit(dim, mid) > 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++iterations;
  }
  return {0.5 * (lo + hi), iterations};
}

double alpha_threshold(int dim) { return alpha_threshold_search(dim).alpha; }

double expectation_transfer_gap(double bound_m, int dim, int k, int n) {
  if (!(bound_m >= 0.0)) fail(ErrorKind::Domain, "expectation_transfer_gap: M must be >= 0");
  if (dim == 2) return bound_m * b2(k, n);
  if (dim == 3) return bound_m * b3(k, n);
  fail(ErrorKind::InvalidDimension, "expectation_transfer_gap: dim must be 2 or 3");
}

double curvature_variance_bound(int n) {
  if (n < 9) undefined("curvature_variance_bound: need n >= 9");
  const double npi = n * kPi;
  return npi * npi * b2(4, n);
}

double curvature_variance_bound_refined(int n, double eps) {
  if (n < 9) undefined("curvature_variance_bound_refined: need n >= 9");
  if (!(eps >= 0.0)) fail(ErrorKind::Domain, "curvature_variance_bound_refined: eps must be >= 0");
  const double nd = n;
  return kPi * kPi * (nd * b2(2, n) + 2.0 * nd * b2(3, n) + (nd * nd - 3.0 * nd) * b2(4, n)) -
         nd * nd * (kPi * eps + eps * eps);
}

double torsion_variance_bound(int n) {
  if (n < 11) undefined("torsion_variance_bound: need n >= 11");
  const double nd = n;
  return nd * kPi * kPi / 3.0 + nd * nd * kPi * kPi * b3(6, n);
}

ChebyshevInterval chebyshev_interval(double center, double var_bound, double lambda) {
  if (!(var_bound >= 0.0) || !(lambda > 0.0)) {
    fail(ErrorKind::Domain, "chebyshev_interval: need var_bound >= 0 and lambda > 0");
  }
  const double half = lambda * std::sqrt(var_bound);
  return {center - half, center + half, std::max(0.0, 1.0 - 1.0 / (lambda * lambda))};
}

std::string_view to_string(BoundFamily f) {
  switch (f) {
    case BoundFamily::ortho_block: return "ortho_block";
    case BoundFamily::sphere_marginal: return "sphere_marginal";
    case BoundFamily::unitary_block: return "unitary_block";
    case BoundFamily::b2: return "b2";
    case BoundFamily::b3: return "b3";
    case BoundFamily::curvature_var: return "curvature_var";
    case BoundFamily::torsion_var: return "torsion_var";
  }
  return "?";
}

std::optional<double> BoundEvaluation::clipped() const {
  if (!value) return std::nullopt;
  if (family == BoundFamily::curvature_var || family == BoundFamily::torsion_var) return value;
  return std::min(*value, 2.0);
}

BoundEvaluation evaluate_bound(BoundFamily family, const std::map<std::string, int>& params) {
  BoundEvaluation e{family, params, std::nullopt, std::nullopt};
  try {
    switch (family) {
      case BoundFamily::ortho_block: {
        const int r = param(params, "r"), s = param(params, "s"), n = param(params, "n");
        const double t = std::min(r, s);
        e.value = ortho_block_bound(r, s, n);
        e.asymptote_coeff = t * t * (r + s + 2);
        break;
      }
      case BoundFamily::sphere_marginal: {
        const int k = param(params, "k"), m = param(params, "m");
        e.value = sphere_marginal_bound(k, m);
        e.asymptote_coeff = 2.0 * (k + 3);
        break;
      }
      case BoundFamily::unitary_block: {
        const int r = param(params, "r"), s = param(params, "s"), n = param(params, "n");
        const double t = std::min(r, s);
        e.value = unitary_block_bound(r, s, n);
        e.asymptote_coeff = 2.0 * t * t * (r + s);
        break;
      }
      case BoundFamily::b2: {
        const int k = param(params, "k"), n = param(params, "n");
        e.value = b2(k, n);
        e.asymptote_coeff = asymptotic_slope(2, k);
        break;
      }
      case BoundFamily::b3: {
        const int k = param(params, "k"), n = param(params, "n");
        e.value = b3(k, n);
        e.asymptote_coeff = asymptotic_slope(3, k);
        break;
      }
      case BoundFamily::curvature_var:
        e.value = curvature_variance_bound(param(params, "n"));
        e.asymptote_coeff = kPi * kPi * asymptotic_slope(2, 4);
        break;
      case BoundFamily::torsion_var:
        e.value = torsion_variance_bound(param(params, "n"));
        e.asymptote_coeff = kPi * kPi * (1.0 / 3.0 + asymptotic_slope(3, 6));
        break;
    }
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::BoundUndefined) throw;
    e.value.reset();
    e.asymptote_coeff.reset();
  }
  return e;
}

}  // namespace symmpoly
