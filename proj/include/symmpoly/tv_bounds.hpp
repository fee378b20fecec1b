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

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace symmpoly {

// Closed-form total-variation bounds. TV is unnormalized throughout
// (integral of |dmu - dnu|, at most 2). Every function throws
// ErrorKind::BoundUndefined when its parameters fall outside the range where
// the formula is valid.

/// 2((1 - (r+s+2)/n)^{-t^2/2} - 1), t = min(r, s): upper r x s block of a
/// Haar orthogonal matrix vs. N(0, I/n). Requires r + s + 2 < n.
double ortho_block_bound(int r, int s, int n);

/// 2(k+3)/(m-k-3): first k coordinates of a uniform point on S^{m-1}(r) vs.
/// i.i.d. N(0, r^2/m). Requires 1 <= k <= m - 4.
double sphere_marginal_bound(int k, int m);

/// 2((1 - (r+s)/n)^{-t^2} - 1), t = min(r, s): the unitary analogue.
/// Requires r + s + 2 < n.
double unitary_block_bound(int r, int s, int n);

/// Planar k-segment bound, 1 <= k <= n - 5:
/// 2((2k+3)/(2n-2k-3) + (2n-k-4)(k+4)/(n-k-4)^2).
double b2(int k, int n);

/// Spatial k-segment bound, 1 <= k <= n - 5. For k >= 2 this is
/// 2((4k+3)/(4n-4k-3) + n^4/(n-k-2)^4 - 1); for k = 1 (where min(k, 2) = 1)
/// the same assembly unitary_block_bound(1, 2, n) + sphere_marginal_bound(4, 4n).
double b3(int k, int n);

/// lim n * b_dim(k, n): 6k + 19 (planar), 10k + 35/2 (spatial, k >= 2) and
/// 19/2 for the spatial k = 1 assembly.
double asymptotic_slope(int dim, int k);

/// lim b_dim(alpha n, n) for 0 < alpha < 1:
/// 2 alpha (3 - 2 alpha)/(1 - alpha)^2 (planar) and
/// 2(alpha/(1-alpha) + (1-alpha)^{-4} - 1) (spatial).
double alpha_limit(int dim, double alpha);

struct AlphaThreshold {
  double alpha;
  int iterations;
};

/// Root of alpha_limit(dim, alpha) = 1 in (0, 1) by bisection to `tolerance`.
AlphaThreshold alpha_threshold_search(int dim, double tolerance = 1e-12);
double alpha_threshold(int dim);

/// |E_pol f - E_arm f| <= M * b_dim(k, n) for |f| <= M depending on k edges.
double expectation_transfer_gap(double bound_m, int dim, int k, int n);

/// (n pi)^2 b2(4, n); n >= 9.
double curvature_variance_bound(int n);

/// pi^2 (n b2(2,n) + 2n b2(3,n) + (n^2 - 3n) b2(4,n)) - n^2 (pi eps + eps^2),
/// where eps >= 0 is the excess of E_pol[theta_1] over pi/2.
double curvature_variance_bound_refined(int n, double eps);

/// n pi^2 / 3 + n^2 pi^2 b3(6, n); n >= 11.
double torsion_variance_bound(int n);

struct ChebyshevInterval {
  double lo;
  double hi;
  double min_coverage;  // max(0, 1 - 1/lambda^2)
};

ChebyshevInterval chebyshev_interval(double center, double var_bound, double lambda);

enum class BoundFamily {
  ortho_block,
  sphere_marginal,
  unitary_block,
  b2,
  b3,
  curvature_var,
  torsion_var,
};

std::string_view to_string(BoundFamily f);

/// Uniform record of one bound evaluation. `value` is empty exactly when the
/// parameters are outside the formula's range. `asymptote_coeff` is the
/// leading coefficient: value ~ coeff / n for TV bounds (n is the last
/// parameter, m for sphere_marginal) and value ~ coeff * n for the variance
/// bounds.
struct BoundEvaluation {
  BoundFamily family;
  std::map<std::string, int> params;
  std::optional<double> value;
  std::optional<double> asymptote_coeff;

  bool valid() const { return value.has_value(); }
  /// Value clipped to the TV maximum 2 (variance bounds are not clipped).
  std::optional<double> clipped() const;
};

/// Recognised parameter names: r, s, n for the block bounds; k, m for
/// sphere_marginal; k, n for b2/b3; n for the variance bounds.
BoundEvaluation evaluate_bound(BoundFamily family, const std::map<std::string, int>& params);

}  // namespace symmpoly
