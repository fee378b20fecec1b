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

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "symmpoly/error.hpp"
#include "symmpoly/polygon.hpp"

namespace symmpoly {

inline constexpr double kDegenerateEdgeNorm = 1e-14;
inline constexpr double kDegenerateProjectionNorm = 1e-12;

/// Unsigned angle in [0, pi] between consecutive edges u and v.
template <typename DerivedU, typename DerivedV>
typename DerivedU::Scalar turning_angle(const Eigen::MatrixBase<DerivedU>& u,
                                        const Eigen::MatrixBase<DerivedV>& v) {
  using Scalar = typename DerivedU::Scalar;
  const Scalar nu = u.norm();
  const Scalar nv = v.norm();
  if (nu <= kDegenerateEdgeNorm || nv <= kDegenerateEdgeNorm) {
    fail(ErrorKind::DegenerateEdge, "turning_angle: degenerate edge");
  }
  const Scalar c = std::clamp<Scalar>(u.dot(v) / (nu * nv), Scalar(-1), Scalar(1));
  return std::acos(c);
}

/// Torsion (dihedral) angle at edge b in (-pi, pi].
///
/// a and c are projected onto the plane normal to b; with x = a_perp/|a_perp|
/// and y = b_hat x x, phi = atan2(<c_perp, y>, <c_perp, x>) and the result is
/// pi - phi wrapped into (-pi, pi]. A planar zig-zag gives 0, a planar
/// "staple" (a and c parallel) gives pi.
template <typename DerivedA, typename DerivedB, typename DerivedC>
typename DerivedA::Scalar torsion_angle(const Eigen::MatrixBase<DerivedA>& a,
                                        const Eigen::MatrixBase<DerivedB>& b,
                                        const Eigen::MatrixBase<DerivedC>& c) {
  using Scalar = typename DerivedA::Scalar;
  using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
  if (a.size() != 3 || b.size() != 3 || c.size() != 3) {
    fail(ErrorKind::InvalidDimension, "torsion_angle: edges must be 3-vectors");
  }
  const Scalar nb = b.norm();
  if (nb <= kDegenerateEdgeNorm) fail(ErrorKind::DegenerateEdge, "torsion_angle: degenerate middle edge");
  const Vec3 b_hat = b / nb;
  const Vec3 u = a - a.dot(b_hat) * b_hat;
  const Vec3 w = c - c.dot(b_hat) * b_hat;
  const Scalar nu = u.norm();
  if (nu <= kDegenerateProjectionNorm || w.norm() <= kDegenerateProjectionNorm) {
    fail(ErrorKind::DegenerateTorsion, "torsion_angle: neighbour edge parallel to middle edge");
  }
  const Vec3 x_hat = u / nu;
  const Vec3 y_hat = b_hat.cross(x_hat);
  const Scalar phi = std::atan2(w.dot(y_hat), w.dot(x_hat));
  Scalar tau = std::numbers::pi_v<Scalar> - phi;
  if (tau > std::numbers::pi_v<Scalar>) tau -= 2 * std::numbers::pi_v<Scalar>;
  return tau;
}

/// Closed: n angles (theta_i between e_i and e_{i+1 mod n}).
/// Open: the n - 1 angles at interior vertices.
std::vector<double> turning_angles(const Polygon& p);
double total_curvature(const Polygon& p);

/// Closed: n angles, the one at e_i using e_{i-1}, e_i, e_{i+1} cyclically.
/// Open: the n - 2 angles at interior edges. Requires dim 3.
std::vector<double> torsion_angles(const Polygon& p);
double total_torsion(const Polygon& p);

/// A function of k consecutive edges, bounded in absolute value by `bound`.
/// `eval` receives a dim x k matrix whose columns are the window's edges.
struct LocalFunctional {
  std::string name;
  int k = 1;
  double bound = 0.0;
  std::function<double(const Eigen::MatrixXd&)> eval;
};

/// Edges start, start+1, ..., start+k-1 (indices mod n).
Eigen::MatrixXd edge_window(const Polygon& p, Eigen::Index start, int k);

/// Closed: n values over cyclic windows. Open: n - k + 1 non-wrapping windows.
std::vector<double> sliding_window_apply(const Polygon& p, const LocalFunctional& f);

/// f evaluated on the first window e_1 ... e_k.
double first_window(const Polygon& p, const LocalFunctional& f);

LocalFunctional turning_angle_functional();     // theta_1, k = 2, M = pi
LocalFunctional turning_product_functional();   // theta_1 theta_2, k = 3, M = pi^2
LocalFunctional torsion_angle_functional();     // tau at e_2, k = 3, M = pi
LocalFunctional first_edge_length_functional(); // |e_1|, k = 1, M = 2

}  // namespace symmpoly
