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

#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "symmpoly/error.hpp"
#include "symmpoly/quaternion.hpp"
#include "symmpoly/random.hpp"

namespace symmpoly {

/// Polygonal chain stored as its edge vectors, one per column (dim x n).
/// Vertices are derived on demand, anchored at the origin.
class Polygon {
 public:
  Polygon(Eigen::MatrixXd edges, bool closed);

  int dim() const { return static_cast<int>(edges_.rows()); }
  Eigen::Index n() const { return edges_.cols(); }
  bool closed() const { return closed_; }
  const Eigen::MatrixXd& edges() const { return edges_; }
  auto edge(Eigen::Index i) const { return edges_.col(i); }

 private:
  Eigen::MatrixXd edges_;
  bool closed_;
};

/// Sampled polygons have total length 2.
inline constexpr double kPerimeter = 2.0;

/// Coordinatewise z -> z^2, each square read as a planar vector.
template <typename Derived>
Eigen::Matrix<typename Derived::RealScalar, 2, Eigen::Dynamic> square_map(
    const Eigen::MatrixBase<Derived>& z) {
  Eigen::Matrix<typename Derived::RealScalar, 2, Eigen::Dynamic> edges(2, z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const auto sq = z[i] * z[i];
    edges(0, i) = sq.real();
    edges(1, i) = sq.imag();
  }
  return edges;
}

/// Coordinatewise Hopf map.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, Eigen::Dynamic> hopf_map(
    const std::vector<QuaternionT<Scalar>>& q) {
  Eigen::Matrix<Scalar, 3, Eigen::Dynamic> edges(3, static_cast<Eigen::Index>(q.size()));
  for (std::size_t i = 0; i < q.size(); ++i) {
    edges.col(static_cast<Eigen::Index>(i)) = hopf_expanded(q[i]);
  }
  return edges;
}

/// Open chain from the symmetric measure on Arm_dim(n): a uniform point of
/// S^{2n-1}(sqrt 2) (dim 2) or S^{4n-1}(sqrt 2) (dim 3) pushed through the
/// squaring or Hopf map.
Polygon sample_arm(int dim, Eigen::Index n, SeedStream& s);

/// Closed polygon from the symmetric measure on Pol_dim(n): a Haar 2-frame
/// of R^n (dim 2) or C^n (dim 3) pushed through the same maps.
Polygon sample_pol(int dim, Eigen::Index n, SeedStream& s);

double perimeter(const Polygon& p);
double closure_residual(const Polygon& p);
/// dim x (n + 1) partial sums, first column the origin.
Eigen::MatrixXd vertices(const Polygon& p);
/// First k edges flattened in order (e_1 then e_2 ...), length dim * k.
Eigen::VectorXd segment(const Polygon& p, Eigen::Index k);

enum class Space { arm2, pol2, arm3, pol3 };

constexpr int dimension(Space s) {
  return (s == Space::arm2 || s == Space::pol2) ? 2 : 3;
}
constexpr bool is_closed(Space s) { return s == Space::pol2 || s == Space::pol3; }

std::string_view to_string(Space s);
Space parse_space(std::string_view name);

Polygon sample_polygon(Space space, Eigen::Index n, SeedStream& s);

}  // namespace symmpoly
