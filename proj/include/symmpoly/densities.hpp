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

#include <Eigen/Core>

#include "symmpoly/random.hpp"

namespace symmpoly {

/// Complex Hermitian matrix; construction checks |A - A^*| <= 1e-12 entrywise.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Eigen::MatrixXcd entries);
  /// Real symmetric input promoted to complex.
  static HermitianMatrix real(const Eigen::MatrixXd& entries);
  static HermitianMatrix scalar(double value);

  Eigen::Index size() const { return entries_.rows(); }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  Eigen::VectorXd eigenvalues() const;

 private:
  Eigen::MatrixXcd entries_;
};

inline constexpr double kHermitianTolerance = 1e-12;

/// ln of pi^{m(m-1)/2} prod_{j=1}^m Gamma(a - j + 1); a > m - 1.
double ln_multigamma(int m, double a);

/// ln det of a Hermitian positive definite matrix (Cholesky). Returns false
/// when the factorization fails.
bool ln_det_positive(const Eigen::MatrixXcd& a, double& out);

/// Density of the upper p x q block of an n x n Haar unitary with respect to
/// Lebesgue measure on C^{p x q}:
/// pi^{-pq} prod_{j=1}^q Gamma(n-j+1)/Gamma(n-p-j+1) det(I - D^* D)^{n-p-q}.
/// Throws ErrorKind::Support outside the unit ball, Domain unless n > p + q.
double block_density(const Eigen::MatrixXcd& delta, int n);

/// Complex Wishart density at A with p x p scale sigma and n degrees of freedom.
double wishart_density(const HermitianMatrix& a, int p, int n, const HermitianMatrix& sigma);

/// Complex matrix-variate beta type I density on 0 < M < I.
double cbi_density(const HermitianMatrix& m_value, int m, double a, double b);

struct RatioArgmax {
  double argmax;
  double max_ratio;  // g/f at the argmax
};

/// Maximises g(v)/f(v) over v = i / grid_points, 0 < i < grid_points, where
/// g is the Beta(r, n - r) density (the law of |D|^2 for an r x 1 block) and
/// f the Gamma(r, rate n) density of its Wishart approximation.
/// Requires r >= 1, r + 3 < n and grid_points >= 1000.
RatioArgmax ratio_argmax_check(int r, int n, int grid_points);

/// D^* D for the upper p x 1 block D of an n x n Haar unitary.
double sample_block_gram(int p, int n, SeedStream& s);

}  // namespace symmpoly
