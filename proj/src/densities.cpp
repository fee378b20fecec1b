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

#include "symmpoly/densities.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "symmpoly/error.hpp"
#include "symmpoly/haar_sampling.hpp"

namespace symmpoly {

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    fail(ErrorKind::InvalidDimension, "HermitianMatrix must be square and nonempty");
  }
  const double gap = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (gap > kHermitianTolerance) fail(ErrorKind::Domain, "matrix is not Hermitian");
}

HermitianMatrix HermitianMatrix::real(const Eigen::MatrixXd& entries) {
  return HermitianMatrix(entries.cast<std::complex<double>>());
}

HermitianMatrix HermitianMatrix::scalar(double value) {
  return HermitianMatrix(Eigen::MatrixXcd::Constant(1, 1, value));
}

Eigen::VectorXd HermitianMatrix::eigenvalues() const {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(entries_, Eigen::EigenvaluesOnly).eigenvalues();
}

double ln_multigamma(int m, double a) {
  if (m < 1 || !(a > m - 1)) fail(ErrorKind::Domain, "ln_multigamma needs m >= 1 and a > m - 1");
  double s = 0.5 * m * (m - 1) * std::log(std::numbers::pi);
  for (int j = 1; j <= m; ++j) s += std::lgamma(a - j + 1);
  return s;
}

bool ln_det_positive(const Eigen::MatrixXcd& a, double& out) {
  Eigen::LLT<Eigen::MatrixXcd> llt(a);
  if (llt.info() != Eigen::Success) return false;
  const Eigen::VectorXd d = llt.matrixLLT().diagonal().real();
  if ((d.array() <= 0.0).any()) return false;
  out = 2.0 * d.array().log().sum();
  return true;
}

double block_density(const Eigen::MatrixXcd& delta, int n) {
  const auto p = static_cast<int>(delta.rows());
  const auto q = static_cast<int>(delta.cols());
  if (p < 1 || q < 1) fail(ErrorKind::InvalidDimension, "block_density: empty block");
  if (n <= p + q) fail(ErrorKind::Domain, "block_density needs n > p + q");
  const Eigen::MatrixXcd gap = Eigen::MatrixXcd::Identity(q, q) - delta.adjoint() * delta;
  double ln_det = 0.0;
  if (!ln_det_positive(gap, ln_det)) fail(ErrorKind::Support, "block_density: D^* D has an eigenvalue >= 1");
  double ln_c = -p * q * std::log(std::numbers::pi);
  for (int j = 1; j <= q; ++j) ln_c += std::lgamma(n - j + 1) - std::lgamma(n - p - j + 1);
  return std::exp(ln_c + (n - p - q) * ln_det);
}

double wishart_density(const HermitianMatrix& a, int p, int n, const HermitianMatrix& sigma) {
  if (a.size() != p || sigma.size() != p) fail(ErrorKind::InvalidDimension, "wishart_density: size mismatch");
  if (n < p) fail(ErrorKind::Domain, "wishart_density needs n >= p");
  double ln_det_sigma = 0.0;
  if (!ln_det_positive(sigma.entries(), ln_det_sigma)) fail(ErrorKind::Domain, "wishart_density: singular scale");
  const Eigen::VectorXd eig = a.eigenvalues();
  const double scale = std::max(1.0, eig.cwiseAbs().maxCoeff());
  if (eig.minCoeff() < -kHermitianTolerance * scale) fail(ErrorKind::Domain, "wishart_density: A is not PSD");

  const Eigen::LLT<Eigen::MatrixXcd> llt(sigma.entries());
  const double trace = llt.solve(a.entries()).trace().real();
  const double ln_rest = -trace - ln_multigamma(p, n) - n * ln_det_sigma;
  if (n == p) return std::exp(ln_rest);
  if (eig.minCoeff() <= 0.0) return 0.0;
  return std::exp((n - p) * eig.array().log().sum() + ln_rest);
}

double cbi_density(const HermitianMatrix& m_value, int m, double a, double b) {
  if (m_value.size() != m) fail(ErrorKind::InvalidDimension, "cbi_density: size mismatch");
  if (!(a > m - 1) || !(b > m - 1)) fail(ErrorKind::Domain, "cbi_density needs a, b > m - 1");
  double ln_det_m = 0.0, ln_det_rest = 0.0;
  if (!ln_det_positive(m_value.entries(), ln_det_m) ||
      !ln_det_positive(Eigen::MatrixXcd::Identity(m, m) - m_value.entries(), ln_det_rest)) {
    fail(ErrorKind::Domain, "cbi_density: need 0 < M < I");
  }
  return std::exp(ln_multigamma(m, a + b) - ln_multigamma(m, a) - ln_multigamma(m, b) +
                  (a - m) * ln_det_m + (b - m) * ln_det_rest);
}

RatioArgmax ratio_argmax_check(int r, int n, int grid_points) {
  if (r < 1 || r + 3 >= n || grid_points < 1000) {
    fail(ErrorKind::Domain, "ratio_argmax_check needs r >= 1, r + 3 < n and grid_points >= 1000");
  }
  // ln(g/f) = ln Gamma(n) - ln Gamma(n-r) - r ln n + (n-r-1) ln(1-v) + n v.
  const double ln_c = std::lgamma(n) - std::lgamma(n - r) - r * std::log(static_cast<double>(n));
  RatioArgmax best{0.0, -1.0};
  double best_ln = -INFINITY;
  for (int i = 1; i < grid_points; ++i) {
    const double v = static_cast<double>(i) / grid_points;
    const double ln_ratio = ln_c + (n - r - 1) * std::log1p(-v) + n * v;
    if (ln_ratio > best_ln) {
      best_ln = ln_ratio;
      best.argmax = v;
    }
  }
  best.max_ratio = std::exp(best_ln);
  return best;
}

double sample_block_gram(int p, int n, SeedStream& s) {
  if (p < 1 || p >= n) fail(ErrorKind::InvalidSize, "sample_block_gram needs 1 <= p < n");
  const Eigen::MatrixXcd u = sample_haar_unitary(n, s);
  return u.col(0).head(p).squaredNorm();
}

}  // namespace symmpoly
