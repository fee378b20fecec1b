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

#include "symmpoly/haar_sampling.hpp"

#include <Eigen/QR>

namespace symmpoly {

Eigen::VectorXd sample_sphere(Eigen::Index m, double radius, SeedStream& s) {
  if (m < 1 || !(radius > 0.0)) {
    fail(ErrorKind::InvalidDimension, "sample_sphere: need m >= 1 and radius > 0");
  }
  for (;;) {
    Eigen::VectorXd g = gaussian_vector<double>(m, s);
    const double norm = g.norm();
    if (norm < 1e-300) continue;
    return g * (radius / norm);
  }
}

Eigen::MatrixXcd sample_haar_unitary(Eigen::Index n, SeedStream& s) {
  if (n < 1) fail(ErrorKind::InvalidDimension, "sample_haar_unitary: n must be >= 1");
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) g.col(j) = gaussian_vector<std::complex<double>>(n, s);

  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

}  // namespace symmpoly
