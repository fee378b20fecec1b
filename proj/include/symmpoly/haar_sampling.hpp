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

#include <complex>
#include <numbers>
#include <type_traits>

#include <Eigen/Core>

#include "symmpoly/error.hpp"
#include "symmpoly/random.hpp"

namespace symmpoly {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

/// Orthonormal pair (a, b) in R^n or C^n: a point of the Stiefel manifold
/// V_2. Inner products are Hermitian when Scalar is complex.
template <typename Scalar>
struct Frame2 {
  Vector<Scalar> a;
  Vector<Scalar> b;

  Eigen::Index n() const { return a.size(); }
};

using RealFrame2 = Frame2<double>;
using ComplexFrame2 = Frame2<std::complex<double>>;

/// Residual norms below this are treated as a degenerate Gaussian draw.
inline constexpr double kDegenerateDrawNorm = 1e-12;

/// Uniform point on the sphere of the given radius in R^m.
Eigen::VectorXd sample_sphere(Eigen::Index m, double radius, SeedStream& s);

/// Vector of independent standard Gaussians. Complex entries are
/// (x + iy)/sqrt(2), so E|z|^2 = 1.
template <typename Scalar>
Vector<Scalar> gaussian_vector(Eigen::Index n, SeedStream& s) {
  Vector<Scalar> g(n);
  if constexpr (is_complex<Scalar>::value) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = s.normal();
      const double im = s.normal();
      g[i] = Scalar(re, im) / std::numbers::sqrt2;
    }
  } else {
    for (Eigen::Index i = 0; i < n; ++i) g[i] = s.normal();
  }
  return g;
}

/// Haar-distributed 2-frame: Gram-Schmidt on two Gaussian vectors, which has
/// the law of the first two columns of a Haar orthogonal/unitary matrix.
template <typename Scalar>
Frame2<Scalar> sample_frame2(Eigen::Index n, SeedStream& s) {
  if (n < 2) fail(ErrorKind::InvalidDimension, "sample_frame2: n must be >= 2");
  for (;;) {
    Vector<Scalar> a = gaussian_vector<Scalar>(n, s);
    Vector<Scalar> b = gaussian_vector<Scalar>(n, s);
    const double a_norm = a.norm();
    if (a_norm < kDegenerateDrawNorm) continue;
    a /= a_norm;
    // Two projection passes keep |<a,b>| at roundoff level for large n.
    b -= a * a.dot(b);
    b -= a * a.dot(b);
    const double b_norm = b.norm();
    if (b_norm < kDegenerateDrawNorm) continue;
    b /= b_norm;
    return {std::move(a), std::move(b)};
  }
}

/// Haar unitary via QR of a complex Ginibre matrix, with the phases of
/// diag(R) moved into Q.
Eigen::MatrixXcd sample_haar_unitary(Eigen::Index n, SeedStream& s);

/// Rows [0, p) and columns [0, q) of m.
template <typename Derived>
Matrix<typename Derived::Scalar> upper_block(const Eigen::MatrixBase<Derived>& m,
                                             Eigen::Index p, Eigen::Index q) {
  if (p < 0 || q < 0 || p > m.rows() || q > m.cols()) {
    fail(ErrorKind::InvalidDimension, "upper_block: block exceeds matrix");
  }
  return m.topLeftCorner(p, q);
}

}  // namespace symmpoly
