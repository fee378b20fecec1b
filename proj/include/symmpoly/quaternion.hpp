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

#include <Eigen/Geometry>

namespace symmpoly {

// Eigen::Quaternion stores (x, y, z, w) but constructs as (w, x, y, z); its
// operator* is the Hamilton product and conjugate() is the quaternion
// conjugate, so it serves as the quaternion carrier here.
template <typename Scalar>
using QuaternionT = Eigen::Quaternion<Scalar>;
using Quaternion = QuaternionT<double>;

/// q = a + b j with a = w + x i and b = y + z i, i.e. (w, x, y, z) =
/// (Re a, Im a, Re b, Im b). Under this pairing a frame (a, b) of C^n with
/// |a| = |b| = 1 and <a, b> = 0 maps to a closed spatial polygon.
template <typename Scalar>
QuaternionT<Scalar> quaternion_from_pair(const std::complex<Scalar>& a,
                                         const std::complex<Scalar>& b) {
  return {a.real(), a.imag(), b.real(), b.imag()};
}

/// Hopf map q -> conj(q) i q, returned as its (i, j, k) components. The real
/// part vanishes identically and the result has norm |q|^2.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 1> hopf(const QuaternionT<Scalar>& q) {
  const QuaternionT<Scalar> unit_i(Scalar(0), Scalar(1), Scalar(0), Scalar(0));
  return (q.conjugate() * unit_i * q).vec();
}

/// Same as hopf() but expanded in coordinates; avoids two full products.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 1> hopf_expanded(const QuaternionT<Scalar>& q) {
  const Scalar w = q.w(), x = q.x(), y = q.y(), z = q.z();
  return {w * w + x * x - y * y - z * z, Scalar(2) * (x * y - w * z),
          Scalar(2) * (w * y + x * z)};
}

}  // namespace symmpoly
