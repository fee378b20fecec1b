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

#include <doctest.h>

#include <cmath>

#include <Eigen/LU>

#include "symmpoly/haar_sampling.hpp"

using namespace symmpoly;

namespace {

// Mean of x and its standard error.
struct MeanSe {
  double mean = 0, se = 0;
};

template <typename F>
MeanSe mean_se(int N, F&& draw) {
  double s = 0, s2 = 0;
  for (int i = 0; i < N; ++i) {
    const double v = draw();
    s += v;
    s2 += v * v;
  }
  const double m = s / N;
  return {m, std::sqrt((s2 / N - m * m) / N)};
}

}  // namespace

TEST_CASE("sphere: S^0 of radius 2") {
  SeedStream s(7, 1);
  const MeanSe plus = mean_se(10'000, [&] {
    const Eigen::VectorXd x = sample_sphere(1, 2.0, s);
    REQUIRE(std::abs(std::abs(x[0]) - 2.0) < 1e-15);
    return x[0] > 0 ? 1.0 : 0.0;
  });
  CHECK(std::abs(plus.mean - 0.5) <= 4 * plus.se);
}

TEST_CASE("sphere: symmetry and second moment") {
  SeedStream s(7, 2);
  constexpr int N = 100'000;
  for (int coord = 0; coord < 3; ++coord) {
    SeedStream t = s.substream(static_cast<std::uint64_t>(coord));
    const MeanSe m = mean_se(N, [&] { return sample_sphere(3, 1.0, t)[coord]; });
    CHECK(std::abs(m.mean) <= 4 * m.se);
  }
  const MeanSe sq = mean_se(N, [&] {
    const Eigen::VectorXd x = sample_sphere(4, std::sqrt(2.0), s);
    CHECK(std::abs(x.norm() - std::sqrt(2.0)) < 1e-14);
    return x[0] * x[0];
  });
  CHECK(std::abs(sq.mean - 0.5) <= 4 * sq.se);
}

TEST_CASE("sphere: invalid arguments") {
  SeedStream s(1, 1);
  CHECK_THROWS_AS(sample_sphere(0, 1.0, s), Error);
  CHECK_THROWS_AS(sample_sphere(3, 0.0, s), Error);
}

TEST_CASE("frame2: orthonormality") {
  SeedStream s(7, 3);
  const RealFrame2 f2 = sample_frame2<double>(2, s);
  Eigen::Matrix2d m;
  m << f2.a, f2.b;
  CHECK(std::abs(std::abs(m.determinant()) - 1.0) < 1e-12);

  const ComplexFrame2 fc = sample_frame2<std::complex<double>>(10, s);
  CHECK(std::abs(fc.a.dot(fc.b)) < 1e-12);
  CHECK(std::abs(fc.a.norm() - 1.0) < 1e-12);
  CHECK(std::abs(fc.b.norm() - 1.0) < 1e-12);

  const RealFrame2 big = sample_frame2<double>(100'000, s);
  CHECK(std::abs(big.a.dot(big.b)) < 1e-12);

  CHECK_THROWS_AS(sample_frame2<double>(1, s), Error);
}

TEST_CASE("frame2: first coordinate moment") {
  SeedStream s(7, 4);
  const MeanSe m = mean_se(100'000, [&] {
    const RealFrame2 f = sample_frame2<double>(10, s);
    return f.a[0] * f.a[0];
  });
  CHECK(std::abs(m.mean - 0.1) <= 4 * m.se);
  SeedStream t(7, 5);
  const MeanSe mb = mean_se(100'000, [&] {
    const ComplexFrame2 f = sample_frame2<std::complex<double>>(10, t);
    return std::norm(f.b[3]);
  });
  CHECK(std::abs(mb.mean - 0.1) <= 4 * mb.se);
}

TEST_CASE("haar unitary") {
  SeedStream s(7, 6);
  const Eigen::MatrixXcd u1 = sample_haar_unitary(1, s);
  CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) < 1e-15);
  const Eigen::MatrixXcd u5 = sample_haar_unitary(5, s);
  CHECK((u5.adjoint() * u5 - Eigen::MatrixXcd::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-10);

  const MeanSe m = mean_se(100'000, [&] { return std::norm(sample_haar_unitary(10, s)(0, 0)); });
  CHECK(std::abs(m.mean - 0.1) <= 4 * m.se);

  // Phase of the corner entry is uniform: E[Re U_11] = 0.
  const MeanSe re = mean_se(20'000, [&] { return sample_haar_unitary(3, s)(0, 0).real(); });
  CHECK(std::abs(re.mean) <= 4 * re.se);
}

TEST_CASE("upper block") {
  CHECK(upper_block(Eigen::Matrix3d::Identity(), 2, 2) == Eigen::Matrix2d::Identity());
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = 10 * (i + 1) + (j + 1);
  const Eigen::MatrixXd top = upper_block(m, 1, 2);
  REQUIRE(top.rows() == 1);
  REQUIRE(top.cols() == 2);
  CHECK(top(0, 0) == 11);
  CHECK(top(0, 1) == 12);
  CHECK(upper_block(m, 3, 3) == m);
  CHECK_THROWS_AS(upper_block(m, 4, 1), Error);
}
