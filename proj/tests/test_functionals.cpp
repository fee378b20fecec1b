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
#include <numbers>
#include <vector>

#include <Eigen/Geometry>

#include "symmpoly/functionals.hpp"
#include "symmpoly/statistics.hpp"

using namespace symmpoly;
using std::numbers::pi;

namespace {

Polygon unit_square() {
  Eigen::MatrixXd e(2, 4);
  e << 1, 0, -1, 0,
       0, 1, 0, -1;
  return Polygon(e, true);
}

Eigen::Matrix3d random_rotation(SeedStream& s) {
  Eigen::Quaterniond q(s.normal(), s.normal(), s.normal(), s.normal());
  return q.normalized().toRotationMatrix();
}

}  // namespace

TEST_CASE("turning angle") {
  CHECK(turning_angle(Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1)) == doctest::Approx(pi / 2));
  CHECK(turning_angle(Eigen::Vector2d(1, 0), Eigen::Vector2d(1, 0)) == 0.0);
  CHECK(turning_angle(Eigen::Vector2d(1, 0), Eigen::Vector2d(-1, 0)) == doctest::Approx(pi));
  // Nearly parallel inputs must not produce NaN through acos.
  const Eigen::Vector3d u(1, 1e-9, 0);
  CHECK(std::isfinite(turning_angle(u, u * 3.0)));
  try {
    turning_angle(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateEdge);
  }
}

TEST_CASE("torsion angle") {
  const Eigen::Vector3d a(1, 0, 0), b(0, 0, 1);
  CHECK(std::abs(torsion_angle(a, b, Eigen::Vector3d(-1, 0, 0))) < 1e-15);
  CHECK(torsion_angle(a, b, Eigen::Vector3d(1, 0, 0)) == doctest::Approx(pi));
  CHECK(torsion_angle(a, b, Eigen::Vector3d(0, 1, 0)) == doctest::Approx(pi / 2));
  CHECK(torsion_angle(a, b, Eigen::Vector3d(0, -1, 0)) == doctest::Approx(-pi / 2));
  try {
    torsion_angle(a, b, Eigen::Vector3d(0, 0, 2));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateTorsion);
  }
  CHECK_THROWS_AS(torsion_angle(a, Eigen::Vector3d::Zero(), a), Error);
}

TEST_CASE("angles are invariant under scaling and rotation") {
  SeedStream s(7, 30);
  for (int t = 0; t < 200; ++t) {
    const Eigen::Vector3d a(s.normal(), s.normal(), s.normal());
    const Eigen::Vector3d b(s.normal(), s.normal(), s.normal());
    const Eigen::Vector3d c(s.normal(), s.normal(), s.normal());
    const Eigen::Matrix3d r = random_rotation(s);
    const double scale = 0.01 + 10 * s.uniform();
    CHECK(std::abs(turning_angle(a, b) - turning_angle(r * a * scale, r * b * scale)) < 1e-10);
    const double tau = torsion_angle(a, b, c);
    const double rotated = torsion_angle(r * a * scale, r * b * scale, r * c * scale);
    // Compare on the circle so that values near +-pi agree.
    CHECK(std::abs(std::remainder(tau - rotated, 2 * pi)) < 1e-10);
  }
}

TEST_CASE("total curvature and torsion") {
  CHECK(total_curvature(unit_square()) == doctest::Approx(2 * pi));
  Eigen::MatrixXd line(2, 3);
  line << 1, 1, 1,
          0, 0, 0;
  CHECK(total_curvature(Polygon(line, false)) == 0.0);
  CHECK(turning_angles(Polygon(line, false)).size() == 2);

  // A planar square has a and c antiparallel at every edge: all angles 0.
  Eigen::MatrixXd sq3(3, 4);
  sq3 << 1, 0, -1, 0,
         0, 1, 0, -1,
         0, 0, 0, 0;
  const auto taus = torsion_angles(Polygon(sq3, true));
  CHECK(taus.size() == 4);
  for (double t : taus) CHECK(std::abs(t) < 1e-12);
  CHECK(std::abs(total_torsion(Polygon(sq3, true))) < 1e-12);

  // Open staple: first and last edge parallel.
  Eigen::MatrixXd staple(3, 3);
  staple << 1, 0, 1,
            0, 0, 0,
            0, 1, 0;
  CHECK(total_torsion(Polygon(staple, false)) == doctest::Approx(pi));

  SeedStream s(7, 31);
  CHECK(torsion_angles(sample_arm(3, 20, s)).size() == 18);
  CHECK(torsion_angles(sample_pol(3, 20, s)).size() == 20);
  CHECK_THROWS_AS(torsion_angles(sample_arm(2, 20, s)), Error);
}

TEST_CASE("closed polygons satisfy 2 pi <= kappa <= n pi") {
  SeedStream s(7, 32);
  for (int t = 0; t < 500; ++t) {
    const Polygon p = sample_pol(t % 2 ? 2 : 3, 3 + t % 20, s);
    const double k = total_curvature(p);
    CHECK(k >= 2 * pi - 1e-9);
    CHECK(k <= p.n() * pi);
  }
}

TEST_CASE("sliding windows") {
  const Polygon sq = unit_square();
  CHECK(sliding_window_apply(sq, first_edge_length_functional()) == std::vector<double>{1, 1, 1, 1});
  const auto angles = sliding_window_apply(sq, turning_angle_functional());
  REQUIRE(angles.size() == 4);
  double sum = 0;
  for (double a : angles) {
    CHECK(a == doctest::Approx(pi / 2));
    sum += a;
  }
  CHECK(sum == doctest::Approx(total_curvature(sq)));

  Eigen::MatrixXd e(2, 3);
  e << 1, 0, 1,
       0, 1, 1;
  LocalFunctional whole{"sum_x", 3, 10.0, [](const Eigen::MatrixXd& w) { return w.row(0).sum(); }};
  CHECK(sliding_window_apply(Polygon(e, false), whole) == std::vector<double>{2});
  whole.k = 4;
  CHECK_THROWS_AS(sliding_window_apply(Polygon(e, false), whole), Error);
  CHECK(first_window(sq, turning_angle_functional()) == doctest::Approx(pi / 2));
}

TEST_CASE("builtin functionals respect their bounds") {
  SeedStream s(7, 33);
  const std::vector<LocalFunctional> fs{turning_angle_functional(), turning_product_functional(),
                                        torsion_angle_functional(), first_edge_length_functional()};
  for (int t = 0; t < 300; ++t) {
    const Polygon p = sample_pol(3, 8, s);
    for (const auto& f : fs) {
      for (double v : sliding_window_apply(p, f)) CHECK(std::abs(v) <= f.bound);
    }
  }
}

TEST_CASE("arm angle laws") {
  SeedStream s(7, 34);
  constexpr int N = 100'000;
  std::vector<double> theta(N), tau1(N), tau2(N), kappa(N), total_tau(N);
  for (int i = 0; i < N; ++i) {
    const Polygon p2 = sample_arm(2, 100, s);
    theta[i] = turning_angle(p2.edge(0), p2.edge(1));
    kappa[i] = total_curvature(p2);
    const Polygon p3 = sample_arm(3, 50, s);
    const auto t = torsion_angles(p3);
    tau1[i] = t[0];
    tau2[i] = t[5];
    total_tau[i] = total_torsion(p3);
  }
  auto se = [&](const std::vector<double>& x) { return std::sqrt(sample_variance(x) / N); };

  // theta uniform on [0, pi]: E theta^2 = pi^2 / 3.
  std::vector<double> sq(theta);
  for (double& v : sq) v *= v;
  CHECK(std::abs(mean(sq) - pi * pi / 3) <= 4 * se(sq));
  CHECK(ks_distance(theta, [](double x) { return x / pi; }) < 0.01);
  CHECK(std::abs(mean(kappa) - 99 * pi / 2) <= 4 * se(kappa));

  // tau uniform on (-pi, pi]: chi-square with 35 degrees of freedom below
  // its 0.9999 quantile 74.926.
  CHECK(chi_square_uniform(tau1, -pi, pi, 36) < 74.926);
  CHECK(std::abs(sample_correlation(tau1, tau2)) <= 4 / std::sqrt(double(N)));
  CHECK(std::abs(mean(total_tau)) <= 4 * se(total_tau));
  CHECK(std::abs(sample_variance(total_tau) / (48 * pi * pi / 3) - 1) <= 0.05);
}
