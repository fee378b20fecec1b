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
#include <sstream>
#include <string>

#include "symmpoly/error.hpp"
#include "symmpoly/monte_carlo.hpp"
#include "symmpoly/statistics.hpp"
#include "symmpoly/tv_bounds.hpp"

using namespace symmpoly;
using std::numbers::pi;

namespace {

std::string summary_csv(const EnsembleSummary& s) {
  std::ostringstream out;
  write_summary_csv(out, s);
  return out.str();
}

std::vector<EnsembleFunctional> named(std::initializer_list<std::string_view> names) {
  std::vector<EnsembleFunctional> f;
  for (auto n : names) f.push_back(builtin_functional(n));
  return f;
}

}  // namespace

TEST_CASE("ensemble moments") {
  const EnsembleSummary arm2 = run_ensemble(Space::arm2, 100, 100'000, named({"theta_1"}), 7);
  const auto& theta = arm2.at("theta_1");
  CHECK(arm2.N == 100'000);
  CHECK(arm2.excluded == 0);
  CHECK(theta.std_error == doctest::Approx(std::sqrt(theta.variance / 100'000)));
  CHECK(std::abs(theta.mean - pi / 2) <= 4 * theta.std_error);

  const EnsembleSummary pol3 = run_ensemble(Space::pol3, 50, 100'000, named({"total_curvature"}), 7);
  const auto& kappa = pol3.at("total_curvature");
  CHECK(std::abs(kappa.mean - (25 * pi + pi / 4 * (100.0 / 97))) <= 4 * kappa.std_error);
  CHECK(25 * pi + pi / 4 * (100.0 / 97) == doctest::Approx(79.3495052).epsilon(1e-9));

  const EnsembleSummary arm3 = run_ensemble(Space::arm3, 50, 100'000, named({"tau_1"}), 7);
  CHECK(std::abs(arm3.at("tau_1").variance / (pi * pi / 3) - 1) <= 0.05);
  CHECK_THROWS_AS(arm3.at("nope"), Error);
}

TEST_CASE("ensembles are independent of the worker count") {
  const auto f = named({"total_curvature", "total_torsion", "tau_1"});
  const std::string one = summary_csv(run_ensemble(Space::pol3, 30, 5'000, f, 99, {1}));
  const std::string three = summary_csv(run_ensemble(Space::pol3, 30, 5'000, f, 99, {3}));
  CHECK(one == three);
  CHECK(one != summary_csv(run_ensemble(Space::pol3, 30, 5'000, f, 100, {1})));
  CHECK(one.find("pol3,30,5000,99,0,total_curvature,") != std::string::npos);

  const GridHistogram a = estimate_tv(Space::pol2, Space::arm2, 20, 1, 20'000, 8, 5, {1});
  const GridHistogram b = estimate_tv(Space::pol2, Space::arm2, 20, 1, 20'000, 8, 5, {4});
  CHECK(a.counts_a == b.counts_a);
  CHECK(a.counts_b == b.counts_b);
  CHECK(a.tv_std_error == b.tv_std_error);
}

TEST_CASE("degenerate samples are counted and bounded") {
  int calls = 0;
  EnsembleFunctional flaky{"flaky", [&calls](const Polygon& p) -> double {
                             if (++calls == 1) fail(ErrorKind::DegenerateEdge, "synthetic");
                             return p.n();
                           }};
  // One exclusion in 20000 is 5e-5 < 1e-4.
  const EnsembleSummary s = run_ensemble(Space::arm2, 5, 20'000, {flaky}, 1);
  CHECK(s.excluded == 1);
  CHECK(s.N == 19'999);

  EnsembleFunctional broken{"broken", [](const Polygon&) -> double {
                              fail(ErrorKind::DegenerateTorsion, "synthetic");
                            }};
  try {
    run_ensemble(Space::arm3, 5, 1'000, {broken}, 1);
    FAIL("expected a reliability error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Reliability);
  }
  CHECK_THROWS_AS(builtin_functional("theta_0"), Error);
  CHECK_THROWS_AS(builtin_functional("kappa"), Error);
  // theta_5 needs edges 5 and 6: a usage error on a 5-edge arm, not an exclusion.
  try {
    run_ensemble(Space::arm2, 5, 10, named({"theta_5"}), 1);
    FAIL("expected a size error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidSize);
  }
  CHECK_THROWS_AS(run_ensemble(Space::arm2, 5, 1, named({"theta_1"}), 1), Error);
}

TEST_CASE("binned tv on fixed data") {
  Eigen::MatrixXd a(1000, 1), b(1000, 1), c(1000, 1);
  for (int i = 0; i < 1000; ++i) {
    a(i, 0) = i % 2 ? 0.1 * (i % 10) : 0.9 - 0.1 * (i % 10);
    c(i, 0) = a(i, 0) + 10.0;
  }
  b = a;
  const GridHistogram same = binned_tv(a, b, 4, SeedStream(1, 1));
  CHECK(same.tv_estimate == 0.0);
  CHECK(same.cells() == 4);
  const GridHistogram apart = binned_tv(a, c, 4, SeedStream(1, 1));
  CHECK(apart.tv_estimate == 1.0);
  CHECK(apart.ranges[0].first < 0.0);
  CHECK(apart.ranges[0].second > 10.9);

  try {
    // 25 cells for 1000 samples exceeds N / 50 = 20.
    binned_tv(Eigen::MatrixXd::Random(1000, 2), Eigen::MatrixXd::Random(1000, 2), 5, SeedStream(1, 1));
    FAIL("expected a resolution error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Resolution);
  }
  CHECK_THROWS_AS(binned_tv(a, b, 3, SeedStream(1, 1)), Error);

  std::ostringstream out;
  write_grid_csv(out, same);
  const std::string text = out.str();
  CHECK(text.rfind("cell,x_0,freq_a,freq_b\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}

TEST_CASE("estimated tv") {
  const GridHistogram same = estimate_tv(Space::arm2, Space::arm2, 100, 1, 100'000, 12, 7);
  CHECK(same.tv_estimate >= 0.0);
  CHECK(same.tv_estimate <= same.null_calibration + 0.01);

  // Null calibration shrinks roughly like sqrt(cells / N).
  const GridHistogram small = estimate_tv(Space::arm2, Space::arm2, 100, 1, 12'500, 8, 7);
  const GridHistogram large = estimate_tv(Space::arm2, Space::arm2, 100, 1, 50'000, 8, 7);
  CHECK(large.null_calibration < small.null_calibration);
  CHECK(large.null_calibration / small.null_calibration == doctest::Approx(0.5).epsilon(0.35));

  const GridHistogram planar = estimate_tv(Space::pol2, Space::arm2, 100, 1, 100'000, 12, 7);
  CHECK(planar.tv_estimate <= 1.0);
  CHECK(planar.tv_estimate - planar.null_calibration <= b2(1, 100));
  CHECK(planar.tv_std_error > 0.0);

  CHECK_THROWS_AS(estimate_tv(Space::pol2, Space::arm3, 100, 1, 1'000, 4, 7), Error);
  try {
    estimate_tv(Space::pol3, Space::arm3, 100, 2, 100'000, 8, 7);
    FAIL("expected a resolution error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Resolution);
  }
}

TEST_CASE("covariance partition") {
  const CovariancePartition pol = covariance_partition(Space::pol2, 50, 50'000, 7);
  CHECK(std::abs(pol.assembled_variance - pol.direct_variance) <= 4 * pol.se_difference);
  CHECK(pol.c_self > 0.0);
  CHECK(pol.N == 50'000);

  const CovariancePartition arm = covariance_partition(Space::arm2, 50, 50'000, 7);
  CHECK(std::abs(arm.c_adjacent) <= 4 * arm.se_adjacent);
  CHECK(std::abs(arm.c_distant) <= 4 * arm.se_distant);
  CHECK(arm.c_self == doctest::Approx(pi * pi / 12).epsilon(0.03));
  CHECK(std::abs(arm.assembled_variance - arm.direct_variance) <= 4 * arm.se_difference);

  CHECK_THROWS_AS(covariance_partition(Space::pol2, 6, 100, 7), Error);
}

TEST_CASE("exchangeability of turning angles on pol2") {
  const EnsembleRun run = run_ensemble_values(Space::pol2, 30, 50'000, named({"theta_1", "theta_2", "theta_3"}), 7);
  const auto t1 = run.values.column(0), t2 = run.values.column(1), t3 = run.values.column(2);
  const double diff = sample_covariance(t2, t3) - sample_covariance(t1, t2);
  std::vector<double> x1, x2, x3;
  const double se = bootstrap_standard_error(
      t1.size(),
      [&](std::span<const std::size_t> idx) {
        x1.clear();
        x2.clear();
        x3.clear();
        for (auto i : idx) {
          x1.push_back(t1[i]);
          x2.push_back(t2[i]);
          x3.push_back(t3[i]);
        }
        return sample_covariance(x2, x3) - sample_covariance(x1, x2);
      },
      kBootstrapResamples, SeedStream(7, 50));
  CHECK(std::abs(diff) <= 4 * se);
}

TEST_CASE("expectation ratio tends to one") {
  auto gap = [](int n) {
    const auto f = named({"total_curvature"});
    const double p = run_ensemble(Space::pol2, n, 100'000, f, 7).at("total_curvature").mean;
    const double a = run_ensemble(Space::arm2, n, 100'000, f, 7).at("total_curvature").mean;
    return std::abs(p / a - 1);
  };
  const double g50 = gap(50), g200 = gap(200);
  CHECK(g200 < g50);
  CHECK(g200 < 0.02);
}
