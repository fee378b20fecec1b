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

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "symmpoly/ensemble.hpp"
#include "symmpoly/functionals.hpp"
#include "symmpoly/polygon.hpp"

namespace symmpoly {

/// Stream for one ensemble. Different spaces, sizes or tags never share
/// random bits under the same seed.
SeedStream ensemble_stream(std::uint64_t seed, Space space, Eigen::Index n, std::uint64_t tag = 0);

/// A real functional of a whole polygon.
struct EnsembleFunctional {
  std::string name;
  std::function<double(const Polygon&)> eval;
};

/// Builtins: total_curvature, total_torsion, theta_<i> (angle between e_i
/// and e_{i+1}) and tau_<i> (torsion of the window e_i, e_{i+1}, e_{i+2}),
/// with 1-based i. theta_1 and tau_1 are the first-window values.
EnsembleFunctional builtin_functional(std::string_view name);

/// f on the window starting at edge `start` (0-based).
EnsembleFunctional window_functional(const LocalFunctional& f, Eigen::Index start = 0);

struct FunctionalStats {
  std::string name;
  double mean = 0.0;
  double variance = 0.0;
  double std_error = 0.0;  // sqrt(variance / N)
};

struct EnsembleSummary {
  Space space;
  Eigen::Index n = 0;
  std::size_t N = 0;  // samples kept
  std::uint64_t seed = 0;
  std::size_t excluded = 0;
  std::vector<FunctionalStats> records;

  const FunctionalStats& at(std::string_view name) const;
};

struct EnsembleRun {
  EnsembleSummary summary;
  EnsembleValues values;  // column j holds functional j
};

EnsembleRun run_ensemble_values(Space space, Eigen::Index n, std::size_t N,
                                const std::vector<EnsembleFunctional>& functionals,
                                std::uint64_t seed, const EnsembleOptions& options = {},
                                std::uint64_t tag = 0);

EnsembleSummary run_ensemble(Space space, Eigen::Index n, std::size_t N,
                             const std::vector<EnsembleFunctional>& functionals,
                             std::uint64_t seed, const EnsembleOptions& options = {},
                             std::uint64_t tag = 0);

/// Summary of values already computed (e.g. from a stored ensemble).
EnsembleSummary summarize(Space space, Eigen::Index n, std::uint64_t seed, const EnsembleValues& values,
                          const std::vector<EnsembleFunctional>& functionals);

/// Header: space,n,N,seed,excluded,functional,mean,variance,std_error
void write_summary_csv(std::ostream& out, const EnsembleSummary& summary);

/// Two samples binned on a shared grid.
struct GridHistogram {
  int dim = 0;  // coordinates per sample
  int bins_per_axis = 0;
  std::vector<std::pair<double, double>> ranges;
  std::vector<std::uint64_t> counts_a;
  std::vector<std::uint64_t> counts_b;
  std::size_t N = 0;
  double tv_estimate = 0.0;       // 0.5 * sum |p_a - p_b|
  double null_calibration = 0.0;  // same statistic, first vs second half of A
  double tv_std_error = 0.0;      // bootstrap

  std::size_t cells() const { return counts_a.size(); }
};

/// Builds the histogram of the rows of a and b (N x dim each). Throws
/// ErrorKind::Resolution when bins^dim exceeds N / 50.
GridHistogram binned_tv(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, int bins_per_axis,
                        SeedStream bootstrap_stream);

/// Binned TV between the k-segment marginals of two spaces of the same
/// dimension.
GridHistogram estimate_tv(Space space_a, Space space_b, Eigen::Index n, Eigen::Index k,
                          std::size_t N, int bins_per_axis, std::uint64_t seed,
                          const EnsembleOptions& options = {});

/// Header: cell,x_0..x_{d-1} (cell centres),freq_a,freq_b
void write_grid_csv(std::ostream& out, const GridHistogram& grid);

struct CovariancePartition {
  double c_self = 0.0;      // Cov(theta_1, theta_1)
  double c_adjacent = 0.0;  // Cov(theta_1, theta_2)
  double c_distant = 0.0;   // Cov(theta_1, theta_3)
  double assembled_variance = 0.0;
  double direct_variance = 0.0;  // sample variance of kappa
  double se_self = 0.0;
  double se_adjacent = 0.0;
  double se_distant = 0.0;
  double se_difference = 0.0;  // bootstrap SE of assembled - direct
  std::size_t N = 0;
};

/// Turning-angle covariances, each averaged over positions along the
/// polygon (cyclic shifts when closed, the non-wrapping ones when open).
/// For L = n angles (closed) the assembly is
/// L c_self + 2L c_adjacent + L(L-3) c_distant; for L = n - 1 angles (open)
/// it is L c_self + 2(L-1) c_adjacent + (L-1)(L-2) c_distant. n >= 7.
CovariancePartition covariance_partition(Space space, Eigen::Index n, std::size_t N,
                                         std::uint64_t seed, const EnsembleOptions& options = {});

}  // namespace symmpoly
