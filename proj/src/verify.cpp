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

#include "symmpoly/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include <Eigen/Core>

#include "symmpoly/densities.hpp"
#include "symmpoly/ensemble.hpp"
#include "symmpoly/error.hpp"
#include "symmpoly/functionals.hpp"
#include "symmpoly/monte_carlo.hpp"
#include "symmpoly/special.hpp"
#include "symmpoly/statistics.hpp"
#include "symmpoly/tv_bounds.hpp"

namespace symmpoly {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kDeskSamples = 100'000;
constexpr std::size_t kDeskTvSamples = 400'000;
constexpr std::size_t kStructuralSamples = 1'000;

CheckResult le(int c, std::string name, double measured, double threshold) {
  return {c, std::move(name), measured, "<=", threshold, measured <= threshold};
}

CheckResult ge(int c, std::string name, double measured, double threshold) {
  return {c, std::move(name), measured, ">=", threshold, measured >= threshold};
}

struct Context {
  std::uint64_t seed;
  EnsembleOptions options;
  std::size_t N;
  std::size_t tv_N;
};

std::vector<EnsembleFunctional> builtins(std::initializer_list<std::string_view> names) {
  std::vector<EnsembleFunctional> out;
  for (auto name : names) out.push_back(builtin_functional(name));
  return out;
}

double bootstrap_variance_se(std::span<const double> x, SeedStream stream) {
  std::vector<double> resampled(x.size());
  return bootstrap_standard_error(
      x.size(),
      [&](std::span<const std::size_t> idx) {
        for (std::size_t i = 0; i < idx.size(); ++i) resampled[i] = x[idx[i]];
        return sample_variance(resampled);
      },
      kBootstrapResamples, stream);
}

std::vector<CheckResult> structural(const Context& ctx) {
  std::vector<CheckResult> out;
  for (Space space : {Space::pol2, Space::pol3}) {
    const auto polygons =
        sample_ensemble(space, 50, kStructuralSamples, ensemble_stream(ctx.seed, space, 50, 10), ctx.options);
    double residual = 0.0, perimeter_gap = 0.0;
    for (const auto& p : polygons) {
      residual = std::max(residual, closure_residual(p));
      perimeter_gap = std::max(perimeter_gap, std::abs(perimeter(p) - kPerimeter));
    }
    const std::string tag(to_string(space));
    out.push_back(le(1, tag + "(50) max closure residual", residual, 1e-10));
    out.push_back(le(1, tag + "(50) max |perimeter - 2|", perimeter_gap, 1e-10));
  }
  return out;
}

std::vector<CheckResult> arm_moments(const Context& ctx) {
  std::vector<CheckResult> out;
  const EnsembleRun planar =
      run_ensemble_values(Space::arm2, 100, ctx.N, builtins({"theta_1"}), ctx.seed, ctx.options);
  const FunctionalStats& theta = planar.summary.at("theta_1");
  out.push_back(le(2, "arm2(100) |mean theta_1 - pi/2| vs 4 SE", std::abs(theta.mean - kPi / 2),
                   4 * theta.std_error));
  std::vector<double> squares(planar.values.column(0).begin(), planar.values.column(0).end());
  for (double& v : squares) v *= v;
  const double sq_se = std::sqrt(sample_variance(squares) / static_cast<double>(squares.size()));
  out.push_back(le(2, "arm2(100) |mean theta_1^2 - pi^2/3| vs 4 SE", std::abs(mean(squares) - kPi * kPi / 3),
                   4 * sq_se));

  const EnsembleRun spatial =
      run_ensemble_values(Space::arm3, 50, ctx.N, builtins({"tau_1", "tau_3"}), ctx.seed, ctx.options);
  const FunctionalStats& tau = spatial.summary.at("tau_1");
  out.push_back(le(2, "arm3(50) |mean tau_1| vs 4 SE", std::abs(tau.mean), 4 * tau.std_error));
  out.push_back(le(2, "arm3(50) |var tau_1 - pi^2/3| relative", std::abs(tau.variance / (kPi * kPi / 3) - 1), 0.05));
  const double rho = sample_correlation(spatial.values.column(0), spatial.values.column(1));
  out.push_back(le(2, "arm3(50) |corr(tau_1, tau_3)| vs 4 SE", std::abs(rho),
                   4 / std::sqrt(static_cast<double>(spatial.summary.N))));
  return out;
}

std::vector<CheckResult> closed_curvature(const Context& ctx) {
  std::vector<CheckResult> out;
  const auto spatial = run_ensemble(Space::pol3, 50, ctx.N, builtins({"total_curvature"}), ctx.seed, ctx.options);
  const auto& k3 = spatial.at("total_curvature");
  const double exact = 25 * kPi + kPi / 4 * (100.0 / 97.0);
  out.push_back(le(3, "pol3(50) |mean kappa - exact| vs 4 SE", std::abs(k3.mean - exact), 4 * k3.std_error));

  const auto planar = run_ensemble(Space::pol2, 100, ctx.N, builtins({"total_curvature"}), ctx.seed, ctx.options);
  const auto& k2 = planar.at("total_curvature");
  const double excess = k2.mean - 100 * kPi / 2;
  out.push_back(ge(3, "pol2(100) mean kappa - n pi/2", excess, 0.0));
  out.push_back(le(3, "pol2(100) mean kappa - n pi/2 vs n pi b2(2,n) + 4 SE", excess,
                   100 * kPi * b2(2, 100) + 4 * k2.std_error));
  return out;
}

std::vector<CheckResult> transfer(const Context& ctx) {
  std::vector<CheckResult> out;
  constexpr int n = 100;
  std::vector<EnsembleFunctional> planar_f = builtins({"theta_1"});
  planar_f.push_back(window_functional(turning_product_functional()));
  const auto pol2 = run_ensemble(Space::pol2, n, ctx.N, planar_f, ctx.seed, ctx.options);
  const auto arm2 = run_ensemble(Space::arm2, n, ctx.N, planar_f, ctx.seed, ctx.options);
  const auto pol3 = run_ensemble(Space::pol3, n, ctx.N, builtins({"tau_1"}), ctx.seed, ctx.options);
  const auto arm3 = run_ensemble(Space::arm3, n, ctx.N, builtins({"tau_1"}), ctx.seed, ctx.options);

  auto gap = [&](const EnsembleSummary& p, const EnsembleSummary& a, const std::string& name,
                 const LocalFunctional& f, int dim, const std::string& label) {
    const auto& rp = p.at(name);
    const auto& ra = a.at(name);
    out.push_back(le(4, label, std::abs(rp.mean - ra.mean),
                     expectation_transfer_gap(f.bound, dim, f.k, n) + 4 * (rp.std_error + ra.std_error)));
  };
  gap(pol2, arm2, "theta_1", turning_angle_functional(), 2, "|E_pol2 theta_1 - E_arm2 theta_1| (n=100)");
  gap(pol2, arm2, "turning_product", turning_product_functional(), 2,
      "|E_pol2 theta_1 theta_2 - E_arm2 theta_1 theta_2| (n=100)");
  gap(pol3, arm3, "tau_1", torsion_angle_functional(), 3, "|E_pol3 tau_1 - E_arm3 tau_1| (n=100)");
  return out;
}

std::vector<CheckResult> tv(const Context& ctx) {
  std::vector<CheckResult> out;
  const GridHistogram planar = estimate_tv(Space::pol2, Space::arm2, 100, 1, ctx.tv_N, 12, ctx.seed, ctx.options);
  out.push_back(le(5, "pol2 vs arm2 k=1 tv - null (bins 12)", planar.tv_estimate - planar.null_calibration,
                   b2(1, 100)));
  const GridHistogram spatial = estimate_tv(Space::pol3, Space::arm3, 100, 1, ctx.tv_N, 8, ctx.seed, ctx.options);
  out.push_back(le(5, "pol3 vs arm3 k=1 tv - null (bins 8)", spatial.tv_estimate - spatial.null_calibration,
                   b3(1, 100)));
  const GridHistogram same = estimate_tv(Space::arm2, Space::arm2, 100, 1, ctx.tv_N, 12, ctx.seed, ctx.options);
  out.push_back(le(5, "arm2 vs arm2 k=1 tv vs null + 0.01", same.tv_estimate, same.null_calibration + 0.01));
  for (const GridHistogram* g : {&planar, &spatial, &same}) {
    if (g->tv_estimate < 0.0 || g->tv_estimate > 1.0) {
      out.push_back(le(5, "tv estimate outside [0, 1]", g->tv_estimate, 1.0));
    }
  }
  return out;
}

std::vector<CheckResult> formulas() {
  std::vector<CheckResult> out;
  double violations_b2 = 0, violations_b3 = 0, violations_slope = 0;
  double consistency_b2 = 0, consistency_b3 = 0;
  for (int n : {20, 50, 100, 1000}) {
    for (int k = 1; k + 6 <= n; ++k) {
      violations_b2 += b2(k + 1, n) > b2(k, n) ? 0 : 1;
      violations_b3 += b3(k + 1, n) > b3(k, n) ? 0 : 1;
    }
    for (int k = 2; k + 5 <= n; ++k) {
      const double v2 = b2(k, n), v3 = b3(k, n);
      consistency_b2 = std::max(consistency_b2,
                                std::abs(v2 - ortho_block_bound(k, 2, n) - sphere_marginal_bound(2 * k, 2 * n)) /
                                    std::max(1.0, v2));
      consistency_b3 = std::max(consistency_b3,
                                std::abs(v3 - unitary_block_bound(k, 2, n) - sphere_marginal_bound(4 * k, 4 * n)) /
                                    std::max(1.0, v3));
    }
  }
  for (int n = 10; n <= 400; ++n) {
    for (int k = 1; 2 * k < n && k + 5 <= n; ++k) {
      violations_slope += b2(k, n) > (6.0 * k + 19) / n ? 0 : 1;
    }
  }
  constexpr int big = 1'000'000;
  double slope2 = 0, slope3 = 0;
  for (int k = 1; k <= 10; ++k) slope2 = std::max(slope2, std::abs(big * b2(k, big) - (6.0 * k + 19)));
  for (int k = 2; k <= 10; ++k) slope3 = std::max(slope3, std::abs(big * b3(k, big) - (10.0 * k + 17.5)));

  out.push_back(le(6, "b2 monotone in k: violations", violations_b2, 0));
  out.push_back(le(6, "b3 monotone in k: violations", violations_b3, 0));
  out.push_back(le(6, "b2(k,n) > (6k+19)/n for k < n/2: violations", violations_slope, 0));
  out.push_back(le(6, "max_k<=10 |n b2(k,n) - (6k+19)| at n=1e6", slope2, 0.01));
  out.push_back(le(6, "max_2<=k<=10 |n b3(k,n) - (10k+17.5)| at n=1e6", slope3, 0.01));
  out.push_back(le(6, "|alpha_threshold(2) - (4-sqrt 11)/5|",
                   std::abs(alpha_threshold(2) - (4 - std::sqrt(11.0)) / 5), 1e-9));
  out.push_back(le(6, "|alpha_threshold(3) - 0.08235533|", std::abs(alpha_threshold(3) - 0.08235533), 1e-6));
  out.push_back(le(6, "b2 = ortho + sphere assembly (relative)", consistency_b2, 1e-12));
  out.push_back(le(6, "b3 = unitary + sphere assembly (relative)", consistency_b3, 1e-12));
  return out;
}

std::vector<CheckResult> variance(const Context& ctx) {
  std::vector<CheckResult> out;
  const EnsembleRun planar =
      run_ensemble_values(Space::pol2, 200, ctx.N, builtins({"total_curvature"}), ctx.seed, ctx.options);
  const double var_k = planar.summary.at("total_curvature").variance;
  const double se_k = bootstrap_variance_se(planar.values.column(0), ensemble_stream(ctx.seed, Space::pol2, 200, 20));
  out.push_back(le(7, "pol2(200) var kappa vs (n pi)^2 b2(4,n) + 4 SE", var_k,
                   curvature_variance_bound(200) + 4 * se_k));

  const EnsembleRun spatial =
      run_ensemble_values(Space::pol3, 100, ctx.N, builtins({"total_torsion"}), ctx.seed, ctx.options);
  const double var_t = spatial.summary.at("total_torsion").variance;
  const double se_t = bootstrap_variance_se(spatial.values.column(0), ensemble_stream(ctx.seed, Space::pol3, 100, 20));
  out.push_back(le(7, "pol3(100) var total torsion vs bound + 4 SE", var_t, torsion_variance_bound(100) + 4 * se_t));

  const CovariancePartition part = covariance_partition(Space::pol2, 200, ctx.N, ctx.seed, ctx.options);
  out.push_back(le(7, "pol2(200) |assembled - direct var kappa| vs 4 SE",
                   std::abs(part.assembled_variance - part.direct_variance), 4 * part.se_difference));
  return out;
}

std::vector<CheckResult> chebyshev(const Context& ctx) {
  std::vector<CheckResult> out;
  const EnsembleRun spatial =
      run_ensemble_values(Space::arm3, 100, ctx.N, builtins({"total_torsion"}), ctx.seed, ctx.options);
  const double half_width = kPi * std::sqrt(100.0);
  out.push_back(le(8, "arm3(100) fraction |total torsion| > pi sqrt n",
                   chebyshev_coverage(spatial.values.column(0), -half_width, half_width), 1.0 / 3.0));

  const EnsembleRun planar =
      run_ensemble_values(Space::pol2, 200, ctx.N, builtins({"total_curvature"}), ctx.seed, ctx.options);
  const ChebyshevInterval iv = chebyshev_interval(planar.summary.at("total_curvature").mean,
                                                  curvature_variance_bound(200), std::numbers::sqrt2);
  out.push_back(le(8, "pol2(200) fraction kappa outside lambda=sqrt2 interval",
                   chebyshev_coverage(planar.values.column(0), iv.lo, iv.hi), 0.5));
  return out;
}

std::string probe_output(const Context& ctx) {
  std::ostringstream s;
  write_summary_csv(s, run_ensemble(Space::pol3, 50, ctx.N / 10, builtins({"total_curvature", "total_torsion"}),
                                    ctx.seed, ctx.options));
  const GridHistogram g = estimate_tv(Space::pol2, Space::arm2, 100, 1, ctx.tv_N / 10, 8, ctx.seed, ctx.options);
  write_grid_csv(s, g);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", g.tv_estimate, g.null_calibration, g.tv_std_error);
  s << buf;
  const CovariancePartition c = covariance_partition(Space::pol2, 50, ctx.N / 10, ctx.seed, ctx.options);
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", c.c_self, c.c_adjacent, c.c_distant, c.se_difference);
  s << buf;
  return s.str();
}

std::vector<CheckResult> determinism(const Context& ctx) {
  Context one = ctx, four = ctx;
  one.options.workers = 1;
  four.options.workers = 4;
  const bool same = probe_output(one) == probe_output(four);
  return {le(10, "ensemble, tv and partition output identical for 1 and 4 workers", same ? 0.0 : 1.0, 0.0)};
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

VerifyLevel parse_level(std::string_view name) {
  if (name == "desk") return VerifyLevel::desk;
  if (name == "deep") return VerifyLevel::deep;
  fail(ErrorKind::Domain, "unknown level '" + std::string(name) + "' (expected desk or deep)");
}

std::string_view to_string(VerifyLevel level) { return level == VerifyLevel::desk ? "desk" : "deep"; }

std::vector<CheckResult> density_checks(std::uint64_t seed, std::size_t N, unsigned workers) {
  std::vector<CheckResult> out;
  const EnsembleOptions options{workers};

  for (int n : {3, 10, 50}) {
    const double total = integrate(
        [n](double r) {
          return 2 * kPi * r * block_density(Eigen::MatrixXcd::Constant(1, 1, r), n);
        },
        0.0, 1.0, 1e-13, 1e-13);
    out.push_back(le(9, "block density p=q=1 n=" + std::to_string(n) + " |integral - 1|", std::abs(total - 1), 1e-8));
  }
  for (int n : {2, 5, 10}) {
    const double total = integrate_to_infinity(
        [n](double v) {
          return wishart_density(HermitianMatrix::scalar(v), 1, n, HermitianMatrix::scalar(1.0));
        },
        0.0, 1e-13, 1e-13);
    out.push_back(le(9, "wishart p=1 n=" + std::to_string(n) + " |integral - 1|", std::abs(total - 1), 1e-8));
  }
  for (auto [a, b] : {std::pair{1.0, 9.0}, std::pair{2.0, 4.0}, std::pair{3.5, 2.5}}) {
    const double total = integrate(
        [a, b](double v) {
          if (v <= 0.0 || v >= 1.0) return 0.0;
          return cbi_density(HermitianMatrix::scalar(v), 1, a, b);
        },
        0.0, 1.0, 1e-13, 1e-13);
    out.push_back(le(9, "cbi m=1 a=" + format_value(a) + " b=" + format_value(b) + " |integral - 1|",
                     std::abs(total - 1), 1e-8));
  }

  const auto block_ks = [&](int p, int n, std::uint64_t tag) {
    const auto samples = sample_scalars(
        N, SeedStream(seed, mix64(0x626c6f636bULL + tag)),
        [p, n](SeedStream& s) { return sample_block_gram(p, n, s); }, options);
    return ks_distance(samples, [p, n](double x) { return beta_cdf(x, p, n - p); });
  };
  out.push_back(le(9, "KS |U_11|^2 vs Beta(1,9) at n=10", block_ks(1, 10, 0), 0.01));
  std::uint64_t tag = 1;
  for (int p : {1, 2}) {
    for (int n : {6, 10}) {
      out.push_back(le(9, "KS D^*D vs CBI_1(" + std::to_string(p) + "," + std::to_string(n - p) + ")",
                       block_ks(p, n, tag++), 0.015));
    }
  }

  for (int r : {1, 2}) {
    constexpr int n = 20;
    const RatioArgmax m = ratio_argmax_check(r, n, 100'000);
    const double expected = (r + 1.0) / n;
    out.push_back(le(9, "ratio argmax r=" + std::to_string(r) + " n=20 vs (r+1)/n", std::abs(m.argmax - expected),
                     1e-5));
    out.push_back(le(9, "max ratio r=" + std::to_string(r) + " n=20 vs (1-(r+1)/n)^-1", m.max_ratio,
                     1 / (1 - expected)));
  }
  return out;
}

std::vector<CheckResult> run_criterion(int criterion, const VerifyConfig& config) {
  const std::size_t scale = config.level == VerifyLevel::deep ? 10 : 1;
  const Context ctx{config.seed, EnsembleOptions{std::max(1u, config.workers)}, kDeskSamples * scale,
                    kDeskTvSamples * scale};
  switch (criterion) {
    case 1: return structural(ctx);
    case 2: return arm_moments(ctx);
    case 3: return closed_curvature(ctx);
    case 4: return transfer(ctx);
    case 5: return tv(ctx);
    case 6: return formulas();
    case 7: return variance(ctx);
    case 8: return chebyshev(ctx);
    case 9: return density_checks(config.seed, ctx.N, config.workers);
    case 10: return determinism(ctx);
    default: fail(ErrorKind::Domain, "criterion must be in 1.." + std::to_string(kCriterionCount));
  }
}

std::vector<CheckResult> run_acceptance(const VerifyConfig& config) {
  if (config.criterion) return run_criterion(*config.criterion, config);
  std::vector<CheckResult> all;
  for (int c = 1; c <= kCriterionCount; ++c) {
    auto part = run_criterion(c, config);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void write_checks_csv(std::ostream& out, const std::vector<CheckResult>& checks) {
  out << "criterion,check,measured,relation,threshold,result\n";
  for (const auto& c : checks) {
    out << c.criterion << ",\"" << c.name << "\"," << format_value(c.measured) << ',' << c.relation << ','
        << format_value(c.threshold) << ',' << (c.pass ? "PASS" : "FAIL") << '\n';
  }
}

}  // namespace symmpoly
