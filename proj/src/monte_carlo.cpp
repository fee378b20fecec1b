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

#include "symmpoly/monte_carlo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>
#include <ostream>

#include "symmpoly/error.hpp"
#include "symmpoly/statistics.hpp"

namespace symmpoly {
namespace {

// Parses the 1-based index in names like theta_3.
std::optional<Eigen::Index> suffix_index(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix)) return std::nullopt;
  const std::string_view digits = name.substr(prefix.size());
  long value = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || end != digits.data() + digits.size() || value < 1) return std::nullopt;
  return static_cast<Eigen::Index>(value);
}

void require_window(const Polygon& p, Eigen::Index start, int k) {
  const Eigen::Index last = start + k - 1;
  if (p.closed() ? k > p.n() : last >= p.n()) {
    fail(ErrorKind::InvalidSize, "window runs past the last edge");
  }
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

SeedStream ensemble_stream(std::uint64_t seed, Space space, Eigen::Index n, std::uint64_t tag) {
  const std::uint64_t id =
      mix64(mix64(mix64(static_cast<std::uint64_t>(space) + 1) + static_cast<std::uint64_t>(n)) + tag);
  return {seed, id};
}

EnsembleFunctional builtin_functional(std::string_view name) {
  if (name == "total_curvature") return {std::string(name), [](const Polygon& p) { return total_curvature(p); }};
  if (name == "total_torsion") return {std::string(name), [](const Polygon& p) { return total_torsion(p); }};
  if (auto i = suffix_index(name, "theta_")) {
    EnsembleFunctional f = window_functional(turning_angle_functional(), *i - 1);
    f.name = std::string(name);
    return f;
  }
  if (auto i = suffix_index(name, "tau_")) {
    EnsembleFunctional f = window_functional(torsion_angle_functional(), *i - 1);
    f.name = std::string(name);
    return f;
  }
  fail(ErrorKind::Domain, "unknown functional '" + std::string(name) + "'");
}

EnsembleFunctional window_functional(const LocalFunctional& f, Eigen::Index start) {
  std::string name = f.name;
  if (start != 0) name += "@" + std::to_string(start + 1);
  return {name, [f, start](const Polygon& p) {
            require_window(p, start, f.k);
            return f.eval(edge_window(p, start, f.k));
          }};
}

const FunctionalStats& EnsembleSummary::at(std::string_view name) const {
  for (const auto& r : records) {
    if (r.name == name) return r;
  }
  fail(ErrorKind::Domain, "no functional named '" + std::string(name) + "' in summary");
}

EnsembleSummary summarize(Space space, Eigen::Index n, std::uint64_t seed, const EnsembleValues& values,
                          const std::vector<EnsembleFunctional>& functionals) {
  EnsembleSummary s;
  s.space = space;
  s.n = n;
  s.N = static_cast<std::size_t>(values.values.rows());
  s.seed = seed;
  s.excluded = values.excluded;
  for (std::size_t j = 0; j < functionals.size(); ++j) {
    const auto col = values.column(static_cast<Eigen::Index>(j));
    FunctionalStats r;
    r.name = functionals[j].name;
    r.mean = mean(col);
    r.variance = std::max(0.0, sample_variance(col));
    r.std_error = std::sqrt(r.variance / static_cast<double>(s.N));
    s.records.push_back(std::move(r));
  }
  return s;
}

EnsembleRun run_ensemble_values(Space space, Eigen::Index n, std::size_t N,
                                const std::vector<EnsembleFunctional>& functionals,
                                std::uint64_t seed, const EnsembleOptions& options,
                                std::uint64_t tag) {
  if (N < 2) fail(ErrorKind::InvalidSize, "run_ensemble needs N >= 2");
  if (functionals.empty()) fail(ErrorKind::InvalidSize, "run_ensemble needs a functional");
  const int width = static_cast<int>(functionals.size());
  EnsembleRun run;
  run.values = generate_values(
      space, n, N, ensemble_stream(seed, space, n, tag), width,
      [&](const Polygon& p, std::span<double> row) {
        for (int j = 0; j < width; ++j) row[j] = functionals[j].eval(p);
      },
      options);
  run.summary = summarize(space, n, seed, run.values, functionals);
  return run;
}

EnsembleSummary run_ensemble(Space space, Eigen::Index n, std::size_t N,
                             const std::vector<EnsembleFunctional>& functionals,
                             std::uint64_t seed, const EnsembleOptions& options, std::uint64_t tag) {
  return run_ensemble_values(space, n, N, functionals, seed, options, tag).summary;
}

void write_summary_csv(std::ostream& out, const EnsembleSummary& s) {
  out << "space,n,N,seed,excluded,functional,mean,variance,std_error\n";
  for (const auto& r : s.records) {
    out << to_string(s.space) << ',' << s.n << ',' << s.N << ',' << s.seed << ',' << s.excluded << ','
        << r.name << ',' << format_double(r.mean) << ',' << format_double(r.variance) << ','
        << format_double(r.std_error) << '\n';
  }
}

namespace {

double half_l1(const std::vector<std::uint64_t>& a, std::size_t na, const std::vector<std::uint64_t>& b,
               std::size_t nb) {
  std::vector<double> diffs(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) {
    diffs[c] = std::abs(static_cast<double>(a[c]) / static_cast<double>(na) -
                        static_cast<double>(b[c]) / static_cast<double>(nb));
  }
  return std::min(1.0, 0.5 * pairwise_sum(diffs));
}

std::vector<std::uint64_t> count_cells(std::span<const std::size_t> cell, std::size_t begin, std::size_t end,
                                       std::size_t cells) {
  std::vector<std::uint64_t> counts(cells, 0);
  for (std::size_t i = begin; i < end; ++i) ++counts[cell[i]];
  return counts;
}

}  // namespace

GridHistogram binned_tv(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, int bins_per_axis,
                        SeedStream bootstrap_stream) {
  if (bins_per_axis < 4) fail(ErrorKind::Domain, "binned_tv needs bins_per_axis >= 4");
  if (a.cols() != b.cols() || a.cols() < 1) fail(ErrorKind::InvalidDimension, "binned_tv: column mismatch");
  if (a.rows() < 2 || b.rows() < 2) fail(ErrorKind::InvalidSize, "binned_tv needs at least two samples each");
  const int dim = static_cast<int>(a.cols());
  const auto na = static_cast<std::size_t>(a.rows());
  const auto nb = static_cast<std::size_t>(b.rows());

  const double cells_d = std::pow(static_cast<double>(bins_per_axis), dim);
  if (cells_d * 50.0 > static_cast<double>(std::min(na, nb))) {
    fail(ErrorKind::Resolution, "binned_tv: " + format_double(cells_d) + " cells exceed N/50 for N = " +
                                    std::to_string(std::min(na, nb)));
  }
  const auto cells = static_cast<std::size_t>(cells_d);

  GridHistogram g;
  g.dim = dim;
  g.bins_per_axis = bins_per_axis;
  g.N = na;
  for (int d = 0; d < dim; ++d) {
    const double lo = std::min(a.col(d).minCoeff(), b.col(d).minCoeff());
    const double hi = std::max(a.col(d).maxCoeff(), b.col(d).maxCoeff());
    const double pad = 0.01 * std::max(hi - lo, 1e-300);
    g.ranges.emplace_back(lo - pad, hi + pad);
  }

  auto cell_of = [&](const Eigen::MatrixXd& m, Eigen::Index row) {
    std::size_t cell = 0;
    for (int d = 0; d < dim; ++d) {
      const auto [lo, hi] = g.ranges[static_cast<std::size_t>(d)];
      auto j = static_cast<long>(std::floor((m(row, d) - lo) / (hi - lo) * bins_per_axis));
      j = std::clamp<long>(j, 0, bins_per_axis - 1);
      cell = cell * static_cast<std::size_t>(bins_per_axis) + static_cast<std::size_t>(j);
    }
    return cell;
  };
  std::vector<std::size_t> cell_a(na), cell_b(nb);
  for (std::size_t i = 0; i < na; ++i) cell_a[i] = cell_of(a, static_cast<Eigen::Index>(i));
  for (std::size_t i = 0; i < nb; ++i) cell_b[i] = cell_of(b, static_cast<Eigen::Index>(i));

  g.counts_a = count_cells(cell_a, 0, na, cells);
  g.counts_b = count_cells(cell_b, 0, nb, cells);
  g.tv_estimate = half_l1(g.counts_a, na, g.counts_b, nb);

  const std::size_t half = na / 2;
  g.null_calibration = half_l1(count_cells(cell_a, 0, half, cells), half,
                               count_cells(cell_a, half, na, cells), na - half);

  std::vector<double> replicates(kBootstrapResamples);
  std::vector<std::uint64_t> ra(cells), rb(cells);
  for (int r = 0; r < kBootstrapResamples; ++r) {
    std::fill(ra.begin(), ra.end(), 0);
    std::fill(rb.begin(), rb.end(), 0);
    for (std::size_t i = 0; i < na; ++i) ++ra[cell_a[uniform_index(bootstrap_stream, na)]];
    for (std::size_t i = 0; i < nb; ++i) ++rb[cell_b[uniform_index(bootstrap_stream, nb)]];
    replicates[static_cast<std::size_t>(r)] = half_l1(ra, na, rb, nb);
  }
  g.tv_std_error = std::sqrt(sample_variance(replicates));
  return g;
}

GridHistogram estimate_tv(Space space_a, Space space_b, Eigen::Index n, Eigen::Index k, std::size_t N,
                          int bins_per_axis, std::uint64_t seed, const EnsembleOptions& options) {
  if (dimension(space_a) != dimension(space_b)) {
    fail(ErrorKind::InvalidDimension, "estimate_tv: spaces of different dimension");
  }
  if (k < 1 || k > n) fail(ErrorKind::InvalidSize, "estimate_tv: need 1 <= k <= n");
  const int width = dimension(space_a) * static_cast<int>(k);
  auto segments = [&](Space space, std::uint64_t tag) {
    return generate_values(
               space, n, N, ensemble_stream(seed, space, n, tag), width,
               [&](const Polygon& p, std::span<double> row) {
                 const Eigen::VectorXd s = segment(p, k);
                 std::copy(s.data(), s.data() + s.size(), row.begin());
               },
               options)
        .values;
  };
  // Reject an unresolvable grid before sampling anything.
  if (std::pow(static_cast<double>(bins_per_axis), width) * 50.0 > static_cast<double>(N)) {
    fail(ErrorKind::Resolution, "estimate_tv: bins^(dim k) exceeds N/50");
  }
  const Eigen::MatrixXd a = segments(space_a, 1);
  const Eigen::MatrixXd b = segments(space_b, 2);
  return binned_tv(a, b, bins_per_axis, ensemble_stream(seed, space_a, n, 3));
}

void write_grid_csv(std::ostream& out, const GridHistogram& g) {
  out << "cell";
  for (int d = 0; d < g.dim; ++d) out << ",x_" << d;
  out << ",freq_a,freq_b\n";
  const auto nb = static_cast<double>(
      std::max<std::uint64_t>(1, std::accumulate(g.counts_b.begin(), g.counts_b.end(), std::uint64_t{0})));
  const auto na = static_cast<double>(
      std::max<std::uint64_t>(1, std::accumulate(g.counts_a.begin(), g.counts_a.end(), std::uint64_t{0})));
  std::vector<int> index(static_cast<std::size_t>(g.dim));
  for (std::size_t c = 0; c < g.cells(); ++c) {
    std::size_t rest = c;
    for (int d = g.dim - 1; d >= 0; --d) {
      index[static_cast<std::size_t>(d)] = static_cast<int>(rest % static_cast<std::size_t>(g.bins_per_axis));
      rest /= static_cast<std::size_t>(g.bins_per_axis);
    }
    out << c;
    for (int d = 0; d < g.dim; ++d) {
      const auto [lo, hi] = g.ranges[static_cast<std::size_t>(d)];
      out << ',' << format_double(lo + (index[static_cast<std::size_t>(d)] + 0.5) * (hi - lo) / g.bins_per_axis);
    }
    out << ',' << format_double(static_cast<double>(g.counts_a[c]) / na) << ','
        << format_double(static_cast<double>(g.counts_b[c]) / nb) << '\n';
  }
}

namespace {

enum Slot { kS0, kS1, kS2, kMean, kKappa, kSlots };

struct PartitionMoments {
  double s0, s1, s2, m, kappa, kappa_sq;
};

CovariancePartition assemble(const PartitionMoments& avg, double L, bool closed, std::size_t N) {
  CovariancePartition c;
  const double m2 = avg.m * avg.m;
  c.c_self = avg.s0 - m2;
  c.c_adjacent = avg.s1 - m2;
  c.c_distant = avg.s2 - m2;
  c.assembled_variance = closed ? L * c.c_self + 2 * L * c.c_adjacent + L * (L - 3) * c.c_distant
                                : L * c.c_self + 2 * (L - 1) * c.c_adjacent + (L - 1) * (L - 2) * c.c_distant;
  const double n = static_cast<double>(N);
  c.direct_variance = (avg.kappa_sq - avg.kappa * avg.kappa) * n / (n - 1);
  c.N = N;
  return c;
}

}  // namespace

CovariancePartition covariance_partition(Space space, Eigen::Index n, std::size_t N, std::uint64_t seed,
                                         const EnsembleOptions& options) {
  if (n < 7) fail(ErrorKind::InvalidSize, "covariance_partition needs n >= 7");
  if (N < 2) fail(ErrorKind::InvalidSize, "covariance_partition needs N >= 2");
  const bool closed = is_closed(space);
  const EnsembleValues v = generate_values(
      space, n, N, ensemble_stream(seed, space, n, 4), kSlots,
      [closed](const Polygon& p, std::span<double> row) {
        const std::vector<double> t = turning_angles(p);
        const std::size_t L = t.size();
        auto at = [&](std::size_t i) { return t[i % L]; };
        const std::size_t n1 = closed ? L : L - 1;
        const std::size_t n2 = closed ? L : L - 2;
        std::vector<double> sq(L), adj(n1), dist(n2);
        for (std::size_t i = 0; i < L; ++i) sq[i] = t[i] * t[i];
        for (std::size_t i = 0; i < n1; ++i) adj[i] = t[i] * at(i + 1);
        for (std::size_t i = 0; i < n2; ++i) dist[i] = t[i] * at(i + 2);
        row[kS0] = mean(sq);
        row[kS1] = mean(adj);
        row[kS2] = mean(dist);
        row[kKappa] = pairwise_sum(t);
        row[kMean] = row[kKappa] / static_cast<double>(L);
      },
      options);

  const auto kept = static_cast<std::size_t>(v.values.rows());
  const double L = static_cast<double>(closed ? n : n - 1);
  // Moments of kappa are taken about the ensemble mean to keep the
  // bootstrap's running sums well conditioned.
  const double shift = mean(v.column(kKappa));
  std::vector<double> centred(kept), centred_sq(kept);
  for (std::size_t i = 0; i < kept; ++i) {
    centred[i] = v.values(static_cast<Eigen::Index>(i), kKappa) - shift;
    centred_sq[i] = centred[i] * centred[i];
  }
  auto moments = [&](auto&& sum) {
    PartitionMoments m{sum(v.column(kS0)), sum(v.column(kS1)), sum(v.column(kS2)),
                       sum(v.column(kMean)), sum(std::span<const double>(centred)),
                       sum(std::span<const double>(centred_sq))};
    return m;
  };
  CovariancePartition result = assemble(moments([](std::span<const double> x) { return mean(x); }),
                                        L, closed, kept);

  SeedStream stream = ensemble_stream(seed, space, n, 5);
  std::vector<double> r_self(kBootstrapResamples), r_adj(kBootstrapResamples), r_dist(kBootstrapResamples),
      r_diff(kBootstrapResamples);
  std::vector<std::size_t> idx(kept);
  for (int r = 0; r < kBootstrapResamples; ++r) {
    for (auto& i : idx) i = uniform_index(stream, kept);
    const PartitionMoments avg = moments([&](std::span<const double> x) {
      double s = 0.0;
      for (std::size_t i : idx) s += x[i];
      return s / static_cast<double>(kept);
    });
    const CovariancePartition c = assemble(avg, L, closed, kept);
    const auto ri = static_cast<std::size_t>(r);
    r_self[ri] = c.c_self;
    r_adj[ri] = c.c_adjacent;
    r_dist[ri] = c.c_distant;
    r_diff[ri] = c.assembled_variance - c.direct_variance;
  }
  result.se_self = std::sqrt(sample_variance(r_self));
  result.se_adjacent = std::sqrt(sample_variance(r_adj));
  result.se_distant = std::sqrt(sample_variance(r_dist));
  result.se_difference = std::sqrt(sample_variance(r_diff));
  return result;
}

}  // namespace symmpoly
