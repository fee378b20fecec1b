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

#include "symmpoly/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "symmpoly/error.hpp"

namespace symmpoly {

double pairwise_sum(std::span<const double> x) {
  if (x.size() <= 16) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
  }
  const std::size_t half = x.size() / 2;
  return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

double mean(std::span<const double> x) {
  if (x.empty()) fail(ErrorKind::InvalidSize, "mean of an empty sample");
  return pairwise_sum(x) / static_cast<double>(x.size());
}

double sample_variance(std::span<const double> x) {
  return sample_covariance(x, x);
}

double sample_covariance(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    fail(ErrorKind::InvalidSize, "covariance needs two equal samples of size >= 2");
  }
  const double mx = mean(x), my = mean(y);
  std::vector<double> products(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) products[i] = (x[i] - mx) * (y[i] - my);
  return pairwise_sum(products) / static_cast<double>(x.size() - 1);
}

double sample_correlation(std::span<const double> x, std::span<const double> y) {
  return sample_covariance(x, y) / std::sqrt(sample_variance(x) * sample_variance(y));
}

double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) fail(ErrorKind::InvalidSize, "ks_distance of an empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double count = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / count - f, f - static_cast<double>(i) / count});
  }
  return d;
}

double chi_square_uniform(std::span<const double> samples, double lo, double hi, int bins) {
  if (bins < 2 || !(hi > lo) || samples.empty()) {
    fail(ErrorKind::Domain, "chi_square_uniform: need bins >= 2, hi > lo and samples");
  }
  std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
  for (double v : samples) {
    auto cell = static_cast<long>(std::floor((v - lo) / (hi - lo) * bins));
    cell = std::clamp<long>(cell, 0, bins - 1);
    counts[static_cast<std::size_t>(cell)] += 1.0;
  }
  const double expected = static_cast<double>(samples.size()) / bins;
  double chi2 = 0.0;
  for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
  return chi2;
}

double chebyshev_coverage(std::span<const double> samples, double lo, double hi) {
  if (samples.empty()) fail(ErrorKind::InvalidSize, "chebyshev_coverage of an empty sample");
  std::size_t outside = 0;
  for (double v : samples) outside += (v < lo || v > hi) ? 1 : 0;
  return static_cast<double>(outside) / static_cast<double>(samples.size());
}

__extension__ using uint128 = unsigned __int128;

std::size_t uniform_index(SeedStream& s, std::size_t count) {
  const uint128 wide = static_cast<uint128>(s()) * count;
  return static_cast<std::size_t>(wide >> 64);
}

double bootstrap_standard_error(
    std::size_t count, const std::function<double(std::span<const std::size_t>)>& statistic,
    int resamples, SeedStream stream) {
  if (count < 2 || resamples < 2) fail(ErrorKind::InvalidSize, "bootstrap needs count >= 2 and resamples >= 2");
  std::vector<double> replicates(static_cast<std::size_t>(resamples));
  std::vector<std::size_t> idx(count);
  for (auto& r : replicates) {
    for (auto& i : idx) i = uniform_index(stream, count);
    r = statistic(idx);
  }
  return std::sqrt(sample_variance(replicates));
}

}  // namespace symmpoly
