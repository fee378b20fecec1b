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

#include <cstddef>
#include <functional>
#include <span>

#include "symmpoly/random.hpp"

namespace symmpoly {

/// Pairwise (cascade) summation in index order; the result depends only on
/// the values and their order.
double pairwise_sum(std::span<const double> x);

double mean(std::span<const double> x);
/// Unbiased (N - 1) sample variance, two-pass.
double sample_variance(std::span<const double> x);
double sample_covariance(std::span<const double> x, std::span<const double> y);
double sample_correlation(std::span<const double> x, std::span<const double> y);

/// sup |F_N(x) - F(x)| over the sorted sample.
double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf);

/// Pearson chi-square statistic of `samples` against the uniform law on
/// [lo, hi) with `bins` equal cells. Values outside the range are counted in
/// the nearest edge cell.
double chi_square_uniform(std::span<const double> samples, double lo, double hi, int bins);

/// Fraction of samples strictly outside [lo, hi].
double chebyshev_coverage(std::span<const double> samples, double lo, double hi);

/// Uniform integer in [0, count).
std::size_t uniform_index(SeedStream& s, std::size_t count);

/// Bootstrap standard error of `statistic`, which receives the resampled
/// index set (indices into the caller's data, drawn with replacement).
double bootstrap_standard_error(
    std::size_t count, const std::function<double(std::span<const std::size_t>)>& statistic,
    int resamples, SeedStream stream);

inline constexpr int kBootstrapResamples = 200;

}  // namespace symmpoly
