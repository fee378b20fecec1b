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
#include <vector>

#include <Eigen/Core>

#include "symmpoly/polygon.hpp"
#include "symmpoly/random.hpp"

namespace symmpoly {

/// Samples per chunk. Chunk c of an ensemble draws from base.substream(c),
/// so results depend on (seed, stream, count, kEnsembleChunk) and never on
/// the number of workers.
inline constexpr std::size_t kEnsembleChunk = 1024;

/// Excluding more than this fraction of degenerate samples is an error.
inline constexpr double kMaxExcludedFraction = 1e-4;

struct EnsembleOptions {
  unsigned workers = 1;
};

/// Runs fn(chunk) for chunk in [0, chunks) on up to `workers` threads.
/// Exceptions from fn are rethrown on the calling thread.
void parallel_chunks(std::size_t chunks, unsigned workers,
                     const std::function<void(std::size_t)>& fn);

/// Writes one row of values for a polygon. May throw a degenerate-geometry
/// Error, in which case the sample is excluded.
using PolygonMap = std::function<void(const Polygon&, std::span<double>)>;

struct EnsembleValues {
  Eigen::MatrixXd values;  // kept samples x width, in sample order
  std::size_t requested = 0;
  std::size_t excluded = 0;

  std::span<const double> column(Eigen::Index j) const {
    return {values.col(j).data(), static_cast<std::size_t>(values.rows())};
  }
};

/// Samples `count` polygons and maps each to `width` values. Throws
/// ErrorKind::Reliability when more than kMaxExcludedFraction are excluded.
EnsembleValues generate_values(Space space, Eigen::Index n, std::size_t count,
                               const SeedStream& base, int width, const PolygonMap& map,
                               const EnsembleOptions& options = {});

std::vector<Polygon> sample_ensemble(Space space, Eigen::Index n, std::size_t count,
                                     const SeedStream& base, const EnsembleOptions& options = {});

/// `count` draws of fn, chunked and seeded like the polygon ensembles.
std::vector<double> sample_scalars(std::size_t count, const SeedStream& base,
                                   const std::function<double(SeedStream&)>& fn,
                                   const EnsembleOptions& options = {});

}  // namespace symmpoly
