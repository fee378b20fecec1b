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

#include "symmpoly/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "symmpoly/error.hpp"

namespace symmpoly {
namespace {

bool is_degenerate(const Error& e) {
  return e.kind() == ErrorKind::DegenerateEdge || e.kind() == ErrorKind::DegenerateTorsion;
}

std::size_t chunk_count(std::size_t count) { return (count + kEnsembleChunk - 1) / kEnsembleChunk; }

}  // namespace

void parallel_chunks(std::size_t chunks, unsigned workers,
                     const std::function<void(std::size_t)>& fn) {
  const unsigned threads = static_cast<unsigned>(
      std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(chunks, 1)));
  if (threads == 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        fn(c);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

EnsembleValues generate_values(Space space, Eigen::Index n, std::size_t count,
                               const SeedStream& base, int width, const PolygonMap& map,
                               const EnsembleOptions& options) {
  // Row-major scratch so each sample's values are contiguous.
  std::vector<double> scratch(count * static_cast<std::size_t>(width));
  std::vector<char> kept(count, 1);

  parallel_chunks(chunk_count(count), options.workers, [&](std::size_t c) {
    SeedStream stream = base.substream(c);
    const std::size_t begin = c * kEnsembleChunk;
    const std::size_t end = std::min(count, begin + kEnsembleChunk);
    for (std::size_t i = begin; i < end; ++i) {
      const Polygon p = sample_polygon(space, n, stream);
      try {
        map(p, std::span<double>(scratch).subspan(i * width, width));
      } catch (const Error& e) {
        if (!is_degenerate(e)) throw;
        kept[i] = 0;
      }
    }
  });

  EnsembleValues out;
  out.requested = count;
  out.excluded = static_cast<std::size_t>(std::count(kept.begin(), kept.end(), 0));
  if (static_cast<double>(out.excluded) > kMaxExcludedFraction * static_cast<double>(count)) {
    fail(ErrorKind::Reliability, std::to_string(out.excluded) + " of " + std::to_string(count) +
                                     " samples excluded as degenerate");
  }
  out.values.resize(static_cast<Eigen::Index>(count - out.excluded), width);
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (!kept[i]) continue;
    for (int j = 0; j < width; ++j) out.values(row, j) = scratch[i * width + j];
    ++row;
  }
  return out;
}

std::vector<Polygon> sample_ensemble(Space space, Eigen::Index n, std::size_t count,
                                     const SeedStream& base, const EnsembleOptions& options) {
  std::vector<std::optional<Polygon>> slots(count);
  parallel_chunks(chunk_count(count), options.workers, [&](std::size_t c) {
    SeedStream stream = base.substream(c);
    const std::size_t begin = c * kEnsembleChunk;
    const std::size_t end = std::min(count, begin + kEnsembleChunk);
    for (std::size_t i = begin; i < end; ++i) slots[i].emplace(sample_polygon(space, n, stream));
  });
  std::vector<Polygon> polygons;
  polygons.reserve(count);
  for (auto& s : slots) polygons.push_back(std::move(*s));
  return polygons;
}

std::vector<double> sample_scalars(std::size_t count, const SeedStream& base,
                                   const std::function<double(SeedStream&)>& fn,
                                   const EnsembleOptions& options) {
  std::vector<double> out(count);
  parallel_chunks(chunk_count(count), options.workers, [&](std::size_t c) {
    SeedStream stream = base.substream(c);
    const std::size_t begin = c * kEnsembleChunk;
    const std::size_t end = std::min(count, begin + kEnsembleChunk);
    for (std::size_t i = begin; i < end; ++i) out[i] = fn(stream);
  });
  return out;
}

}  // namespace symmpoly
