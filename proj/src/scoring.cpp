// Copyright 2026 The land-select Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "land/scoring.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace land {

void EngineConfig::validate() const {
  if (workers < 1) throw ValidationError("EngineConfig: workers must be at least 1");
  if (chunk_size < 0) throw ValidationError("EngineConfig: chunk_size must be non-negative");
}

int EngineConfig::resolve_chunk(int count) const {
  if (chunk_size > 0) return chunk_size;
  const int denom = 4 * workers;
  return std::max(1, (count + denom - 1) / denom);
}

void parallel_for_chunks(int count, const EngineConfig& engine,
                         const std::function<void(int, int)>& fn) {
  engine.validate();
  if (count <= 0) return;
  const int chunk = engine.resolve_chunk(count);
  const int num_chunks = (count + chunk - 1) / chunk;
  const int threads = std::min(engine.workers, num_chunks);
  if (threads <= 1) {
    for (int c = 0; c < num_chunks; ++c) {
      const int begin = c * chunk;
      fn(begin, std::min(begin + chunk, count));
    }
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const int c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= num_chunks) return;
      const int begin = c * chunk;
      try {
        fn(begin, std::min(begin + chunk, count));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

// Strict weak order on (shape, content); fixes the GEMM operand order so
// nhsic_approx(a, b) and nhsic_approx(b, a) run the same instructions.
bool matrix_less(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  const double* pa = a.data();
  const double* pb = b.data();
  const Eigen::Index sz = a.size();
  for (Eigen::Index i = 0; i < sz; ++i) {
    if (pa[i] != pb[i]) return pa[i] < pb[i];
  }
  return false;
}

}  // namespace

double nhsic_approx(const Matrix& fa, const Matrix& fb) {
  if (fa.rows() != fb.rows()) {
    throw ValidationError("nhsic_approx: row (observation) counts differ");
  }
  const Matrix& lo = matrix_less(fb, fa) ? fb : fa;
  const Matrix& hi = (&lo == &fa) ? fb : fa;
  return (lo.transpose() * hi).squaredNorm();
}

double nhsic_exact(const Matrix& ka, const Matrix& kb) {
  if (ka.rows() != ka.cols() || kb.rows() != kb.cols() || ka.rows() != kb.rows()) {
    throw ValidationError("nhsic_exact: kernels must be square and same size");
  }
  return ka.cwiseProduct(kb).sum();
}

std::vector<FeatureMap> build_feature_maps(const Matrix& x, const KernelConfig& cfg,
                                           const EngineConfig& engine) {
  cfg.validate();
  check_finite(x, "build_feature_maps");
  const int d = static_cast<int>(x.rows());
  std::vector<FeatureMap> maps(static_cast<std::size_t>(d));
  parallel_for_chunks(d, engine, [&](int begin, int end) {
    for (int k = begin; k < end; ++k) {
      maps[static_cast<std::size_t>(k)] =
          build_feature_map(standardize(x.row(k).transpose()), cfg, k);
    }
  });
  return maps;
}

Vector relevance_scores(const std::vector<FeatureMap>& maps, const OutputMap& g,
                        const EngineConfig& engine) {
  const int d = static_cast<int>(maps.size());
  Vector f(d);
  parallel_for_chunks(d, engine, [&](int begin, int end) {
    for (int k = begin; k < end; ++k) {
      f[k] = nhsic_approx(maps[static_cast<std::size_t>(k)].f, g.g);
    }
  });
  return f;
}

Vector redundancy_column(const std::vector<FeatureMap>& maps, int j,
                         const EngineConfig& engine) {
  const int d = static_cast<int>(maps.size());
  if (j < 0 || j >= d) throw ValidationError("redundancy_column: index out of range");
  Vector col(d);
  parallel_for_chunks(d, engine, [&](int begin, int end) {
    for (int k = begin; k < end; ++k) {
      col[k] = nhsic_approx(maps[static_cast<std::size_t>(k)].f,
                            maps[static_cast<std::size_t>(j)].f);
    }
  });
  return col;
}

std::size_t map_entry_count(const std::vector<FeatureMap>& maps) {
  std::size_t total = 0;
  for (const auto& m : maps) total += static_cast<std::size_t>(m.f.size());
  return total;
}

}  // namespace land
