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

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "land/kernels.hpp"
#include "land/linalg.hpp"

namespace land {

// Work scheduling for the scoring passes. Results are written by index into
// preallocated buffers, so every worker count produces bit-identical output.
struct EngineConfig {
  int workers = 1;
  int chunk_size = 0;  // 0: pick ceil(count / (4 * workers))

  void validate() const;
  int resolve_chunk(int count) const;
};

// Runs fn(begin, end) over [0, count) in chunks, possibly on worker threads.
// fn must only write to distinct indices of caller-owned storage.
void parallel_for_chunks(int count, const EngineConfig& engine,
                         const std::function<void(int, int)>& fn);

// ||Fa^T Fb||_F^2. Operands are ordered canonically first so the result is
// bit-identical under argument swap.
double nhsic_approx(const Matrix& fa, const Matrix& fb);

// tr(Ka Kb) for precomputed full normalized kernels.
double nhsic_exact(const Matrix& ka, const Matrix& kb);

// One map per row of x (features are rows, observations columns).
std::vector<FeatureMap> build_feature_maps(const Matrix& x, const KernelConfig& cfg,
                                           const EngineConfig& engine);

// f[k] = nhsic_approx(maps[k], g).
Vector relevance_scores(const std::vector<FeatureMap>& maps, const OutputMap& g,
                        const EngineConfig& engine);

// column[k] = nhsic_approx(maps[k], maps[j]).
Vector redundancy_column(const std::vector<FeatureMap>& maps, int j,
                         const EngineConfig& engine);

// Total stored map entries (d * n * b when nothing is degenerate).
std::size_t map_entry_count(const std::vector<FeatureMap>& maps);

}  // namespace land

