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
#include <memory>
#include <string>
#include <vector>

#include "land/kernels.hpp"
#include "land/linalg.hpp"
#include "land/scoring.hpp"

namespace land {

// Inactive features whose correlation decays at (numerically) the rate of the
// active level can never catch up; exact duplicates of an active feature sit
// at this saturation point and are skipped as tie candidates.
inline constexpr double kTieSaturation = 1e-12;

// The path ends once the shared active score drops to this floor.
inline constexpr double kLevelFloor = 1e-12;

// Diagonal jitter applied when the active Gram system is singular.
inline constexpr double kGramRidge = 1e-10;

// Abstracts where relevance f and redundancy Q come from, so the same path
// algorithm runs on Nystrom maps, exact kernels, or explicit matrices.
class ScoreSource {
 public:
  virtual ~ScoreSource() = default;
  virtual int count() const = 0;
  virtual const Vector& relevance() const = 0;
  virtual Vector redundancy_column(int j) const = 0;
};

class NystromScoreSource : public ScoreSource {
 public:
  NystromScoreSource(std::vector<FeatureMap> maps, OutputMap g, EngineConfig engine);

  int count() const override;
  const Vector& relevance() const override;
  Vector redundancy_column(int j) const override;

  const std::vector<FeatureMap>& maps() const { return maps_; }
  const OutputMap& output_map() const { return g_; }

 private:
  std::vector<FeatureMap> maps_;
  OutputMap g_;
  EngineConfig engine_;
  Vector relevance_;
};

// Full-kernel scores; memory is O(d n^2), so construction is guarded.
class ExactKernelSource : public ScoreSource {
 public:
  ExactKernelSource(const Matrix& x, const Target& y, const KernelConfig& cfg);

  int count() const override;
  const Vector& relevance() const override;
  Vector redundancy_column(int j) const override;

 private:
  std::vector<Matrix> kernels_;
  Vector relevance_;
};

// Explicit f and Q, mainly for solver tests.
class MatrixScoreSource : public ScoreSource {
 public:
  MatrixScoreSource(Vector f, Matrix q);

  int count() const override;
  const Vector& relevance() const override;
  Vector redundancy_column(int j) const override;

 private:
  Vector f_;
  Matrix q_;
};

// One path breakpoint, recorded when a feature enters the active set. The
// entering coefficient is still zero at that instant.
struct PathStep {
  int entered_feature = -1;
  std::vector<int> active_set;  // entry order, includes the entrant
  Vector alpha;                 // aligned with active_set
  double score_level = 0.0;     // shared active score at entry
};

struct SelectionPath {
  std::vector<PathStep> steps;
  std::vector<int> final_active;  // entry order, after the final step
  Vector final_alpha;             // aligned with final_active
  double final_level = 0.0;
  std::vector<int> dropped;       // left the path; barred from re-entry
  std::string stop_reason;        // max_features | level_zero | exhausted | max_events
  Vector relevance;               // full f over all features

  const std::vector<int>& selected() const { return final_active; }
};

// Penalty level equivalent to a path score level (lambda = 2 * level).
double implied_lambda(double score_level);

// Non-negative LARS over the given scores; selects up to num_features
// features, then takes one final step so the last entrant picks up weight.
SelectionPath lars_select(const ScoreSource& source, int num_features);

struct SelectionResult {
  SelectionPath path;
  std::size_t map_entries = 0;
  std::vector<int> degenerate_features;
};

// Standardize rows of x, build Nystrom maps and the output map, run the path.
SelectionResult land_select(const Matrix& x, const Target& y, const KernelConfig& cfg,
                            const EngineConfig& engine, int num_features);

// Full d x d redundancy matrix assembled column by column.
Matrix redundancy_matrix(const ScoreSource& source);

struct CdResult {
  Vector alpha;
  int sweeps = 0;
  bool converged = false;
};

inline constexpr double kCdTolerance = 1e-10;
inline constexpr int kCdMaxSweeps = 100000;

// Cyclic coordinate descent for min 1 - 2 f'a + a'Qa + lambda |a|_1, a >= 0.
// Independent of the path solver; used as its correctness oracle.
CdResult solve_nonneg_lasso_cd(const Matrix& q, const Vector& f, double lambda);

// The direct-minimization oracle at a fixed penalty: exact full kernels for
// every feature, then coordinate descent. Guarded to small problems because
// memory is O(d n^2).
inline constexpr int kNaiveMaxFeatures = 200;
inline constexpr int kNaiveMaxSamples = 200;
CdResult hsic_lasso_naive(const Matrix& x, const Target& y, const KernelConfig& cfg,
                          double lambda);

// 1 - 2 f'alpha + alpha'Q alpha + lambda |alpha|_1; rejects negative alpha
// (beyond -1e-12 roundoff slack).
double objective_value(const Vector& alpha, const Vector& f, const Matrix& q, double lambda);

}  // namespace land

