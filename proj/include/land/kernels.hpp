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

#include <vector>

#include "land/linalg.hpp"

namespace land {

/// NHSIC maps are scaled so self-dependence scores exactly 1; HSIC maps keep
/// the centered but unnormalized factors.
enum class ScoreMode { NHSIC, HSIC };

enum class TaskKind { Regression, Classification };

struct KernelConfig {
  double sigma_u = 1.0;
  double sigma_y = 1.0;
  int basis_count = 20;
  /// Shared basis for all features. Empty means the uniform grid over [-5, 5]
  /// with basis_count points. Must be strictly increasing when given.
  std::vector<double> basis_values;
  ScoreMode score_mode = ScoreMode::NHSIC;

  void validate() const;
  /// Resolved basis vector (explicit values or the default grid).
  Vector basis() const;
};

/// Uniform grid of b points spanning [-5, 5] inclusive.
std::vector<double> uniform_basis_grid(int b);

/// Zero-mean, unit sample standard deviation (divisor n-1). A constant input
/// maps to the all-zero vector with the degenerate flag set.
struct StandardizedVector {
  Vector values;
  bool degenerate = false;
};
StandardizedVector standardize(const Vector& u);

double gaussian_kernel(double u, double v, double sigma);

/// Low-rank surrogate for one feature's normalized Gram matrix: F F^T ~ K~.
/// Columns of f sum to zero; in NHSIC mode tr((F^T F)^2) = 1.
struct FeatureMap {
  int feature_index = -1;
  Matrix f;  // n x b
  bool degenerate = false;
};

/// Factor for the target: Nystrom Gaussian map (regression, n x b) or the
/// centered normalized class indicator (classification, n x C).
struct OutputMap {
  Matrix g;
  std::vector<int> class_counts;  // classification only
  bool degenerate = false;
};

/// Supervised target. Regression keeps raw values; classification keeps
/// contiguous labels 0..C-1 with every class non-empty.
struct Target {
  TaskKind kind = TaskKind::Regression;
  Vector values;            // regression values (size n)
  std::vector<int> labels;  // classification labels (size n)
  int num_classes = 0;

  int n() const;
  void validate() const;
};

Target make_regression_target(Vector values);
/// Relabels arbitrary integer labels to the contiguous range 0..C-1
/// (ascending by original value).
Target make_classification_target(const std::vector<long long>& raw_labels);

/// Class indicator with entries 1/sqrt(n_class), before centering.
Matrix class_indicator_matrix(const std::vector<int>& labels, int num_classes);

FeatureMap build_feature_map(const StandardizedVector& u, const KernelConfig& cfg,
                             int feature_index = -1);
OutputMap build_output_map(const Target& y, const KernelConfig& cfg);

/// Exact-path oracle: full Gaussian (or delta) kernel matrix, double-centered
/// and scaled to unit Frobenius norm. Refuses n above the guard; this path is
/// for validation only.
inline constexpr int kFullKernelMaxN = 2000;
Matrix full_normalized_kernel(const StandardizedVector& u, const KernelConfig& cfg);
Matrix full_normalized_kernel(const Target& y, const KernelConfig& cfg);

}  // namespace land
