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

#include "land/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace land {

namespace {

// Relative eigenvalue clamp for K_bb^{-1/2}; basis points close under the
// kernel make K_bb nearly singular.
constexpr double kBasisClampRel = 1e-10;

}  // namespace

void KernelConfig::validate() const {
  if (!(sigma_u > 0.0) || !(sigma_y > 0.0)) {
    throw ValidationError("KernelConfig: kernel widths must be positive");
  }
  if (basis_values.empty()) {
    if (basis_count < 2) {
      throw ValidationError("KernelConfig: basis_count must be at least 2");
    }
    return;
  }
  if (basis_values.size() < 2) {
    throw ValidationError("KernelConfig: basis needs at least 2 points");
  }
  for (std::size_t i = 0; i < basis_values.size(); ++i) {
    if (!std::isfinite(basis_values[i])) {
      throw ValidationError("KernelConfig: non-finite basis value");
    }
    if (i > 0 && !(basis_values[i - 1] < basis_values[i])) {
      throw ValidationError("KernelConfig: basis values must be strictly increasing");
    }
  }
}

Vector KernelConfig::basis() const {
  validate();
  const std::vector<double> grid =
      basis_values.empty() ? uniform_basis_grid(basis_count) : basis_values;
  return Eigen::Map<const Vector>(grid.data(), static_cast<Eigen::Index>(grid.size()));
}

std::vector<double> uniform_basis_grid(int b) {
  if (b < 2) throw ValidationError("uniform_basis_grid: need at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(b));
  for (int j = 0; j < b; ++j) {
    grid[static_cast<std::size_t>(j)] = -5.0 + 10.0 * j / (b - 1);
  }
  return grid;
}

StandardizedVector standardize(const Vector& u) {
  check_finite(u, "standardize");
  const Eigen::Index n = u.size();
  if (n < 2) throw ValidationError("standardize: need at least 2 observations");
  const double mean = u.mean();
  const double ss = (u.array() - mean).square().sum();
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (sd == 0.0) {
    return {Vector::Zero(n), true};
  }
  return {(u.array() - mean).matrix() / sd, false};
}

double gaussian_kernel(double u, double v, double sigma) {
  if (!(sigma > 0.0)) throw ValidationError("gaussian_kernel: sigma must be positive");
  const double diff = u - v;
  return std::exp(-diff * diff / (2.0 * sigma * sigma));
}

int Target::n() const {
  return kind == TaskKind::Regression ? static_cast<int>(values.size())
                                      : static_cast<int>(labels.size());
}

void Target::validate() const {
  if (kind == TaskKind::Regression) {
    check_finite(values, "Target");
    if (values.size() < 1) throw ValidationError("Target: empty regression target");
    return;
  }
  if (labels.empty()) throw ValidationError("Target: empty classification target");
  if (num_classes < 1) throw ValidationError("Target: no classes");
  std::vector<int> counts(static_cast<std::size_t>(num_classes), 0);
  for (int lab : labels) {
    if (lab < 0 || lab >= num_classes) {
      throw ValidationError("Target: label outside 0..C-1");
    }
    ++counts[static_cast<std::size_t>(lab)];
  }
  for (int c : counts) {
    if (c == 0) throw ValidationError("Target: empty class");
  }
}

Target make_regression_target(Vector values) {
  Target t;
  t.kind = TaskKind::Regression;
  t.values = std::move(values);
  t.validate();
  return t;
}

Target make_classification_target(const std::vector<long long>& raw_labels) {
  if (raw_labels.empty()) throw ValidationError("Target: empty classification target");
  std::map<long long, int> ids;
  for (long long raw : raw_labels) ids.emplace(raw, 0);
  int next = 0;
  for (auto& [raw, id] : ids) id = next++;
  Target t;
  t.kind = TaskKind::Classification;
  t.num_classes = next;
  t.labels.reserve(raw_labels.size());
  for (long long raw : raw_labels) t.labels.push_back(ids.at(raw));
  t.validate();
  return t;
}

Matrix class_indicator_matrix(const std::vector<int>& labels, int num_classes) {
  std::vector<int> counts(static_cast<std::size_t>(num_classes), 0);
  for (int lab : labels) ++counts[static_cast<std::size_t>(lab)];
  Matrix g = Matrix::Zero(static_cast<Eigen::Index>(labels.size()), num_classes);
  for (std::size_t j = 0; j < labels.size(); ++j) {
    const int c = labels[j];
    g(static_cast<Eigen::Index>(j), c) = 1.0 / std::sqrt(static_cast<double>(counts[static_cast<std::size_t>(c)]));
  }
  return g;
}

namespace {

// Centered (and, in NHSIC mode, quartic-normalized) Nystrom factor for one
// variable. The all-zero case falls back to a flagged degenerate map.
Matrix nystrom_factor(const Vector& values, double sigma, const Vector& basis, ScoreMode mode,
                      bool* degenerate_out) {
  const Eigen::Index n = values.size();
  const Eigen::Index b = basis.size();
  Matrix k_nb(n, b);
  for (Eigen::Index j = 0; j < b; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      k_nb(i, j) = gaussian_kernel(values[i], basis[j], sigma);
    }
  }
  Matrix k_bb(b, b);
  for (Eigen::Index j = 0; j < b; ++j) {
    for (Eigen::Index i = 0; i < b; ++i) {
      k_bb(i, j) = gaussian_kernel(basis[i], basis[j], sigma);
    }
  }
  const Matrix centered = center_columns(k_nb * spd_inverse_sqrt_rel(k_bb, kBasisClampRel));
  if (centered.norm() == 0.0) {
    *degenerate_out = true;
    return Matrix::Zero(n, b);
  }
  *degenerate_out = false;
  if (mode == ScoreMode::HSIC) return centered;
  return centered / quartic_trace_norm(centered);
}

// Double-center then scale to unit Frobenius norm. Throws on a degenerate
// (constant) kernel.
Matrix normalize_full_kernel(Matrix k) {
  const Vector row_means = k.rowwise().mean();
  const double grand_mean = row_means.mean();
  k.colwise() -= row_means;
  k.rowwise() -= row_means.transpose();
  k.array() += grand_mean;
  const double frob = k.norm();
  if (frob == 0.0) {
    throw ValidationError("full_normalized_kernel: degenerate (constant) kernel");
  }
  return k / frob;
}

Matrix full_gaussian_kernel(const Vector& values, double sigma) {
  const Eigen::Index n = values.size();
  if (n > kFullKernelMaxN) {
    throw ValidationError("full_normalized_kernel: n exceeds the oracle guard");
  }
  Matrix k(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      k(i, j) = gaussian_kernel(values[i], values[j], sigma);
    }
  }
  return k;
}

}  // namespace

FeatureMap build_feature_map(const StandardizedVector& u, const KernelConfig& cfg,
                             int feature_index) {
  cfg.validate();
  check_finite(u.values, "build_feature_map");
  const Vector basis = cfg.basis();
  FeatureMap map;
  map.feature_index = feature_index;
  if (u.degenerate) {
    map.degenerate = true;
    map.f = Matrix::Zero(u.values.size(), basis.size());
    return map;
  }
  map.f = nystrom_factor(u.values, cfg.sigma_u, basis, cfg.score_mode, &map.degenerate);
  return map;
}

OutputMap build_output_map(const Target& y, const KernelConfig& cfg) {
  cfg.validate();
  y.validate();
  OutputMap out;
  if (y.kind == TaskKind::Regression) {
    const StandardizedVector sy = standardize(y.values);
    if (sy.degenerate) {
      out.degenerate = true;
      out.g = Matrix::Zero(y.values.size(), cfg.basis().size());
      return out;
    }
    out.g = nystrom_factor(sy.values, cfg.sigma_y, cfg.basis(), cfg.score_mode, &out.degenerate);
    return out;
  }
  out.class_counts.assign(static_cast<std::size_t>(y.num_classes), 0);
  for (int lab : y.labels) ++out.class_counts[static_cast<std::size_t>(lab)];
  const Matrix centered = center_columns(class_indicator_matrix(y.labels, y.num_classes));
  if (centered.norm() == 0.0) {
    out.degenerate = true;
    out.g = Matrix::Zero(static_cast<Eigen::Index>(y.labels.size()), y.num_classes);
    return out;
  }
  out.g = cfg.score_mode == ScoreMode::HSIC ? centered : centered / quartic_trace_norm(centered);
  return out;
}

Matrix full_normalized_kernel(const StandardizedVector& u, const KernelConfig& cfg) {
  cfg.validate();
  check_finite(u.values, "full_normalized_kernel");
  if (u.degenerate) {
    throw ValidationError("full_normalized_kernel: degenerate (constant) feature");
  }
  return normalize_full_kernel(full_gaussian_kernel(u.values, cfg.sigma_u));
}

Matrix full_normalized_kernel(const Target& y, const KernelConfig& cfg) {
  cfg.validate();
  y.validate();
  if (y.kind == TaskKind::Regression) {
    const StandardizedVector sy = standardize(y.values);
    if (sy.degenerate) {
      throw ValidationError("full_normalized_kernel: degenerate (constant) target");
    }
    return normalize_full_kernel(full_gaussian_kernel(sy.values, cfg.sigma_y));
  }
  const Eigen::Index n = static_cast<Eigen::Index>(y.labels.size());
  if (n > kFullKernelMaxN) {
    throw ValidationError("full_normalized_kernel: n exceeds the oracle guard");
  }
  std::vector<int> counts(static_cast<std::size_t>(y.num_classes), 0);
  for (int lab : y.labels) ++counts[static_cast<std::size_t>(lab)];
  Matrix l = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (y.labels[static_cast<std::size_t>(i)] == y.labels[static_cast<std::size_t>(j)]) {
        l(i, j) = 1.0 / counts[static_cast<std::size_t>(y.labels[static_cast<std::size_t>(i)])];
      }
    }
  }
  return normalize_full_kernel(std::move(l));
}

}  // namespace land
