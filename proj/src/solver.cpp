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

#include "land/solver.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace land {

NystromScoreSource::NystromScoreSource(std::vector<FeatureMap> maps, OutputMap g,
                                       EngineConfig engine)
    : maps_(std::move(maps)), g_(std::move(g)), engine_(engine) {
  engine_.validate();
  relevance_ = relevance_scores(maps_, g_, engine_);
}

int NystromScoreSource::count() const { return static_cast<int>(maps_.size()); }

const Vector& NystromScoreSource::relevance() const { return relevance_; }

Vector NystromScoreSource::redundancy_column(int j) const {
  return land::redundancy_column(maps_, j, engine_);
}

ExactKernelSource::ExactKernelSource(const Matrix& x, const Target& y,
                                     const KernelConfig& cfg) {
  cfg.validate();
  y.validate();
  const Eigen::Index d = x.rows();
  const Eigen::Index n = x.cols();
  if (n != y.n()) throw ValidationError("ExactKernelSource: sample counts differ");
  kernels_.reserve(static_cast<std::size_t>(d));
  for (Eigen::Index k = 0; k < d; ++k) {
    const StandardizedVector u = standardize(x.row(k).transpose());
    if (u.degenerate) {
      kernels_.emplace_back(Matrix::Zero(n, n));
    } else {
      kernels_.emplace_back(full_normalized_kernel(u, cfg));
    }
  }
  const Matrix l = full_normalized_kernel(y, cfg);
  relevance_.resize(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    relevance_[k] = nhsic_exact(kernels_[static_cast<std::size_t>(k)], l);
  }
}

int ExactKernelSource::count() const { return static_cast<int>(kernels_.size()); }

const Vector& ExactKernelSource::relevance() const { return relevance_; }

Vector ExactKernelSource::redundancy_column(int j) const {
  const int d = count();
  if (j < 0 || j >= d) throw ValidationError("redundancy_column: index out of range");
  Vector col(d);
  for (int k = 0; k < d; ++k) {
    col[k] = nhsic_exact(kernels_[static_cast<std::size_t>(k)],
                         kernels_[static_cast<std::size_t>(j)]);
  }
  return col;
}

MatrixScoreSource::MatrixScoreSource(Vector f, Matrix q)
    : f_(std::move(f)), q_(std::move(q)) {
  if (q_.rows() != q_.cols() || q_.rows() != f_.size()) {
    throw ValidationError("MatrixScoreSource: shape mismatch");
  }
}

int MatrixScoreSource::count() const { return static_cast<int>(f_.size()); }

const Vector& MatrixScoreSource::relevance() const { return f_; }

Vector MatrixScoreSource::redundancy_column(int j) const {
  if (j < 0 || j >= count()) throw ValidationError("redundancy_column: index out of range");
  return q_.col(j);
}

double implied_lambda(double score_level) { return 2.0 * score_level; }

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Equiangular direction: Q_A d = 1. Falls back to a ridge-jittered solve when
// the active Gram system is singular (near-duplicate active features).
Vector equiangular_direction(const std::vector<Vector>& rcols, const std::vector<int>& active) {
  const int a = static_cast<int>(active.size());
  Matrix qa(a, a);
  for (int k = 0; k < a; ++k) {
    for (int i = 0; i < a; ++i) {
      qa(i, k) = rcols[static_cast<std::size_t>(k)][active[static_cast<std::size_t>(i)]];
    }
  }
  const Vector ones = Vector::Ones(a);
  Vector dir = qa.ldlt().solve(ones);
  if (!dir.allFinite() || (qa * dir - ones).norm() > 1e-6) {
    Matrix jittered = qa;
    jittered.diagonal().array() += kGramRidge;
    dir = jittered.ldlt().solve(ones);
    if (!dir.allFinite()) {
      throw ValidationError("lars_select: active Gram system is unsolvable");
    }
  }
  return dir;
}

}  // namespace

SelectionPath lars_select(const ScoreSource& source, int num_features) {
  const int d = source.count();
  if (d < 1) throw ValidationError("lars_select: no features");
  if (num_features < 1) throw ValidationError("lars_select: num_features must be positive");
  if (num_features > d) throw ValidationError("lars_select: num_features exceeds feature count");

  SelectionPath path;
  path.relevance = source.relevance();
  const Vector& f = path.relevance;
  if (f.size() != d) throw ValidationError("lars_select: relevance size mismatch");
  check_finite(f, "lars_select relevance");

  std::vector<int> active;
  std::vector<Vector> rcols;        // redundancy columns, aligned with active
  std::vector<double> alpha;        // coefficients, aligned with active
  std::vector<char> excluded(static_cast<std::size_t>(d), 0);
  double level = 0.0;

  const auto snapshot_alpha = [&] {
    return Eigen::Map<const Vector>(alpha.data(), static_cast<Eigen::Index>(alpha.size()))
        .eval();
  };
  const auto enter = [&](int j) {
    active.push_back(j);
    rcols.push_back(source.redundancy_column(j));
    alpha.push_back(0.0);
    path.steps.push_back({j, active, snapshot_alpha(), level});
  };
  const auto finish = [&](const char* reason) {
    path.final_active = active;
    path.final_alpha = snapshot_alpha();
    path.final_level = level;
    path.stop_reason = reason;
  };

  // First entrant: the highest relevance score, lowest index on ties.
  int first = -1;
  double best = kLevelFloor;
  for (int i = 0; i < d; ++i) {
    if (f[i] > best) {
      best = f[i];
      first = i;
    }
  }
  if (first < 0) {
    finish("exhausted");
    return path;
  }
  level = f[first];
  enter(first);

  bool final_mode = static_cast<int>(path.steps.size()) >= num_features;
  const int max_events = 4 * num_features + 64;
  int events = 1;

  while (true) {
    if (++events > max_events) {
      finish("max_events");
      return path;
    }
    if (level <= kLevelFloor) {
      finish(final_mode ? "max_features" : "level_zero");
      return path;
    }
    const int a = static_cast<int>(active.size());
    const Vector dir = equiangular_direction(rcols, active);

    double mu_drop = kInf;
    int drop_idx = -1;
    for (int i = 0; i < a; ++i) {
      if (dir[i] < 0.0) {
        const double cand = -alpha[static_cast<std::size_t>(i)] / dir[i];
        if (cand < mu_drop) {
          mu_drop = cand;
          drop_idx = i;
        }
      }
    }

    // Tie search over eligible inactive features. Correlation of feature l
    // decays at rate r_l = (R d)_l while the active level decays at rate 1;
    // r_l at or above 1 means it can never tie.
    double mu_tie = kInf;
    int tie_feature = -1;
    for (int l = 0; l < d; ++l) {
      if (excluded[static_cast<std::size_t>(l)]) continue;
      bool is_active = false;
      for (int j : active) {
        if (j == l) {
          is_active = true;
          break;
        }
      }
      if (is_active) continue;
      double r = 0.0;
      double c = f[l];
      for (int k = 0; k < a; ++k) {
        r += dir[k] * rcols[static_cast<std::size_t>(k)][l];
        c -= alpha[static_cast<std::size_t>(k)] * rcols[static_cast<std::size_t>(k)][l];
      }
      if (r >= 1.0 - kTieSaturation) continue;
      const double cand = std::max(0.0, (level - c) / (1.0 - r));
      if (cand < mu_tie) {
        mu_tie = cand;
        tie_feature = l;
      }
    }

    const double mu_level = level;
    const auto advance = [&](double mu) {
      for (int i = 0; i < a; ++i) {
        double& v = alpha[static_cast<std::size_t>(i)];
        v += mu * dir[i];
        if (v < 0.0 && v > -1e-9) v = 0.0;  // roundoff at a simultaneous boundary
      }
      level -= mu;
    };

    if (mu_level <= mu_drop && mu_level <= mu_tie) {
      advance(mu_level);
      level = 0.0;
      finish(final_mode ? "max_features" : (tie_feature < 0 ? "exhausted" : "level_zero"));
      return path;
    }
    if (mu_drop <= mu_tie) {
      advance(mu_drop);
      const int gone = active[static_cast<std::size_t>(drop_idx)];
      excluded[static_cast<std::size_t>(gone)] = 1;
      path.dropped.push_back(gone);
      active.erase(active.begin() + drop_idx);
      rcols.erase(rcols.begin() + drop_idx);
      alpha.erase(alpha.begin() + drop_idx);
      if (final_mode || active.empty()) {
        finish(final_mode ? "max_features" : "exhausted");
        return path;
      }
      continue;
    }
    advance(mu_tie);
    if (final_mode) {
      finish("max_features");
      return path;
    }
    enter(tie_feature);
    if (static_cast<int>(path.steps.size()) >= num_features) final_mode = true;
  }
}

SelectionResult land_select(const Matrix& x, const Target& y, const KernelConfig& cfg,
                            const EngineConfig& engine, int num_features) {
  cfg.validate();
  engine.validate();
  y.validate();
  if (x.cols() != y.n()) throw ValidationError("land_select: sample counts differ");
  if (x.rows() < 1) throw ValidationError("land_select: no features");

  SelectionResult result;
  std::vector<FeatureMap> maps = build_feature_maps(x, cfg, engine);
  for (const auto& m : maps) {
    if (m.degenerate) result.degenerate_features.push_back(m.feature_index);
  }
  result.map_entries = map_entry_count(maps);
  OutputMap g = build_output_map(y, cfg);
  NystromScoreSource source(std::move(maps), std::move(g), engine);
  result.path = lars_select(source, num_features);
  return result;
}

Matrix redundancy_matrix(const ScoreSource& source) {
  const int d = source.count();
  Matrix q(d, d);
  for (int j = 0; j < d; ++j) q.col(j) = source.redundancy_column(j);
  return q;
}

CdResult hsic_lasso_naive(const Matrix& x, const Target& y, const KernelConfig& cfg,
                          double lambda) {
  if (x.rows() > kNaiveMaxFeatures) {
    throw ValidationError("hsic_lasso_naive: feature count exceeds the exact-kernel guard");
  }
  if (x.cols() > kNaiveMaxSamples) {
    throw ValidationError("hsic_lasso_naive: sample count exceeds the exact-kernel guard");
  }
  ExactKernelSource source(x, y, cfg);
  return solve_nonneg_lasso_cd(redundancy_matrix(source), source.relevance(), lambda);
}

CdResult solve_nonneg_lasso_cd(const Matrix& q, const Vector& f, double lambda) {
  const Eigen::Index d = f.size();
  if (q.rows() != d || q.cols() != d) throw ValidationError("solve_nonneg_lasso_cd: shape mismatch");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("solve_nonneg_lasso_cd: lambda must be finite and non-negative");
  }
  check_finite(q, "solve_nonneg_lasso_cd Q");
  check_finite(f, "solve_nonneg_lasso_cd f");

  CdResult result;
  result.alpha = Vector::Zero(d);
  Vector& alpha = result.alpha;
  const double half_lambda = 0.5 * lambda;
  for (int sweep = 1; sweep <= kCdMaxSweeps; ++sweep) {
    double max_change = 0.0;
    for (Eigen::Index k = 0; k < d; ++k) {
      const double qkk = q(k, k);
      double next = 0.0;
      if (qkk > 0.0) {
        const double rest = q.row(k).dot(alpha) - qkk * alpha[k];
        next = std::max(0.0, (f[k] - rest - half_lambda) / qkk);
      }
      max_change = std::max(max_change, std::abs(next - alpha[k]));
      alpha[k] = next;
    }
    if (max_change <= kCdTolerance) {
      result.sweeps = sweep;
      result.converged = true;
      return result;
    }
  }
  result.sweeps = kCdMaxSweeps;
  result.converged = false;
  return result;
}

double objective_value(const Vector& alpha, const Vector& f, const Matrix& q, double lambda) {
  const Eigen::Index d = f.size();
  if (q.rows() != d || q.cols() != d || alpha.size() != d) {
    throw ValidationError("objective_value: shape mismatch");
  }
  if (alpha.size() > 0 && alpha.minCoeff() < -1e-12) {
    throw ValidationError("objective_value: alpha must be non-negative");
  }
  return 1.0 - 2.0 * f.dot(alpha) + alpha.dot(q * alpha) + lambda * alpha.cwiseAbs().sum();
}

}  // namespace land
