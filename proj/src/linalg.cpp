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

#include "land/linalg.hpp"

#include <cmath>
#include <string>

namespace land {

void check_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) {
    throw ValidationError(std::string(what) + ": non-finite entries");
  }
}

void check_finite(const Vector& v, const char* what) {
  if (!v.allFinite()) {
    throw ValidationError(std::string(what) + ": non-finite entries");
  }
}

bool is_symmetric(const Matrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = m.cwiseAbs().maxCoeff();
  const double skew = (m - m.transpose()).cwiseAbs().maxCoeff();
  return skew <= rel_tol * std::max(scale, 1.0);
}

namespace {

// relative=true interprets eps as a fraction of the largest eigenvalue.
Matrix inverse_sqrt_impl(const Matrix& m, double eps, bool relative, const char* what) {
  check_finite(m, what);
  if (m.rows() != m.cols() || !is_symmetric(m)) {
    throw ValidationError(std::string(what) + ": matrix is not symmetric");
  }
  if (!(eps > 0.0)) {
    throw ValidationError(std::string(what) + ": eps must be positive");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
  if (eig.info() != Eigen::Success) {
    throw ValidationError(std::string(what) + ": eigendecomposition failed");
  }
  double clamp = eps;
  if (relative) {
    const double lambda_max = eig.eigenvalues().maxCoeff();
    if (!(lambda_max > 0.0)) {
      throw ValidationError(std::string(what) + ": matrix has no positive eigenvalue");
    }
    clamp = eps * lambda_max;
  }
  Vector inv_sqrt = eig.eigenvalues();
  for (Eigen::Index i = 0; i < inv_sqrt.size(); ++i) {
    inv_sqrt[i] = 1.0 / std::sqrt(std::max(inv_sqrt[i], clamp));
  }
  Matrix r = eig.eigenvectors() * inv_sqrt.asDiagonal() * eig.eigenvectors().transpose();
  // enforce exact symmetry of the reconstruction
  return ((r + r.transpose()) * 0.5).eval();
}

}  // namespace

Matrix spd_inverse_sqrt(const Matrix& m, double eps) {
  return inverse_sqrt_impl(m, eps, false, "spd_inverse_sqrt");
}

Matrix spd_inverse_sqrt_rel(const Matrix& m, double rel) {
  return inverse_sqrt_impl(m, rel, true, "spd_inverse_sqrt_rel");
}

Matrix center_columns(Matrix a) {
  check_finite(a, "center_columns");
  a.rowwise() -= a.colwise().mean();
  return a;
}

double quartic_trace_norm(const Matrix& a) {
  check_finite(a, "quartic_trace_norm");
  const Matrix gram = a.transpose() * a;
  const double frob = gram.norm();
  if (frob == 0.0) {
    throw ValidationError("quartic_trace_norm: all-zero matrix (degenerate feature)");
  }
  return std::sqrt(frob);
}

}  // namespace land
