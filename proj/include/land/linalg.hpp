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

#include <Eigen/Dense>

#include "land/common.hpp"

namespace land {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Throws ValidationError if any entry is NaN or infinite.
void check_finite(const Matrix& m, const char* what);
void check_finite(const Vector& v, const char* what);

/// Max |M - M^T| <= rel_tol * max|M|.
bool is_symmetric(const Matrix& m, double rel_tol = 1e-10);

/// Inverse square root of a symmetric positive (semi)definite matrix,
/// computed by eigendecomposition. Eigenvalues are clamped below at eps
/// before taking 1/sqrt, so nearly singular inputs stay bounded. The
/// result is exactly symmetric.
Matrix spd_inverse_sqrt(const Matrix& m, double eps);

/// Same, with the clamp taken relative to the largest eigenvalue:
/// eps = rel * lambda_max. Keeps the conditioning cutoff scale-free.
Matrix spd_inverse_sqrt_rel(const Matrix& m, double rel = 1e-10);

/// Subtracts each column's mean, i.e. applies I - (1/n) 11^T from the left.
/// Never materializes the n x n centering matrix.
Matrix center_columns(Matrix a);

/// (tr((A^T A)^2))^{1/4} = ||A^T A||_F^{1/2}. Throws ValidationError on an
/// all-zero input; callers treat that as a degenerate (constant) feature.
double quartic_trace_norm(const Matrix& a);

}  // namespace land
