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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "land/linalg.hpp"
#include "test_util.hpp"

using namespace land;

TEST_CASE("spd_inverse_sqrt of the identity is the identity") {
  const Matrix s = spd_inverse_sqrt(Matrix::Identity(3, 3), 1e-10);
  CHECK((s - Matrix::Identity(3, 3)).norm() < 1e-12);
}

TEST_CASE("spd_inverse_sqrt of diag(4, 9) is diag(1/2, 1/3)") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 4.0;
  m(1, 1) = 9.0;
  const Matrix s = spd_inverse_sqrt(m, 1e-10);
  CHECK(s(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s(1, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(std::abs(s(0, 1)) < 1e-14);
  CHECK(std::abs(s(1, 0)) < 1e-14);
}

TEST_CASE("spd_inverse_sqrt reconstructs the identity on a random SPD matrix") {
  std::mt19937_64 rng(11);
  const Matrix b = testutil::random_matrix(5, 5, rng);
  const Matrix a = b * b.transpose() + Matrix::Identity(5, 5);
  const Matrix s = spd_inverse_sqrt(a, 1e-10);
  CHECK((s * a * s - Matrix::Identity(5, 5)).norm() < 1e-8);
  CHECK(is_symmetric(s));
}

TEST_CASE("spd_inverse_sqrt_rel handles well-conditioned matrices like the absolute form") {
  std::mt19937_64 rng(12);
  const Matrix b = testutil::random_matrix(6, 6, rng);
  const Matrix a = b * b.transpose() + 0.5 * Matrix::Identity(6, 6);
  const Matrix s = spd_inverse_sqrt_rel(a, 1e-10);
  CHECK((s * a * s - Matrix::Identity(6, 6)).norm() < 1e-8);
}

TEST_CASE("spd_inverse_sqrt rejects bad input") {
  Matrix asym(2, 2);
  asym << 1.0, 2.0, 0.0, 1.0;
  CHECK_THROWS_AS(spd_inverse_sqrt(asym, 1e-10), ValidationError);

  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(spd_inverse_sqrt(bad, 1e-10), ValidationError);

  CHECK_THROWS_AS(spd_inverse_sqrt(Matrix::Identity(2, 2), 0.0), ValidationError);
}

TEST_CASE("spd_inverse_sqrt clamp keeps singular directions bounded") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;  // second eigenvalue is exactly 0
  const Matrix s = spd_inverse_sqrt(m, 1e-4);
  CHECK(s(0, 0) == doctest::Approx(1.0));
  CHECK(s(1, 1) == doctest::Approx(1.0 / std::sqrt(1e-4)));
}

TEST_CASE("center_columns annihilates constant columns") {
  Matrix a = Matrix::Constant(4, 1, 5.0);
  CHECK(center_columns(a).norm() == 0.0);
}

TEST_CASE("center_columns leaves zero-mean columns alone") {
  Matrix a(2, 1);
  a << 1.0, -1.0;
  const Matrix c = center_columns(a);
  CHECK(c(0, 0) == doctest::Approx(1.0));
  CHECK(c(1, 0) == doctest::Approx(-1.0));
}

TEST_CASE("center_columns subtracts the mean") {
  Matrix a(3, 1);
  a << 1.0, 2.0, 3.0;
  const Matrix c = center_columns(a);
  CHECK(c(0, 0) == doctest::Approx(-1.0));
  CHECK(c(1, 0) == doctest::Approx(0.0));
  CHECK(c(2, 0) == doctest::Approx(1.0));
}

TEST_CASE("center_columns is idempotent and zeroes column sums") {
  std::mt19937_64 rng(13);
  const Matrix a = testutil::random_matrix(50, 7, rng);
  const Matrix once = center_columns(a);
  const Matrix twice = center_columns(once);
  CHECK((once - twice).norm() < 1e-12);
  CHECK(once.colwise().sum().cwiseAbs().maxCoeff() < 1e-12 * 50 * a.cwiseAbs().maxCoeff());
}

TEST_CASE("quartic_trace_norm on an orthonormal 2-column matrix is 2^(1/4)") {
  CHECK(quartic_trace_norm(Matrix::Identity(2, 2)) ==
        doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-12));
}

TEST_CASE("quartic_trace_norm of the column [3, 4] is 5") {
  Matrix a(2, 1);
  a << 3.0, 4.0;
  CHECK(quartic_trace_norm(a) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("quartic_trace_norm to the fourth power equals the gram Frobenius sum") {
  std::mt19937_64 rng(14);
  const Matrix a = testutil::random_matrix(6, 3, rng);
  const Matrix gram = a.transpose() * a;
  const double direct = gram.array().square().sum();
  const double q = quartic_trace_norm(a);
  CHECK(q * q * q * q == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("quartic_trace_norm is absolutely homogeneous in the matrix scale") {
  // Scaling A by c scales the Gram matrix by c^2 and the quartic trace by
  // c^4, so the fourth root scales by |c|. (Degree 1/2 in the Gram scale.)
  std::mt19937_64 rng(15);
  const Matrix a = testutil::random_matrix(8, 4, rng);
  const double q = quartic_trace_norm(a);
  CHECK(quartic_trace_norm(2.0 * a) == doctest::Approx(2.0 * q).epsilon(1e-12));
  CHECK(quartic_trace_norm(-3.0 * a) == doctest::Approx(3.0 * q).epsilon(1e-12));
  // the same scaling stated on the Gram matrix: K -> 2K means A -> sqrt(2) A
  CHECK(quartic_trace_norm(std::sqrt(2.0) * a) ==
        doctest::Approx(std::sqrt(2.0) * q).epsilon(1e-12));
}

TEST_CASE("quartic_trace_norm rejects the all-zero matrix") {
  CHECK_THROWS_AS(quartic_trace_norm(Matrix::Zero(4, 2)), ValidationError);
}

TEST_CASE("check_finite flags NaN and infinity") {
  Vector v = Vector::Zero(3);
  CHECK_NOTHROW(check_finite(v, "test"));
  v[1] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(check_finite(v, "test"), ValidationError);
}
