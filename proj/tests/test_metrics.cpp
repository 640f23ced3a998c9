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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "land/common.hpp"
#include "land/metrics.hpp"
#include "test_util.hpp"

using namespace land;

TEST_CASE("screening keeps the m largest scores in descending order") {
  Vector f(3);
  f << 0.1, 0.9, 0.5;
  CHECK(screen_mr_nhsic(f, 2) == std::vector<int>{1, 2});
  CHECK(screen_mr_nhsic(f, 3) == std::vector<int>{1, 2, 0});
  CHECK(screen_mr_nhsic(f, 1) == std::vector<int>{1});
}

TEST_CASE("screening ties break toward the lower index") {
  Vector f(4);
  f << 0.5, 0.9, 0.5, 0.9;
  CHECK(screen_mr_nhsic(f, 4) == std::vector<int>{1, 3, 0, 2});
}

TEST_CASE("screening order only depends on the score ranking") {
  std::mt19937_64 rng(11);
  const Vector f = testutil::random_vector(20, rng).cwiseAbs();
  const Vector warped = (2.0 * f).array() + 1.0;  // strictly increasing map
  CHECK(screen_mr_nhsic(f, 7) == screen_mr_nhsic(warped, 7));
}

TEST_CASE("screening validates m") {
  const Vector f = Vector::Ones(3);
  CHECK_THROWS_AS(screen_mr_nhsic(f, 0), ValidationError);
  CHECK_THROWS_AS(screen_mr_nhsic(f, 4), ValidationError);
}

TEST_CASE("pearson endpoints") {
  std::mt19937_64 rng(12);
  const Vector u = testutil::random_vector(50, rng);
  CHECK(pearson(u, u).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pearson(u, -u).value == doctest::Approx(-1.0).epsilon(1e-12));
  const Vector affine = (3.0 * u).array() - 2.0;
  CHECK(pearson(u, affine).value == doctest::Approx(1.0).epsilon(1e-12));

  const PearsonResult flat = pearson(Vector::Ones(50), u);
  CHECK(flat.degenerate);
  CHECK(flat.value == 0.0);
}

TEST_CASE("independence rate endpoints") {
  Matrix dup(2, 30);
  std::mt19937_64 rng(13);
  dup.row(0) = testutil::random_vector(30, rng).transpose();
  dup.row(1) = dup.row(0);
  CHECK(independence_rate(dup) == doctest::Approx(0.0).epsilon(1e-12));

  Matrix orth(2, 4);
  orth << 1, 1, -1, -1,  //
      1, -1, 1, -1;
  CHECK(independence_rate(orth) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("independence rate averages absolute correlations over pairs") {
  // Zero-mean orthogonal basis over 4 points; row2 correlates 0.5 with row0
  // and 0 with row1, so |rho| over the three pairs is (0, 0.5, 0) and
  // I = 1 - 2 * 0.5 / (3 * 2) = 5/6.
  Vector r0(4), r1(4), r3(4);
  r0 << 1, 1, -1, -1;
  r1 << 1, -1, 1, -1;
  r3 << 1, -1, -1, 1;
  Matrix x(3, 4);
  x.row(0) = r0.transpose();
  x.row(1) = r1.transpose();
  x.row(2) = (0.5 * r0 + std::sqrt(0.75) * r3).transpose();
  CHECK(pearson(r0, x.row(2).transpose()).value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(pearson(r1, x.row(2).transpose()).value) < 1e-9);
  CHECK(independence_rate(x) == doctest::Approx(5.0 / 6.0).epsilon(1e-9));
}

TEST_CASE("independence rate needs at least two features") {
  CHECK_THROWS_AS(independence_rate(Matrix::Ones(1, 5)), ValidationError);
}

TEST_CASE("independence rate of sampled noise sits strictly inside (0,1)") {
  std::mt19937_64 rng(14);
  Matrix x = testutil::random_matrix(4, 50, rng);
  const double rate = independence_rate(x);
  CHECK(rate < 1.0);
  CHECK(rate > 0.0);
}

TEST_CASE("auc endpoints") {
  Vector scores(6);
  scores << 0.1, 0.2, 0.3, 0.7, 0.8, 0.9;
  const std::vector<int> labels = {0, 0, 0, 1, 1, 1};
  CHECK(auc(scores, labels) == doctest::Approx(1.0));

  const std::vector<int> flipped = {1, 1, 1, 0, 0, 0};
  CHECK(auc(scores, flipped) == doctest::Approx(0.0));

  CHECK(auc(Vector::Ones(6), labels) == doctest::Approx(0.5));
}

TEST_CASE("auc uses midranks for ties") {
  Vector scores(4);
  scores << 0.5, 0.5, 0.2, 0.9;
  const std::vector<int> labels = {1, 0, 0, 1};
  // positives: ranks {2.5, 4}; U = 2.5 + 4 - 2*3/2 = 3.5; AUC = 3.5/4
  CHECK(auc(scores, labels) == doctest::Approx(3.5 / 4.0));
}

TEST_CASE("auc is invariant under strictly increasing transforms") {
  std::mt19937_64 rng(15);
  const Vector scores = testutil::random_vector(40, rng);
  std::vector<int> labels(40);
  for (int i = 0; i < 40; ++i) labels[static_cast<std::size_t>(i)] = i % 2;
  const Vector warped = scores.array().exp();
  CHECK(auc(scores, labels) == doctest::Approx(auc(warped, labels)).epsilon(1e-12));
}

TEST_CASE("auc requires both classes and clean labels") {
  Vector scores(3);
  scores << 0.1, 0.2, 0.3;
  CHECK_THROWS_AS(auc(scores, std::vector<int>{1, 1, 1}), ValidationError);
  CHECK_THROWS_AS(auc(scores, std::vector<int>{0, 0, 0}), ValidationError);
  CHECK_THROWS_AS(auc(scores, std::vector<int>{0, 1, 2}), ValidationError);
  CHECK_THROWS_AS(auc(scores, std::vector<int>{0, 1}), ValidationError);
}
