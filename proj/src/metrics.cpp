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

#include "land/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "land/common.hpp"

namespace land {

std::vector<int> screen_mr_nhsic(const Vector& f, int m) {
  const int d = static_cast<int>(f.size());
  if (m < 1 || m > d) throw ValidationError("screen_mr_nhsic: need 1 <= m <= d");
  check_finite(f, "screen_mr_nhsic");
  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (f[a] != f[b]) return f[a] > f[b];
    return a < b;
  });
  order.resize(static_cast<std::size_t>(m));
  return order;
}

PearsonResult pearson(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw ValidationError("pearson: length mismatch");
  if (u.size() < 2) throw ValidationError("pearson: need at least 2 observations");
  check_finite(u, "pearson");
  check_finite(v, "pearson");
  const Vector uc = u.array() - u.mean();
  const Vector vc = v.array() - v.mean();
  const double nu = uc.norm();
  const double nv = vc.norm();
  if (nu == 0.0 || nv == 0.0) return {0.0, true};
  const double rho = uc.dot(vc) / (nu * nv);
  return {std::clamp(rho, -1.0, 1.0), false};
}

double independence_rate(const Matrix& x_selected) {
  const Eigen::Index m = x_selected.rows();
  if (m < 2) throw ValidationError("independence_rate: need at least 2 features");
  double sum_abs = 0.0;
  for (Eigen::Index k = 1; k < m; ++k) {
    for (Eigen::Index l = 0; l < k; ++l) {
      sum_abs += std::abs(
          pearson(x_selected.row(k).transpose(), x_selected.row(l).transpose()).value);
    }
  }
  const double rate =
      1.0 - 2.0 * sum_abs / (static_cast<double>(m) * static_cast<double>(m - 1));
  return std::clamp(rate, 0.0, 1.0);
}

double auc(const Vector& scores, const std::vector<int>& labels) {
  const std::size_t n = labels.size();
  if (static_cast<std::size_t>(scores.size()) != n) {
    throw ValidationError("auc: length mismatch");
  }
  check_finite(scores, "auc");
  std::size_t pos = 0;
  for (int lab : labels) {
    if (lab != 0 && lab != 1) throw ValidationError("auc: labels must be 0 or 1");
    pos += static_cast<std::size_t>(lab);
  }
  const std::size_t neg = n - pos;
  if (pos == 0 || neg == 0) throw ValidationError("auc: both classes must be present");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[static_cast<Eigen::Index>(a)] < scores[static_cast<Eigen::Index>(b)];
  });

  // Average ranks over tied runs, then the Mann-Whitney statistic.
  double rank_sum_pos = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && scores[static_cast<Eigen::Index>(order[j + 1])] ==
                            scores[static_cast<Eigen::Index>(order[i])]) {
      ++j;
    }
    const double avg_rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (std::size_t k = i; k <= j; ++k) {
      if (labels[order[k]] == 1) rank_sum_pos += avg_rank;
    }
    i = j + 1;
  }
  const double u_stat =
      rank_sum_pos - static_cast<double>(pos) * (static_cast<double>(pos) + 1.0) / 2.0;
  return u_stat / (static_cast<double>(pos) * static_cast<double>(neg));
}

}  // namespace land
