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

// Indices of the m largest relevance scores, descending; ties break toward
// the lower index. This is the screening baseline: redundant features with
// high relevance are kept, unlike in the path solver.
std::vector<int> screen_mr_nhsic(const Vector& f, int m);

struct PearsonResult {
  double value = 0.0;
  bool degenerate = false;  // constant input; value pinned to 0
};

PearsonResult pearson(const Vector& u, const Vector& v);

// I = 1 - (2/(m(m-1))) * sum_{k>l} |rho_kl| over the rows of x_selected.
// Ordered-pair (double-counting) convention: identical pair -> 0,
// orthogonal features -> 1.
double independence_rate(const Matrix& x_selected);

// Mann-Whitney AUC of scores against binary labels (0/1); ties count 0.5.
double auc(const Vector& scores, const std::vector<int>& labels);

struct MetricReport {
  double independence_rate = 0.0;
  bool independence_defined = false;  // needs m >= 2
  double dimensionality_reduction_rate = 0.0;
  double auc = 0.0;
  bool auc_defined = false;  // needs a binary target
  int m = 0;
  int d = 0;
};

}  // namespace land

