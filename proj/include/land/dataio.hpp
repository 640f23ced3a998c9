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

#include <cstdint>
#include <string>
#include <vector>

#include "land/kernels.hpp"
#include "land/linalg.hpp"

namespace land {

// Auto task detection treats a target with at most this many distinct integer
// values as classification.
inline constexpr int kMaxClassesForAutoDetect = 32;

struct Dataset {
  Matrix x;  // feature-major: d rows, n columns
  Target y;
  std::vector<std::string> feature_names;  // size d
  std::string target_name = "y";
  std::vector<std::string> class_names;  // size C for classification, else empty

  int d() const { return static_cast<int>(x.rows()); }
  int n() const { return static_cast<int>(x.cols()); }
  void validate() const;
};

enum class FileFormat { Auto, Csv, Libsvm };
enum class TaskOverride { Auto, Regression, Classification };

struct LoadOptions {
  FileFormat format = FileFormat::Auto;
  bool header = false;  // CSV only: first row holds column names
  TaskOverride task = TaskOverride::Auto;
};

// CSV: observations as rows, target last column. LIBSVM: label then 1-based
// index:value pairs (0-based in memory, absent entries are 0).
Dataset load_dataset(const std::string& path, const LoadOptions& opts = {});

// 17-significant-digit CSV, written to a temp file then renamed into place.
void save_csv(const Dataset& ds, const std::string& path, bool header = false);

struct SynthConfig {
  int n = 300;
  int d_relevant = 3;  // the response formula needs exactly 3
  int d_irrelevant = 997;
  int d_redundant = 1000;  // near-copies of the first d_redundant base features
  double response_noise = 0.1;
  double copy_noise = 0.01;
  std::uint64_t seed = 0;
};

// Standard-normal base features, y = x1*exp(x2) + x3 + response_noise * e,
// copies x_{base+i} = x_i + copy_noise * e. Fully determined by the seed.
Dataset synth_generate(const SynthConfig& cfg);

struct SplitResult {
  Dataset train;
  Dataset test;
  std::vector<int> train_indices;  // ascending positions in the source dataset
  std::vector<int> test_indices;
};

// Seeded shuffle then split; classification keeps at least one observation of
// every class on the train side.
SplitResult split_dataset(const Dataset& ds, double train_fraction, std::uint64_t seed);

// Rows of ds.x restricted to the given feature indices.
Matrix select_rows(const Matrix& x, const std::vector<int>& rows);

}  // namespace land

