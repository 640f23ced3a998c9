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

#include <string>
#include <vector>

#include <json.hpp>

#include "land/dataio.hpp"
#include "land/metrics.hpp"
#include "land/solver.hpp"

namespace land {

// Insertion-ordered JSON keeps report key order stable, so identical runs
// produce byte-identical files.
using OrderedJson = nlohmann::ordered_json;

// independence_rate (features >= 2), reduction rate, and for binary targets
// the mean direction-invariant per-feature AUC.
MetricReport compute_metric_report(const Dataset& ds, const std::vector<int>& features);

OrderedJson selection_report(const SelectionPath& path, const Dataset& ds);

OrderedJson screen_report(const std::vector<int>& selected, const Vector& f, const Dataset& ds);

OrderedJson eval_report(const MetricReport& metrics, const std::vector<int>& features,
                        const Dataset& ds);

// One row per breakpoint: step, feature, score_level, lambda, active_set,
// alpha (the latter two comma-joined).
std::string path_tsv(const SelectionPath& path);

std::string matrix_tsv(const Matrix& m);

// Write-temp-then-rename; partial files never land at the target path.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace land

