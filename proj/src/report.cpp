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

#include "land/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace land {

namespace {

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <typename Seq, typename Fn>
std::string join(const Seq& seq, char sep, Fn format) {
  std::string out;
  bool first = true;
  for (const auto& item : seq) {
    if (!first) out.push_back(sep);
    first = false;
    out += format(item);
  }
  return out;
}

std::vector<std::string> names_of(const Dataset& ds, const std::vector<int>& features) {
  std::vector<std::string> names;
  names.reserve(features.size());
  for (int j : features) {
    if (j < 0 || j >= ds.d()) throw ValidationError("report: feature index out of range");
    names.push_back(ds.feature_names[static_cast<std::size_t>(j)]);
  }
  return names;
}

OrderedJson metrics_json(const MetricReport& m, bool with_auc) {
  OrderedJson out;
  out["independence_rate"] =
      m.independence_defined ? OrderedJson(m.independence_rate) : OrderedJson(nullptr);
  out["reduction_rate"] = m.dimensionality_reduction_rate;
  if (with_auc) {
    out["auc"] = m.auc_defined ? OrderedJson(m.auc) : OrderedJson(nullptr);
  }
  return out;
}

}  // namespace

MetricReport compute_metric_report(const Dataset& ds, const std::vector<int>& features) {
  ds.validate();
  MetricReport report;
  report.m = static_cast<int>(features.size());
  report.d = ds.d();
  report.dimensionality_reduction_rate =
      1.0 - static_cast<double>(report.m) / static_cast<double>(report.d);
  if (features.size() >= 2) {
    report.independence_rate = independence_rate(select_rows(ds.x, features));
    report.independence_defined = true;
  }
  if (ds.y.kind == TaskKind::Classification && ds.y.num_classes == 2 && !features.empty()) {
    // Feature values act as ranking scores; a feature separating the classes
    // in either direction counts the same.
    double total = 0.0;
    for (int j : features) {
      const double a = auc(select_rows(ds.x, {j}).row(0).transpose(), ds.y.labels);
      total += std::max(a, 1.0 - a);
    }
    report.auc = total / static_cast<double>(features.size());
    report.auc_defined = true;
  }
  return report;
}

OrderedJson selection_report(const SelectionPath& path, const Dataset& ds) {
  const std::vector<int>& selected = path.selected();
  const MetricReport metrics = compute_metric_report(ds, selected);

  OrderedJson out;
  out["selected"] = selected;
  out["names"] = names_of(ds, selected);
  OrderedJson steps = OrderedJson::array();
  for (const PathStep& step : path.steps) {
    OrderedJson s;
    s["feature"] = step.entered_feature;
    s["score_level"] = step.score_level;
    s["lambda"] = implied_lambda(step.score_level);
    steps.push_back(std::move(s));
  }
  out["steps"] = std::move(steps);
  std::vector<double> alpha(path.final_alpha.data(),
                            path.final_alpha.data() + path.final_alpha.size());
  out["alpha"] = alpha;
  std::vector<double> f;
  f.reserve(selected.size());
  for (int j : selected) f.push_back(path.relevance[j]);
  out["f"] = f;
  out["metrics"] = metrics_json(metrics, /*with_auc=*/false);
  return out;
}

OrderedJson screen_report(const std::vector<int>& selected, const Vector& f,
                          const Dataset& ds) {
  const MetricReport metrics = compute_metric_report(ds, selected);
  OrderedJson out;
  out["selected"] = selected;
  out["names"] = names_of(ds, selected);
  std::vector<double> scores;
  scores.reserve(selected.size());
  for (int j : selected) scores.push_back(f[j]);
  out["f"] = scores;
  out["metrics"] = metrics_json(metrics, /*with_auc=*/false);
  return out;
}

OrderedJson eval_report(const MetricReport& metrics, const std::vector<int>& features,
                        const Dataset& ds) {
  OrderedJson out;
  out["features"] = features;
  out["names"] = names_of(ds, features);
  out["m"] = metrics.m;
  out["d"] = metrics.d;
  out["metrics"] = metrics_json(metrics, /*with_auc=*/true);
  return out;
}

std::string path_tsv(const SelectionPath& path) {
  std::string out = "step\tfeature\tscore_level\tlambda\tactive_set\talpha\n";
  int step_no = 0;
  for (const PathStep& step : path.steps) {
    ++step_no;
    out += std::to_string(step_no);
    out.push_back('\t');
    out += std::to_string(step.entered_feature);
    out.push_back('\t');
    out += format_g17(step.score_level);
    out.push_back('\t');
    out += format_g17(implied_lambda(step.score_level));
    out.push_back('\t');
    out += join(step.active_set, ',', [](int j) { return std::to_string(j); });
    out.push_back('\t');
    std::vector<double> alpha(step.alpha.data(), step.alpha.data() + step.alpha.size());
    out += join(alpha, ',', format_g17);
    out.push_back('\n');
  }
  return out;
}

std::string matrix_tsv(const Matrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out.push_back('\t');
      out += format_g17(m(i, j));
    }
    out.push_back('\n');
  }
  return out;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
    if (!out) throw IoError("cannot open " + tmp + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("write failure on " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw IoError("cannot move " + tmp + " to " + path);
  }
}

}  // namespace land
