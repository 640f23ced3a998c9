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

// Python bindings. Arrays follow the usual Python convention of observations
// as rows (n x d); the core works feature-major and the wrappers transpose.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "land/dataio.hpp"
#include "land/metrics.hpp"
#include "land/solver.hpp"

namespace py = pybind11;
using namespace land;

namespace {

bool integer_like(double v) { return v == std::floor(v) && std::abs(v) <= 9.0e15; }

Target target_from_values(const Vector& y, const std::string& task) {
  if (task != "auto" && task != "regression" && task != "classification") {
    throw ValidationError("task must be auto, regression, or classification");
  }
  bool all_integers = true;
  std::set<long long> distinct;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (!integer_like(y[i])) {
      all_integers = false;
      break;
    }
    distinct.insert(static_cast<long long>(y[i]));
  }
  const bool classify =
      task == "classification" ||
      (task == "auto" && all_integers &&
       static_cast<int>(distinct.size()) <= kMaxClassesForAutoDetect);
  if (!classify) return make_regression_target(y);
  if (!all_integers) {
    throw ValidationError("classification target must be integer-valued");
  }
  std::vector<long long> labels(static_cast<std::size_t>(y.size()));
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    labels[static_cast<std::size_t>(i)] = static_cast<long long>(y[i]);
  }
  return make_classification_target(labels);
}

KernelConfig kernel_config(int b, double sigma_u, double sigma_y, const std::string& score) {
  if (score != "nhsic" && score != "hsic") {
    throw ValidationError("score must be nhsic or hsic");
  }
  KernelConfig cfg;
  cfg.basis_count = b;
  cfg.sigma_u = sigma_u;
  cfg.sigma_y = sigma_y;
  cfg.score_mode = score == "hsic" ? ScoreMode::HSIC : ScoreMode::NHSIC;
  cfg.validate();
  return cfg;
}

py::dict path_to_dict(const SelectionPath& path) {
  py::dict out;
  out["selected"] = path.selected();
  out["alpha"] = std::vector<double>(path.final_alpha.data(),
                                     path.final_alpha.data() + path.final_alpha.size());
  py::list steps;
  for (const PathStep& step : path.steps) {
    py::dict s;
    s["feature"] = step.entered_feature;
    s["score_level"] = step.score_level;
    s["lambda"] = implied_lambda(step.score_level);
    steps.append(std::move(s));
  }
  out["steps"] = std::move(steps);
  out["relevance"] = path.relevance;
  out["dropped"] = path.dropped;
  out["stop_reason"] = path.stop_reason;
  return out;
}

py::dict py_select(const Matrix& x, const Vector& y, int m, const std::string& task, int b,
                   double sigma_u, double sigma_y, const std::string& score, int workers) {
  const Matrix xt = x.transpose();
  const Target target = target_from_values(y, task);
  const KernelConfig cfg = kernel_config(b, sigma_u, sigma_y, score);
  const EngineConfig engine{workers, 0};
  const SelectionResult res = land_select(xt, target, cfg, engine, m);
  py::dict out = path_to_dict(res.path);
  out["degenerate_features"] = res.degenerate_features;
  return out;
}

py::dict py_screen(const Matrix& x, const Vector& y, int m, const std::string& task, int b,
                   double sigma_u, double sigma_y, const std::string& score, int workers) {
  const Matrix xt = x.transpose();
  const Target target = target_from_values(y, task);
  const KernelConfig cfg = kernel_config(b, sigma_u, sigma_y, score);
  const EngineConfig engine{workers, 0};
  const std::vector<FeatureMap> maps = build_feature_maps(xt, cfg, engine);
  const OutputMap g = build_output_map(target, cfg);
  const Vector f = relevance_scores(maps, g, engine);
  py::dict out;
  out["selected"] = screen_mr_nhsic(f, m);
  out["relevance"] = f;
  return out;
}

Matrix py_nhsic_matrix(const Matrix& x, std::vector<int> features, int b, double sigma_u,
                       int workers, bool oracle) {
  const Matrix xt = x.transpose();
  if (features.empty()) {
    features.resize(static_cast<std::size_t>(xt.rows()));
    for (int i = 0; i < xt.rows(); ++i) features[static_cast<std::size_t>(i)] = i;
  }
  const Matrix sub = select_rows(xt, features);
  const int m = static_cast<int>(features.size());
  Matrix scores(m, m);
  if (oracle) {
    KernelConfig cfg;
    cfg.sigma_u = sigma_u;
    std::vector<Matrix> kernels;
    kernels.reserve(features.size());
    for (int i = 0; i < m; ++i) {
      kernels.push_back(full_normalized_kernel(standardize(sub.row(i).transpose()), cfg));
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        scores(i, j) = nhsic_exact(kernels[static_cast<std::size_t>(i)],
                                   kernels[static_cast<std::size_t>(j)]);
      }
    }
    return scores;
  }
  KernelConfig cfg;
  cfg.sigma_u = sigma_u;
  cfg.basis_count = b;
  cfg.validate();
  const EngineConfig engine{workers, 0};
  const std::vector<FeatureMap> maps = build_feature_maps(sub, cfg, engine);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      scores(i, j) = nhsic_approx(maps[static_cast<std::size_t>(i)].f,
                                  maps[static_cast<std::size_t>(j)].f);
    }
  }
  return scores;
}

py::tuple py_synth(int n, int d_irrelevant, int d_redundant, double response_noise,
                   double copy_noise, std::uint64_t seed) {
  SynthConfig cfg;
  cfg.n = n;
  cfg.d_irrelevant = d_irrelevant;
  cfg.d_redundant = d_redundant;
  cfg.response_noise = response_noise;
  cfg.copy_noise = copy_noise;
  cfg.seed = seed;
  const Dataset ds = synth_generate(cfg);
  return py::make_tuple(Matrix(ds.x.transpose()), ds.y.values);
}

double py_independence_rate(const Matrix& x_selected) {
  return independence_rate(x_selected.transpose());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "HSIC-Lasso feature selection with Nystrom-approximated kernels";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_IOError);

  m.def("select", &py_select, py::arg("x"), py::arg("y"), py::arg("m"),
        py::arg("task") = "auto", py::arg("b") = 20, py::arg("sigma_u") = 1.0,
        py::arg("sigma_y") = 1.0, py::arg("score") = "nhsic", py::arg("workers") = 1,
        "Run the selection path on x (n x d) against y; returns a result dict.");
  m.def("screen", &py_screen, py::arg("x"), py::arg("y"), py::arg("m"),
        py::arg("task") = "auto", py::arg("b") = 20, py::arg("sigma_u") = 1.0,
        py::arg("sigma_y") = 1.0, py::arg("score") = "nhsic", py::arg("workers") = 1,
        "Rank features by marginal relevance; returns {selected, relevance}.");
  m.def("nhsic_matrix", &py_nhsic_matrix, py::arg("x"),
        py::arg("features") = std::vector<int>{}, py::arg("b") = 20, py::arg("sigma_u") = 1.0,
        py::arg("workers") = 1, py::arg("oracle") = false,
        "Pairwise NHSIC scores for the listed features (all when omitted).");
  m.def("synth", &py_synth, py::arg("n") = 300, py::arg("d_irrelevant") = 997,
        py::arg("d_redundant") = 1000, py::arg("response_noise") = 0.1,
        py::arg("copy_noise") = 0.01, py::arg("seed") = 0,
        "Synthetic benchmark data; returns (x, y) with x of shape (n, d).");
  m.def("independence_rate", &py_independence_rate, py::arg("x_selected"),
        "1 minus the mean absolute pairwise Pearson correlation of the columns.");
  m.def("auc", &auc, py::arg("scores"), py::arg("labels"),
        "Mann-Whitney AUC of scores against binary 0/1 labels.");
}
