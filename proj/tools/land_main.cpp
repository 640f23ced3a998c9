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

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "land/dataio.hpp"
#include "land/report.hpp"

namespace {

using namespace land;

struct InputOpts {
  std::string input;
  std::string format = "auto";
  bool header = false;
  std::string task = "auto";
};

struct KernelOpts {
  int b = 20;
  double sigma_u = 1.0;
  double sigma_y = 1.0;
  std::string score = "nhsic";
};

void add_input_options(CLI::App* cmd, InputOpts* opts) {
  cmd->add_option("--input", opts->input, "Dataset file")->required();
  cmd->add_option("--format", opts->format, "Input format")
      ->check(CLI::IsMember({"auto", "csv", "libsvm"}));
  cmd->add_flag("--header", opts->header, "First CSV row holds column names");
  cmd->add_option("--task", opts->task, "Target interpretation")
      ->check(CLI::IsMember({"auto", "regression", "classification"}));
}

void add_kernel_options(CLI::App* cmd, KernelOpts* opts) {
  cmd->add_option("--b", opts->b, "Basis points per kernel map");
  cmd->add_option("--sigma-u", opts->sigma_u, "Feature kernel width");
  cmd->add_option("--sigma-y", opts->sigma_y, "Target kernel width");
  cmd->add_option("--score", opts->score, "Dependence score normalization")
      ->check(CLI::IsMember({"nhsic", "hsic"}));
}

LoadOptions make_load_options(const InputOpts& opts) {
  LoadOptions lo;
  if (opts.format == "csv") lo.format = FileFormat::Csv;
  if (opts.format == "libsvm") lo.format = FileFormat::Libsvm;
  lo.header = opts.header;
  if (opts.task == "regression") lo.task = TaskOverride::Regression;
  if (opts.task == "classification") lo.task = TaskOverride::Classification;
  return lo;
}

KernelConfig make_kernel_config(const KernelOpts& opts) {
  KernelConfig kc;
  kc.basis_count = opts.b;
  kc.sigma_u = opts.sigma_u;
  kc.sigma_y = opts.sigma_y;
  kc.score_mode = opts.score == "hsic" ? ScoreMode::HSIC : ScoreMode::NHSIC;
  kc.validate();
  return kc;
}

// --workers beats LAND_WORKERS beats single-threaded.
int resolve_workers(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (flag_value != 0) throw ValidationError("--workers must be a positive integer");
  if (const char* env = std::getenv("LAND_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
      throw ValidationError("LAND_WORKERS must be a positive integer");
    }
    return static_cast<int>(v);
  }
  return 1;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!std::cout) throw IoError("write failure on stdout");
  } else {
    write_text_atomic(out_path, text);
  }
}

void check_feature_list(const std::vector<int>& features, int d) {
  if (features.empty()) throw ValidationError("no feature indices given");
  for (int j : features) {
    if (j < 0 || j >= d) {
      throw ValidationError("feature index " + std::to_string(j) + " out of range (d = " +
                            std::to_string(d) + ")");
    }
  }
}

int run(int argc, char** argv) {
  CLI::App app{"LAND: feature selection by HSIC Lasso with Nystrom-approximated kernels"};
  app.require_subcommand(1);

  // select
  auto* select = app.add_subcommand("select", "Run the selection path, write a JSON report");
  InputOpts select_in;
  KernelOpts select_kernel;
  int select_m = 10;
  int select_workers = 0;
  std::string select_out;
  std::string select_path;
  add_input_options(select, &select_in);
  add_kernel_options(select, &select_kernel);
  select->add_option("--m", select_m, "Number of features to select");
  select->add_option("--workers", select_workers, "Scoring worker threads");
  select->add_option("--out", select_out, "Report file (default: stdout)");
  select->add_option("--path", select_path, "Breakpoint TSV file");

  // screen
  auto* screen = app.add_subcommand("screen", "Rank features by relevance score");
  InputOpts screen_in;
  KernelOpts screen_kernel;
  int screen_m = 10;
  int screen_workers = 0;
  std::string screen_out;
  add_input_options(screen, &screen_in);
  add_kernel_options(screen, &screen_kernel);
  screen->add_option("--m", screen_m, "Number of features to keep");
  screen->add_option("--workers", screen_workers, "Scoring worker threads");
  screen->add_option("--out", screen_out, "Report file (default: stdout)");

  // synth
  auto* synth = app.add_subcommand("synth", "Write the synthetic benchmark dataset");
  SynthConfig synth_cfg;
  std::string synth_out;
  bool synth_header = false;
  synth->add_option("--n", synth_cfg.n, "Observations");
  synth->add_option("--d-relevant", synth_cfg.d_relevant, "Relevant features (must be 3)");
  synth->add_option("--d-irrelevant", synth_cfg.d_irrelevant, "Irrelevant features");
  synth->add_option("--d-redundant", synth_cfg.d_redundant, "Near-duplicate copies");
  synth->add_option("--response-noise", synth_cfg.response_noise, "Response noise level");
  synth->add_option("--copy-noise", synth_cfg.copy_noise, "Copy noise level");
  synth->add_option("--seed", synth_cfg.seed, "RNG seed");
  synth->add_option("--out", synth_out, "Output CSV")->required();
  synth->add_flag("--header", synth_header, "Write a column-name row");

  // eval
  auto* eval = app.add_subcommand("eval", "Metrics for a feature list against a dataset");
  InputOpts eval_in;
  std::vector<int> eval_features;
  double eval_fraction = 0.0;
  std::uint64_t eval_seed = 0;
  std::string eval_out;
  add_input_options(eval, &eval_in);
  eval->add_option("features", eval_features, "0-based feature indices");
  eval->add_option("--train-fraction", eval_fraction,
                   "Evaluate on the test side of a seeded split");
  eval->add_option("--seed", eval_seed, "Split seed");
  eval->add_option("--out", eval_out, "Report file (default: stdout)");

  // nhsic
  auto* nhsic = app.add_subcommand("nhsic", "Pairwise NHSIC matrix for listed features");
  InputOpts nhsic_in;
  std::vector<int> nhsic_features;
  int nhsic_b = 20;
  double nhsic_sigma = 1.0;
  int nhsic_workers = 0;
  bool nhsic_oracle = false;
  std::string nhsic_out;
  add_input_options(nhsic, &nhsic_in);
  nhsic->add_option("features", nhsic_features, "0-based feature indices");
  nhsic->add_option("--b", nhsic_b, "Basis points per kernel map");
  nhsic->add_option("--sigma-u", nhsic_sigma, "Feature kernel width");
  nhsic->add_option("--workers", nhsic_workers, "Scoring worker threads");
  nhsic->add_flag("--oracle", nhsic_oracle, "Exact full-kernel computation");
  nhsic->add_option("--out", nhsic_out, "Output TSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (select->parsed()) {
    const Dataset ds = load_dataset(select_in.input, make_load_options(select_in));
    if (select_m < 1 || select_m > ds.d()) {
      throw ValidationError("--m must be between 1 and the feature count");
    }
    const KernelConfig kc = make_kernel_config(select_kernel);
    const EngineConfig ec{resolve_workers(select_workers), 0};
    const SelectionResult result = land_select(ds.x, ds.y, kc, ec, select_m);
    emit(selection_report(result.path, ds).dump(2) + "\n", select_out);
    if (!select_path.empty()) write_text_atomic(select_path, path_tsv(result.path));
    return 0;
  }

  if (screen->parsed()) {
    const Dataset ds = load_dataset(screen_in.input, make_load_options(screen_in));
    if (screen_m < 1 || screen_m > ds.d()) {
      throw ValidationError("--m must be between 1 and the feature count");
    }
    const KernelConfig kc = make_kernel_config(screen_kernel);
    const EngineConfig ec{resolve_workers(screen_workers), 0};
    const std::vector<FeatureMap> maps = build_feature_maps(ds.x, kc, ec);
    const OutputMap g = build_output_map(ds.y, kc);
    const Vector f = relevance_scores(maps, g, ec);
    emit(screen_report(screen_mr_nhsic(f, screen_m), f, ds).dump(2) + "\n", screen_out);
    return 0;
  }

  if (synth->parsed()) {
    save_csv(synth_generate(synth_cfg), synth_out, synth_header);
    return 0;
  }

  if (eval->parsed()) {
    Dataset ds = load_dataset(eval_in.input, make_load_options(eval_in));
    check_feature_list(eval_features, ds.d());
    if (eval->count("--train-fraction") > 0) {
      ds = split_dataset(ds, eval_fraction, eval_seed).test;
    }
    emit(eval_report(compute_metric_report(ds, eval_features), eval_features, ds).dump(2) + "\n",
         eval_out);
    return 0;
  }

  const Dataset ds = load_dataset(nhsic_in.input, make_load_options(nhsic_in));
  check_feature_list(nhsic_features, ds.d());
  const int m = static_cast<int>(nhsic_features.size());
  Matrix scores(m, m);
  if (nhsic_oracle) {
    std::vector<Matrix> kernels;
    kernels.reserve(nhsic_features.size());
    KernelConfig kc;
    kc.sigma_u = nhsic_sigma;
    for (int j : nhsic_features) {
      kernels.push_back(full_normalized_kernel(standardize(ds.x.row(j).transpose()), kc));
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        scores(i, j) = nhsic_exact(kernels[static_cast<std::size_t>(i)],
                                   kernels[static_cast<std::size_t>(j)]);
      }
    }
  } else {
    KernelConfig kc;
    kc.sigma_u = nhsic_sigma;
    kc.basis_count = nhsic_b;
    kc.validate();
    const EngineConfig ec{resolve_workers(nhsic_workers), 0};
    const Matrix sub = select_rows(ds.x, nhsic_features);
    const std::vector<FeatureMap> maps = build_feature_maps(sub, kc, ec);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        scores(i, j) = nhsic_approx(maps[static_cast<std::size_t>(i)].f,
                                    maps[static_cast<std::size_t>(j)].f);
      }
    }
  }
  emit(matrix_tsv(scores), nhsic_out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const land::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const land::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
