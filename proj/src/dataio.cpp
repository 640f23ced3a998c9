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

#include "land/dataio.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <utility>

namespace land {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& raw, double* out) {
  const std::string s = trim(raw);
  if (s.empty()) return false;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return false;
  *out = v;
  return true;
}

bool parse_finite(const std::string& raw, double* out) {
  return parse_double(raw, out) && std::isfinite(*out);
}

std::vector<std::string> split_fields(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delim, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

struct NumberedLine {
  int number = 0;  // 1-based position in the file
  std::string text;
};

std::vector<NumberedLine> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<NumberedLine> lines;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    lines.push_back({number, line});
  }
  if (in.bad()) throw IoError("read failure on " + path);
  return lines;
}

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool integer_like(double v) {
  return v == std::floor(v) && std::abs(v) <= 9.0e15;
}

// Decides regression vs classification for raw target strings and builds the
// Target plus human-readable class names.
void resolve_target(const std::vector<std::string>& raw, const std::vector<int>& line_numbers,
                    TaskOverride task, Target* y, std::vector<std::string>* class_names) {
  class_names->clear();
  std::vector<double> values(raw.size());
  int first_bad = -1;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!parse_finite(raw[i], &values[i])) {
      first_bad = static_cast<int>(i);
      break;
    }
  }

  if (first_bad >= 0) {
    // Non-numeric target: string-labelled classification.
    if (task == TaskOverride::Regression) {
      throw ParseError("regression target is not a finite number: '" + trim(raw[static_cast<std::size_t>(first_bad)]) + "'",
                       line_numbers[static_cast<std::size_t>(first_bad)]);
    }
    std::map<std::string, int> ids;
    for (const auto& s : raw) ids.emplace(trim(s), 0);
    int next = 0;
    for (auto& [name, id] : ids) {
      id = next++;
      class_names->push_back(name);
    }
    y->kind = TaskKind::Classification;
    y->num_classes = next;
    y->labels.clear();
    y->labels.reserve(raw.size());
    for (const auto& s : raw) y->labels.push_back(ids.at(trim(s)));
    y->validate();
    return;
  }

  bool all_integers = true;
  std::set<long long> distinct;
  for (double v : values) {
    if (!integer_like(v)) {
      all_integers = false;
      break;
    }
    distinct.insert(static_cast<long long>(v));
  }

  const bool classify =
      task == TaskOverride::Classification ||
      (task == TaskOverride::Auto && all_integers &&
       static_cast<int>(distinct.size()) <= kMaxClassesForAutoDetect);
  if (classify) {
    if (!all_integers) {
      throw ValidationError("classification target must be integer-valued or string labels");
    }
    std::vector<long long> labels(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      labels[i] = static_cast<long long>(values[i]);
    }
    *y = make_classification_target(labels);
    for (long long v : distinct) class_names->push_back(std::to_string(v));
    return;
  }
  *y = make_regression_target(
      Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size())));
}

std::vector<std::string> default_feature_names(int d) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

Dataset load_csv(const std::string& path, const LoadOptions& opts) {
  std::vector<NumberedLine> lines = read_lines(path);
  if (lines.empty()) throw ParseError("empty file: " + path, 1);

  Dataset ds;
  std::size_t first_row = 0;
  std::vector<std::string> header;
  if (opts.header) {
    header = split_fields(lines[0].text, ',');
    first_row = 1;
    if (lines.size() == first_row) throw ParseError("no data rows after header", lines[0].number);
  }

  const std::size_t width = split_fields(lines[first_row].text, ',').size();
  if (width < 2) {
    throw ParseError("need at least one feature column and a target column",
                     lines[first_row].number);
  }
  if (opts.header && header.size() != width) {
    throw ParseError("header has " + std::to_string(header.size()) + " columns, data has " +
                         std::to_string(width),
                     lines[0].number);
  }

  const int d = static_cast<int>(width) - 1;
  const int n = static_cast<int>(lines.size() - first_row);
  ds.x.resize(d, n);
  std::vector<std::string> raw_target(static_cast<std::size_t>(n));
  std::vector<int> target_lines(static_cast<std::size_t>(n));

  for (int j = 0; j < n; ++j) {
    const NumberedLine& row = lines[first_row + static_cast<std::size_t>(j)];
    const std::vector<std::string> cells = split_fields(row.text, ',');
    if (cells.size() != width) {
      throw ParseError("ragged row: expected " + std::to_string(width) + " columns, got " +
                           std::to_string(cells.size()),
                       row.number);
    }
    for (int k = 0; k < d; ++k) {
      double v = 0.0;
      if (!parse_finite(cells[static_cast<std::size_t>(k)], &v)) {
        throw ParseError("unparsable feature cell '" + trim(cells[static_cast<std::size_t>(k)]) +
                             "' in column " + std::to_string(k + 1),
                         row.number);
      }
      ds.x(k, j) = v;
    }
    raw_target[static_cast<std::size_t>(j)] = cells[width - 1];
    target_lines[static_cast<std::size_t>(j)] = row.number;
  }

  resolve_target(raw_target, target_lines, opts.task, &ds.y, &ds.class_names);
  if (opts.header) {
    ds.feature_names.assign(header.begin(), header.end() - 1);
    for (auto& name : ds.feature_names) name = trim(name);
    ds.target_name = trim(header.back());
  } else {
    ds.feature_names = default_feature_names(d);
  }
  ds.validate();
  return ds;
}

Dataset load_libsvm(const std::string& path, const LoadOptions& opts) {
  std::vector<NumberedLine> lines = read_lines(path);
  if (lines.empty()) throw ParseError("empty file: " + path, 1);

  const int n = static_cast<int>(lines.size());
  std::vector<std::string> raw_target(static_cast<std::size_t>(n));
  std::vector<int> target_lines(static_cast<std::size_t>(n));
  std::vector<std::vector<std::pair<int, double>>> rows(static_cast<std::size_t>(n));
  int max_index = 0;

  for (int j = 0; j < n; ++j) {
    const NumberedLine& row = lines[static_cast<std::size_t>(j)];
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < row.text.size()) {
      const std::size_t start = row.text.find_first_not_of(" \t", pos);
      if (start == std::string::npos) break;
      std::size_t end = row.text.find_first_of(" \t", start);
      if (end == std::string::npos) end = row.text.size();
      tokens.push_back(row.text.substr(start, end - start));
      pos = end;
    }
    if (tokens.empty()) throw ParseError("missing label", row.number);
    raw_target[static_cast<std::size_t>(j)] = tokens[0];
    target_lines[static_cast<std::size_t>(j)] = row.number;

    std::set<int> seen;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      const std::size_t colon = tokens[t].find(':');
      if (colon == std::string::npos) {
        throw ParseError("expected index:value, got '" + tokens[t] + "'", row.number);
      }
      double idx_raw = 0.0;
      if (!parse_double(tokens[t].substr(0, colon), &idx_raw) || !integer_like(idx_raw) ||
          idx_raw < 1.0) {
        throw ParseError("feature index must be a positive integer in '" + tokens[t] + "'",
                         row.number);
      }
      const int idx = static_cast<int>(idx_raw);
      double val = 0.0;
      if (!parse_finite(tokens[t].substr(colon + 1), &val)) {
        throw ParseError("unparsable feature value in '" + tokens[t] + "'", row.number);
      }
      if (!seen.insert(idx).second) {
        throw ParseError("duplicate feature index " + std::to_string(idx), row.number);
      }
      max_index = std::max(max_index, idx);
      rows[static_cast<std::size_t>(j)].emplace_back(idx - 1, val);
    }
  }
  if (max_index == 0) throw ParseError("no feature entries in file", lines[0].number);

  Dataset ds;
  ds.x = Matrix::Zero(max_index, n);
  for (int j = 0; j < n; ++j) {
    for (const auto& [idx, val] : rows[static_cast<std::size_t>(j)]) {
      ds.x(idx, j) = val;
    }
  }
  resolve_target(raw_target, target_lines, opts.task, &ds.y, &ds.class_names);
  ds.feature_names = default_feature_names(max_index);
  ds.validate();
  return ds;
}

FileFormat detect_format(const std::string& path) {
  const std::size_t dot = path.find_last_of('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == "libsvm" || ext == "svm" || ext == "svmlight") return FileFormat::Libsvm;
  return FileFormat::Csv;
}

Dataset subset_dataset(const Dataset& ds, const std::vector<int>& idx) {
  Dataset out;
  out.feature_names = ds.feature_names;
  out.target_name = ds.target_name;
  out.x.resize(ds.x.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) {
    out.x.col(static_cast<Eigen::Index>(j)) = ds.x.col(idx[j]);
  }
  if (ds.y.kind == TaskKind::Regression) {
    Vector values(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) {
      values[static_cast<Eigen::Index>(j)] = ds.y.values[idx[j]];
    }
    out.y = make_regression_target(std::move(values));
    return out;
  }
  // Classes absent from the subset are compacted out; names follow the ids.
  std::vector<long long> raw;
  raw.reserve(idx.size());
  for (int j : idx) raw.push_back(ds.y.labels[static_cast<std::size_t>(j)]);
  out.y = make_classification_target(raw);
  std::set<long long> present(raw.begin(), raw.end());
  for (long long id : present) {
    out.class_names.push_back(ds.class_names[static_cast<std::size_t>(id)]);
  }
  return out;
}

}  // namespace

void Dataset::validate() const {
  if (d() < 1) throw ValidationError("Dataset: need at least one feature");
  if (n() < 2) throw ValidationError("Dataset: need at least two observations");
  check_finite(x, "Dataset");
  y.validate();
  if (y.n() != n()) throw ValidationError("Dataset: target length mismatch");
  if (feature_names.size() != static_cast<std::size_t>(d())) {
    throw ValidationError("Dataset: feature name count mismatch");
  }
  if (y.kind == TaskKind::Classification &&
      class_names.size() != static_cast<std::size_t>(y.num_classes)) {
    throw ValidationError("Dataset: class name count mismatch");
  }
}

Dataset load_dataset(const std::string& path, const LoadOptions& opts) {
  FileFormat format = opts.format;
  if (format == FileFormat::Auto) format = detect_format(path);
  return format == FileFormat::Csv ? load_csv(path, opts) : load_libsvm(path, opts);
}

void save_csv(const Dataset& ds, const std::string& path, bool header) {
  ds.validate();
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp + " for writing");
    if (header) {
      for (const auto& name : ds.feature_names) out << name << ',';
      out << ds.target_name << '\n';
    }
    for (int j = 0; j < ds.n(); ++j) {
      for (int k = 0; k < ds.d(); ++k) {
        out << format_g17(ds.x(k, j)) << ',';
      }
      if (ds.y.kind == TaskKind::Regression) {
        out << format_g17(ds.y.values[j]);
      } else {
        out << ds.class_names[static_cast<std::size_t>(ds.y.labels[static_cast<std::size_t>(j)])];
      }
      out << '\n';
    }
    out.flush();
    if (!out) throw IoError("write failure on " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw IoError("cannot move " + tmp + " to " + path);
  }
}

Dataset synth_generate(const SynthConfig& cfg) {
  if (cfg.n < 2) throw ValidationError("synth: need at least two observations");
  if (cfg.d_relevant != 3) {
    throw ValidationError("synth: the response formula uses exactly 3 relevant features");
  }
  if (cfg.d_irrelevant < 0) throw ValidationError("synth: d_irrelevant must be non-negative");
  const int base = cfg.d_relevant + cfg.d_irrelevant;
  if (cfg.d_redundant < 0 || cfg.d_redundant > base) {
    throw ValidationError("synth: d_redundant must be between 0 and d_relevant + d_irrelevant");
  }
  if (!(cfg.response_noise >= 0.0) || !(cfg.copy_noise >= 0.0) ||
      !std::isfinite(cfg.response_noise) || !std::isfinite(cfg.copy_noise)) {
    throw ValidationError("synth: noise levels must be finite and non-negative");
  }

  const int d = base + cfg.d_redundant;
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  Dataset ds;
  ds.x.resize(d, cfg.n);
  for (int i = 0; i < base; ++i) {
    for (int j = 0; j < cfg.n; ++j) ds.x(i, j) = normal(rng);
  }
  Vector y(cfg.n);
  for (int j = 0; j < cfg.n; ++j) {
    y[j] = ds.x(0, j) * std::exp(ds.x(1, j)) + ds.x(2, j) + cfg.response_noise * normal(rng);
  }
  for (int c = 0; c < cfg.d_redundant; ++c) {
    for (int j = 0; j < cfg.n; ++j) {
      ds.x(base + c, j) = ds.x(c, j) + cfg.copy_noise * normal(rng);
    }
  }
  ds.y = make_regression_target(std::move(y));
  ds.feature_names = default_feature_names(d);
  ds.validate();
  return ds;
}

SplitResult split_dataset(const Dataset& ds, double train_fraction, std::uint64_t seed) {
  ds.validate();
  if (!(train_fraction > 0.0) || !(train_fraction < 1.0)) {
    throw ValidationError("split: train_fraction must be in (0, 1)");
  }
  const int n = ds.n();
  std::mt19937_64 rng(seed);
  std::vector<int> train_idx;
  std::vector<int> test_idx;

  if (ds.y.kind == TaskKind::Regression) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    const int train_n = std::clamp(
        static_cast<int>(std::floor(train_fraction * n)), 1, n - 1);
    train_idx.assign(order.begin(), order.begin() + train_n);
    test_idx.assign(order.begin() + train_n, order.end());
  } else {
    std::vector<std::vector<int>> by_class(static_cast<std::size_t>(ds.y.num_classes));
    for (int i = 0; i < n; ++i) {
      by_class[static_cast<std::size_t>(ds.y.labels[static_cast<std::size_t>(i)])].push_back(i);
    }
    for (auto& group : by_class) {
      std::shuffle(group.begin(), group.end(), rng);
      const int nc = static_cast<int>(group.size());
      const int tc = std::clamp(static_cast<int>(std::floor(train_fraction * nc)), 1, nc);
      train_idx.insert(train_idx.end(), group.begin(), group.begin() + tc);
      test_idx.insert(test_idx.end(), group.begin() + tc, group.end());
    }
    if (test_idx.empty()) {
      throw ValidationError("split: stratification leaves the test side empty");
    }
  }
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(test_idx.begin(), test_idx.end());

  SplitResult result;
  result.train = subset_dataset(ds, train_idx);
  result.test = subset_dataset(ds, test_idx);
  result.train_indices = std::move(train_idx);
  result.test_indices = std::move(test_idx);
  return result;
}

Matrix select_rows(const Matrix& x, const std::vector<int>& rows) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), x.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0 || rows[i] >= x.rows()) {
      throw ValidationError("select_rows: feature index out of range");
    }
    out.row(static_cast<Eigen::Index>(i)) = x.row(rows[i]);
  }
  return out;
}

}  // namespace land
