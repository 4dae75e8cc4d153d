//------------------------------------------------------------------------------
//
//   Copyright 2026 The blockcluster Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "blockcluster/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "blockcluster/errors.hpp"
#include "blockcluster/random.hpp"

namespace blockcluster {

int Dataset::num_classes() const {
  if (labels.empty()) return 0;
  return static_cast<int>(std::set<int>(labels.begin(), labels.end()).size());
}

void Dataset::validate() const {
  if (n() < 2) throw std::invalid_argument("dataset needs at least 2 rows");
  if (d() < 1) throw std::invalid_argument("dataset needs at least 1 feature");
  if (!features.allFinite()) throw std::invalid_argument("dataset has non-finite entries");
  if (!labels.empty() && static_cast<int>(labels.size()) != n())
    throw std::invalid_argument("label vector length does not match row count");
}

Scaling scaling_from_string(const std::string& s) {
  if (s == "none") return Scaling::none;
  if (s == "minmax") return Scaling::minmax;
  if (s == "zscore") return Scaling::zscore;
  throw std::invalid_argument("unknown scaling mode: " + s);
}

const char* to_string(Scaling s) {
  switch (s) {
    case Scaling::none: return "none";
    case Scaling::minmax: return "minmax";
    case Scaling::zscore: return "zscore";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool parse_double(const std::string& tok, double& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

}  // namespace

Dataset load_csv(const std::string& path, const std::optional<std::string>& label_column) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw DataError("empty file: " + path);
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  const std::vector<std::string> header = split_csv_line(line);
  const int ncols = static_cast<int>(header.size());
  if (ncols < 1) throw DataError("no columns in header: " + path);

  int label_idx = -1;
  if (label_column) {
    for (int c = 0; c < ncols; ++c)
      if (header[c] == *label_column) label_idx = c;
    if (label_idx < 0) {
      int idx = -1;
      auto [ptr, ec] = std::from_chars(label_column->data(),
                                       label_column->data() + label_column->size(), idx);
      if (ec == std::errc() && ptr == label_column->data() + label_column->size() &&
          idx >= 0 && idx < ncols) {
        label_idx = idx;
      } else {
        throw DataError("label column not found: " + *label_column);
      }
    }
    if (ncols < 2) throw DataError("no feature columns besides the label: " + path);
  }

  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  std::vector<std::string> label_names;
  std::unordered_map<std::string, int> label_ids;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const std::vector<std::string> toks = split_csv_line(line);
    if (static_cast<int>(toks.size()) != ncols)
      throw DataError(path + ":" + std::to_string(lineno) + ": expected " +
                      std::to_string(ncols) + " fields, got " + std::to_string(toks.size()));
    std::vector<double> row;
    row.reserve(ncols - (label_idx >= 0 ? 1 : 0));
    for (int c = 0; c < ncols; ++c) {
      if (c == label_idx) {
        auto [it, fresh] = label_ids.try_emplace(toks[c], static_cast<int>(label_names.size()));
        if (fresh) label_names.push_back(toks[c]);
        labels.push_back(it->second);
        continue;
      }
      double v;
      if (!parse_double(toks[c], v))
        throw DataError(path + ":" + std::to_string(lineno) + ": non-numeric value '" +
                        toks[c] + "' in column " + header[c]);
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() < 2) throw DataError(path + ": needs at least 2 data rows");

  Dataset ds;
  ds.name = std::filesystem::path(path).stem().string();
  ds.features.resize(static_cast<Eigen::Index>(rows.size()),
                     static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      ds.features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  ds.labels = std::move(labels);
  ds.label_names = std::move(label_names);
  ds.validate();
  return ds;
}

void write_csv(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write file: " + path);
  for (int j = 0; j < ds.d(); ++j) out << (j ? ",f" : "f") << j;
  if (ds.has_labels()) out << ",class";
  out << "\n";
  char buf[32];
  for (int i = 0; i < ds.n(); ++i) {
    for (int j = 0; j < ds.d(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", ds.features(i, j));
      if (j) out << ",";
      out << buf;
    }
    if (ds.has_labels()) {
      const int id = ds.labels[static_cast<std::size_t>(i)];
      if (id >= 0 && id < static_cast<int>(ds.label_names.size()))
        out << "," << ds.label_names[static_cast<std::size_t>(id)];
      else
        out << "," << id;
    }
    out << "\n";
  }
}

Dataset gen_two_moons(int n, double noise, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("two_moons needs n >= 2");
  if (noise < 0) throw std::invalid_argument("noise must be >= 0");
  const int n0 = n / 2;
  const int n1 = n - n0;
  Dataset ds;
  ds.name = "two_moons";
  ds.features.resize(n, 2);
  ds.labels.resize(static_cast<std::size_t>(n));
  ds.label_names = {"0", "1"};
  Rng rng(seed);
  auto angle = [](int k, int m) {
    return m > 1 ? std::numbers::pi * k / (m - 1) : 0.0;
  };
  for (int i = 0; i < n0; ++i) {
    const double t = angle(i, n0);
    ds.features(i, 0) = std::cos(t) + rng.normal() * noise;
    ds.features(i, 1) = std::sin(t) + rng.normal() * noise;
    ds.labels[static_cast<std::size_t>(i)] = 0;
  }
  for (int i = 0; i < n1; ++i) {
    const double t = angle(i, n1);
    ds.features(n0 + i, 0) = 1.0 - std::cos(t) + rng.normal() * noise;
    ds.features(n0 + i, 1) = 1.0 - std::sin(t) - 0.5 + rng.normal() * noise;
    ds.labels[static_cast<std::size_t>(n0 + i)] = 1;
  }
  return ds;
}

Dataset gen_circles(int n, double noise, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("circles needs n >= 3");
  if (noise < 0) throw std::invalid_argument("noise must be >= 0");
  int sizes[3] = {n / 3, n / 3, n / 3};
  const int rem = n % 3;
  if (rem >= 1) ++sizes[2];  // remainder goes to the outer rings first
  if (rem == 2) ++sizes[1];
  Dataset ds;
  ds.name = "circles";
  ds.features.resize(n, 2);
  ds.labels.resize(static_cast<std::size_t>(n));
  ds.label_names = {"0", "1", "2"};
  Rng rng(seed);
  int row = 0;
  for (int ring = 0; ring < 3; ++ring) {
    const double radius = ring + 1.0;
    const int m = sizes[ring];
    for (int k = 0; k < m; ++k, ++row) {
      const double t = 2.0 * std::numbers::pi * k / m;
      ds.features(row, 0) = radius * std::cos(t) + rng.normal() * noise;
      ds.features(row, 1) = radius * std::sin(t) + rng.normal() * noise;
      ds.labels[static_cast<std::size_t>(row)] = ring;
    }
  }
  return ds;
}

Dataset gen_ina(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("ina needs n >= 3");
  // Approximation of the INA point cloud: three equal Gaussian blobs on an
  // equilateral triangle of side 4, stddev 0.6.
  constexpr double kSide = 4.0;
  constexpr double kStd = 0.6;
  const double cx[3] = {0.0, kSide, kSide / 2.0};
  const double cy[3] = {0.0, 0.0, kSide * std::numbers::sqrt3 / 2.0};
  int sizes[3] = {n / 3, n / 3, n / 3};
  const int rem = n % 3;
  if (rem >= 1) ++sizes[0];
  if (rem == 2) ++sizes[1];
  Dataset ds;
  ds.name = "ina";
  ds.features.resize(n, 2);
  ds.labels.resize(static_cast<std::size_t>(n));
  ds.label_names = {"0", "1", "2"};
  Rng rng(seed);
  int row = 0;
  for (int blob = 0; blob < 3; ++blob) {
    for (int k = 0; k < sizes[blob]; ++k, ++row) {
      ds.features(row, 0) = cx[blob] + rng.normal() * kStd;
      ds.features(row, 1) = cy[blob] + rng.normal() * kStd;
      ds.labels[static_cast<std::size_t>(row)] = blob;
    }
  }
  return ds;
}

Dataset standardize(const Dataset& ds, Scaling mode) {
  if (mode == Scaling::none) return ds;
  Dataset out = ds;
  for (int j = 0; j < ds.d(); ++j) {
    auto col = out.features.col(j);
    if (mode == Scaling::minmax) {
      const double lo = col.minCoeff();
      const double hi = col.maxCoeff();
      if (hi == lo)
        col.setZero();
      else
        col = (col.array() - lo) / (hi - lo);
    } else {
      const double mean = col.mean();
      const double var = (col.array() - mean).square().sum() / ds.n();
      const double sd = std::sqrt(var);
      if (sd == 0.0)
        col.setZero();
      else
        col = (col.array() - mean) / sd;
    }
  }
  return out;
}

}  // namespace blockcluster
