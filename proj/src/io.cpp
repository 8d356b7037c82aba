// Copyright 2026 The cvtangle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvtangle/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "cvtangle/error.hpp"

namespace cvtangle::io {

nlohmann::json to_json(const CovarianceMatrix& cm) {
  nlohmann::json rows = nlohmann::json::array();
  const auto& m = cm.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return {{"modes", cm.modes()}, {"matrix", std::move(rows)}};
}

CovarianceMatrix cm_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("modes") || !doc.contains("matrix")) {
    throw Error(ErrorCode::Io, "covariance matrix document needs \"modes\" and \"matrix\"");
  }
  if (!doc["modes"].is_number_integer()) throw Error(ErrorCode::Io, "\"modes\" must be an integer");
  const int modes = doc["modes"].get<int>();
  if (modes < 1) throw Error(ErrorCode::DimensionMismatch, "\"modes\" must be >= 1");
  const auto& rows = doc["matrix"];
  const auto n = static_cast<std::size_t>(2 * modes);
  if (!rows.is_array() || rows.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "\"matrix\" must have 2N rows");
  }
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "every row must have 2N entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!rows[i][j].is_number()) throw Error(ErrorCode::Io, "matrix entries must be numbers");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j].get<double>();
    }
  }
  return CovarianceMatrix(std::move(m));
}

void write_cm(std::ostream& os, const CovarianceMatrix& cm) { os << to_json(cm).dump() << '\n'; }

CovarianceMatrix read_cm(std::istream& is) {
  nlohmann::json doc;
  try {
    is >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Io, std::string("malformed JSON: ") + e.what());
  }
  return cm_from_json(doc);
}

void write_cm_file(const std::filesystem::path& path, const CovarianceMatrix& cm) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  write_cm(os, cm);
}

CovarianceMatrix read_cm_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return read_cm(is);
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

int pair_columns(int modes) { return std::max(3, modes - 1); }

std::string csv_header(int pair_columns) {
  std::string h = "index,seed,global";
  for (int k = 1; k <= pair_columns; ++k) h += ",pair" + std::to_string(k);
  return h + ",residual,violated";
}

std::string csv_row(const MonogamyRecord& r, int pair_columns) {
  std::ostringstream os;
  os << r.index << ',' << (r.seed ? std::to_string(*r.seed) : std::string()) << ','
     << format_number(r.global_contangle);
  for (int k = 0; k < pair_columns; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    os << ',' << format_number(uk < r.pair_contangles.size() ? r.pair_contangles[uk] : 0.0);
  }
  os << ',' << format_number(r.residual) << ',' << (r.violated ? 1 : 0);
  return os.str();
}

std::vector<MonogamyRecord> read_records_csv(std::istream& is) {
  std::vector<MonogamyRecord> out;
  std::string line;
  if (!std::getline(is, line) || line.rfind("index,seed,global", 0) != 0) {
    throw Error(ErrorCode::Io, "missing records CSV header");
  }
  int columns = 1;
  for (char c : line) columns += c == ',';
  const int pairs = columns - 5;
  if (pairs < 1) throw Error(ErrorCode::Io, "records CSV header has no pair columns");

  auto number = [](const std::string& field) {
    if (field == "nan") return std::numeric_limits<double>::quiet_NaN();
    return std::stod(field);
  };
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    // A row cut short by an interrupted run is discarded.
    if (static_cast<int>(f.size()) != columns) break;
    try {
      MonogamyRecord r;
      r.index = std::stoull(f[0]);
      if (!f[1].empty()) r.seed = std::stoull(f[1]);
      r.global_contangle = number(f[2]);
      for (int k = 0; k < pairs; ++k) r.pair_contangles.push_back(number(f[3 + k]));
      r.residual = number(f[3 + pairs]);
      r.violated = f[4 + pairs] == "1";
      if (std::isnan(r.residual)) r.failure = "failed sample";
      out.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::Io, "malformed records CSV row: " + line);
    }
  }
  return out;
}

std::string scan_csv_header() { return "a_loc,lhs,rhs,violated"; }

std::string scan_csv_row(const ScanRow& row) {
  return format_number(row.a_loc) + ',' + format_number(row.lhs) + ',' +
         format_number(row.rhs) + ',' + (row.violated ? "1" : "0");
}

nlohmann::json to_json(const MonteCarloSummary& s) {
  nlohmann::json j;
  j["count"] = s.count;
  j["violations"] = s.violations;
  j["failures"] = s.failures;
  j["min_residual"] = std::isfinite(s.min_residual) ? nlohmann::json(s.min_residual)
                                                    : nlohmann::json(nullptr);
  j["config"] = {{"modes", s.config.modes},
                 {"seed", s.config.seed},
                 {"squeeze_max", s.config.squeeze_max}};
  return j;
}

}  // namespace cvtangle::io
