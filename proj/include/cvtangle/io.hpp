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

#pragma once

// File formats.
//
// Covariance matrix: {"modes": N, "matrix": [[...], ...]}, 2N x 2N row-major
// in (x1, p1, ..., xN, pN) order. Doubles are written with round-trip
// precision, so write/read is lossless.
//
// Monte Carlo records (CSV): index,seed,global,pair1,...,pairK,residual,violated
// with K = max(3, N - 1) pair columns, zero-padded. Failed samples carry nan.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "cvtangle/monogamy.hpp"
#include "cvtangle/symplectic.hpp"

namespace cvtangle::io {

nlohmann::json to_json(const CovarianceMatrix& cm);
CovarianceMatrix cm_from_json(const nlohmann::json& doc);

void write_cm(std::ostream& os, const CovarianceMatrix& cm);
CovarianceMatrix read_cm(std::istream& is);
void write_cm_file(const std::filesystem::path& path, const CovarianceMatrix& cm);
CovarianceMatrix read_cm_file(const std::filesystem::path& path);

/// 12 significant digits.
std::string format_number(double x);

int pair_columns(int modes);
std::string csv_header(int pair_columns);
std::string csv_row(const MonogamyRecord& r, int pair_columns);
std::vector<MonogamyRecord> read_records_csv(std::istream& is);

std::string scan_csv_header();
std::string scan_csv_row(const ScanRow& row);

nlohmann::json to_json(const MonteCarloSummary& s);

}  // namespace cvtangle::io
