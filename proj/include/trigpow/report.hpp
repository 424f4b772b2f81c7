// Copyright 2026 The trigpow authors
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

#include <json.hpp>

#include "trigpow/classifier.hpp"
#include "trigpow/contfrac.hpp"
#include "trigpow/liouville.hpp"
#include "trigpow/series.hpp"
#include "trigpow/shells.hpp"
#include "trigpow/wallis.hpp"

namespace trigpow {

inline constexpr const char* kSchemaVersion = "trigpow-report/1";
inline constexpr const char* kToolVersion = "0.1.0";

// Every report is self-describing: schema, tool version, and enclosure radii
// travel with the numbers.
nlohmann::json json_of(const Ball& b);
nlohmann::json json_of(const ClassificationReport& r);
nlohmann::json json_of(const PartialSumResult& r, int working_digits);
nlohmann::json json_of(const RateCertificate& r);
nlohmann::json json_of(const ContinuedFractionExpansion& e,
                       const std::vector<Convergent>& cv, const MuEstimate* mu);
nlohmann::json json_of(const GapFit& fit);
nlohmann::json json_of(const LiouvilleSchedule& s,
                       const std::vector<DivergenceCertificate>& certs);
nlohmann::json json_of(const MonteCarloReport& r);
nlohmann::json json_of(const DivergenceDemo& d);
nlohmann::json json_of(const ShellRecord& rec);

// Fixed, documented column order:
//   s,epsilon,count,min_gap,shell_sum_mid,shell_sum_rad,truncated
std::string shell_csv_header();
std::string shell_csv_row(const ShellRecord& rec);

// The plot-facing row as parsed back from CSV (doubles round-trip exactly).
struct CsvShellRow {
  int s = 0;
  double epsilon = 0;
  std::uint64_t count = 0;
  std::uint64_t min_gap = 0;
  double shell_sum_mid = 0;
  double shell_sum_rad = 0;
  bool truncated = false;
};

CsvShellRow parse_shell_csv_row(const std::string& line);
std::string shell_csv_row(const CsvShellRow& row);

}  // namespace trigpow
