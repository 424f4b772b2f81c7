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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trigpow/angle.hpp"
#include "trigpow/ball.hpp"

namespace trigpow {

// Shell s collects the indices n with 1 - eps <= |f(pi n theta)| < 1 - eps/2
// for eps = 2^-s. Shell 0 is the bulk 0 <= |f| < 1/2, so the shells
// partition every index of an irrational angle.
struct ShellRecord {
  int s = 0;
  SeriesKind kind = SeriesKind::Cos;
  std::string theta;
  mpq_class alpha;
  std::uint64_t n_max = 0;
  std::uint64_t count = 0;
  std::uint64_t first_member = 0;            // 0 when empty
  std::uint64_t min_gap = 0;                 // min n_{k+1} - n_k; 0 if < 2 members
  double min_norm_gap = 0;                   // min over k of n_k / k; 0 if empty
  std::vector<std::uint64_t> members;        // filled only when requested
  Ball shell_sum;                            // sum over members <= n_max
  double tail_bound = 0;                     // bound on the part beyond n_max
  bool truncated = false;                    // tail_bound > budget target
};

struct GapFit {
  std::string theta;
  SeriesKind kind = SeriesKind::Cos;
  int s_lo = 0, s_hi = 0;
  std::vector<int> shells_used;
  std::vector<double> log_eps;           // ln(2^-s)
  std::vector<double> log_min_norm_gap;  // ln(min_k n_k/k)
  double fitted_exponent = 0;            // least-squares slope
  double mu_used = 2.0;
  double nu_expected = 0.5;  // 1/(2 mu - 2)
  bool mu_defaulted = true;
};

struct ShellScanResult {
  std::vector<ShellRecord> shells;  // one record per s in [0, s_max], per alpha
                                    // the sums live in `sums` below
  std::vector<mpq_class> alphas;
  // sums[i][s] = shell sum for alphas[i], shell s
  std::vector<std::vector<Ball>> sums;
  std::uint64_t beyond_count = 0;  // indices deeper than s_max
  std::uint64_t escalations = 0;   // boundary cases re-run at high precision
};

// Single pass over n <= n_max classifying every index into its shell.
// Rational angles are rejected: their shells are degenerate (use the
// classifier instead).
ShellScanResult shell_scan(const AngleForm& theta, SeriesKind kind,
                           const std::vector<mpq_class>& alphas, int s_max,
                           std::uint64_t n_max, const PrecisionBudget& budget,
                           bool collect_members);

ShellRecord enumerate_shell(const AngleForm& theta, SeriesKind kind, int s,
                            const mpq_class& alpha, std::uint64_t n_max,
                            const PrecisionBudget& budget,
                            bool collect_members = true);

// S_{2^-s} for s = 0..s_max (sums over members <= n_max, truncation flagged).
std::vector<ShellRecord> shell_sums(const AngleForm& theta, SeriesKind kind,
                                    const mpq_class& alpha, int s_max,
                                    std::uint64_t n_max,
                                    const PrecisionBudget& budget);

// Least-squares exponent of the minimum normalized gap against eps over
// shells in [s_lo, s_hi] having at least 5 members.
GapFit fit_gap_exponent(const AngleForm& theta, SeriesKind kind, int s_lo,
                        int s_hi, std::uint64_t n_max,
                        const PrecisionBudget& budget,
                        std::optional<double> mu_override = std::nullopt);

}  // namespace trigpow
