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
#include <string>

#include "trigpow/angle.hpp"
#include "trigpow/ball.hpp"

namespace trigpow {

// I_n = integral of sin^n x over [0, pi/2] = coeff * pi^pi_power with the
// recurrence I_n = (n-1)/n * I_{n-2}; I_0 = pi/2, I_1 = 1.
struct WallisValue {
  std::uint64_t n = 0;
  mpq_class coeff;
  int pi_power = 0;  // 1 for even n, 0 for odd n
  Ball value;
};

// Exact value by the recurrence (O(n) rational work; fine up to ~10^5).
WallisValue wallis(std::uint64_t n, mpfr_prec_t prec = 128);

// Iterator over the exact coefficients, O(1) state.
class WallisExactTable {
 public:
  WallisExactTable() : n_(1), r_prev_(1, 2), r_cur_(1) {}
  void advance();  // n -> n+1
  std::uint64_t n() const { return n_; }
  const mpq_class& coeff() const { return r_cur_; }        // I_n / pi^e
  const mpq_class& coeff_prev() const { return r_prev_; }  // I_{n-1} / pi^e
 private:
  std::uint64_t n_;
  mpq_class r_prev_, r_cur_;
};

// Iterator over enclosures of I_n, O(1) state, cheap per step.
class WallisBallTable {
 public:
  explicit WallisBallTable(mpfr_prec_t prec);
  void advance();
  std::uint64_t n() const { return n_; }
  const Ball& current() const { return cur_; }
  const Ball& previous() const { return prev_; }

 private:
  std::uint64_t n_;
  Ball prev_, cur_;  // I_{n-1}, I_n
};

// sum_{n=1}^{N} 2 I_n / (pi n^alpha)
Ball expected_abs_sum(const mpq_class& alpha, std::uint64_t n_max,
                      mpfr_prec_t prec = 96);

struct MonteCarloReport {
  mpq_class alpha;
  std::uint64_t n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::string rng = "splitmix64-decimal-v1";
  int theta_digits = 0;  // decimal digits of each sampled angle
  double sample_mean = 0;
  double sample_stddev = 0;
  double standard_error = 0;
  double expected = 0;  // midpoint of expected_abs_sum(alpha, N)
  double z_score = 0;
};

// Seeded estimate of the mean of T_N(theta) = sum |sin(pi n theta)|^n / n^alpha
// over theta uniform in (0,1); reproducible bit for bit given the seed.
MonteCarloReport mc_estimate(const mpq_class& alpha, std::uint64_t n_max,
                             int samples, std::uint64_t seed);

}  // namespace trigpow
