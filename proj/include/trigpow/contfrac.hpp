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

#include <vector>

#include "trigpow/angle.hpp"

namespace trigpow {

struct ContinuedFractionExpansion {
  mpz_class a0;
  std::vector<mpz_class> quotients;  // a1, a2, ... (all >= 1)
  bool input_rational = false;       // the expansion terminated exactly
  // true when emission stopped because the input interval no longer
  // determines the next quotient uniquely
  bool truncated_by_interval = false;
  int source_precision_digits = 0;  // stated precision for decimal inputs
};

struct Convergent {
  mpz_class p, q;  // coprime, q strictly increasing in k
  int k = 0;
};

struct MuEstimate {
  double mu_hat = 0;  // 1 + max over the window of ln q_{k+1} / ln q_k
  bool rational = false;
  int window_lo = 0, window_hi = 0;  // convergent indices k used
  std::vector<double> ratios;        // ln q_{k+1}/ln q_k for k in the window
};

// Expansion certified against the input's interval: quotients are emitted
// only while the interval determines them uniquely. Named constants are
// rematerialized at higher precision until max_quotients are available.
ContinuedFractionExpansion expand(const AngleForm& theta, int max_quotients);

// p_k/q_k by the standard recurrence, including the integer part at k = 0.
std::vector<Convergent> convergents(const ContinuedFractionExpansion& e);

// Finite-truncation irrationality-exponent estimate; the window drops
// k < 3 (small-denominator noise).
MuEstimate estimate_mu(const AngleForm& theta, int max_quotients);

}  // namespace trigpow
