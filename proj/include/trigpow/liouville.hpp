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
#include <vector>

#include "trigpow/angle.hpp"

namespace trigpow {

// Binary-expansion construction of an angle xi inside a target interval for
// which both power-trig series diverge for every alpha <= 1. The exponent
// schedule nu_{k+1} = 2^(nu_k + 2) (A_{2^nu_k} + k + 4) + 2 nu_k + 3 grows
// doubly exponentially; everything is kept as exact integers and xi itself
// is never expanded into digits.
struct LiouvilleSchedule {
  mpq_class x1, x2;  // target interval
  mpz_class u;       // integer part of xi_0
  std::vector<unsigned long> b;  // fractional bit positions of xi_0, ascending
  std::vector<mpz_class> nu;     // nu_1 < nu_2 < ... (depth entries)
  std::vector<mpz_class> a_values;      // A_{2^nu_k} for k = 1..depth-1
  std::vector<std::string> a_method;    // "exact" or "bound" per entry
  mpq_class xi0;
  mpq_class xi1;  // xi_0 + 2^-nu_1 = p / 2^nu_1 with p odd
};

// Exact-integer certificate for step k: the exponent identity behind
// N_k^2 |xi - xi_k| <= 1, and the lower bound k + 4 - pi on |S_{N_k}|.
struct DivergenceCertificate {
  int k = 0;
  mpz_class nu_k, nu_k1;
  mpz_class a_q;         // A_{2^nu_k}
  mpz_class l_exponent;  // log2 L = 2^(nu_k+1) (A + k + 4)
  mpz_class n_exponent;  // log2 N_k = nu_k + 1 + l_exponent
  mpq_class slack;       // exact value of the N_k^2 |xi - xi_k| bound; = 1
  double lower_bound = 0;  // k + 4 - pi
  bool identity_ok = false;
};

LiouvilleSchedule build_schedule(const mpq_class& x1, const mpq_class& x2,
                                 int depth);

DivergenceCertificate certify(const LiouvilleSchedule& schedule, int k);

// Feasible-scale illustration of the divergence mechanism on the rational
// angle 1/q: partial sums against the certified (1/q) ln L - A_q bound.
// The schedule's true N_k is astronomically large; this is a demonstration,
// not a verification of the certificate.
struct DivergenceDemo {
  unsigned long q = 0;
  double k_target = 0;
  std::uint64_t n_budget = 0;
  mpz_class a_q;  // max over both kinds
  struct Point {
    SeriesKind kind;
    std::uint64_t big_l;
    double observed;  // |S_{2qL}| midpoint
    double bound;     // (1/q) ln L - A_q
  };
  std::vector<Point> points;
  bool exceeded = false;  // every kind exceeded k_target at the largest L
};

DivergenceDemo demo_divergence(unsigned long q, double k_target,
                               std::uint64_t n_budget);

}  // namespace trigpow
