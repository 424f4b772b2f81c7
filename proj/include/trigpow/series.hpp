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
#include "trigpow/ball.hpp"
#include "trigpow/classifier.hpp"

namespace trigpow {

struct PartialSumResult {
  SeriesKind kind = SeriesKind::Sin;
  std::string theta;
  mpq_class alpha;
  std::uint64_t n = 0;
  Ball value;
  std::uint64_t terms_evaluated = 0;  // terms computed explicitly; the rest
                                      // were absorbed into the radius by a
                                      // certified smallness bound
  std::string method = "direct";
};

// One arithmetic progression n = a (mod 2q) of the decomposition.
struct ResidueSubSeries {
  unsigned long a = 0;
  Ball base;        // f(pi a p / q)
  Ball ratio;       // base^(2q), the geometric ratio of the sub-series
  Ball partial;     // sum of the sub-series terms with index <= N
  bool unit = false;
  int progression_sign = 0;
};

struct ResidueDecomposition {
  SeriesKind kind = SeriesKind::Sin;
  mpz_class p, q;
  mpq_class alpha;
  std::uint64_t n = 0;  // cutoff
  std::vector<ResidueSubSeries> residues;
  std::vector<unsigned long> divergent_residues;  // unit residues whose signs
                                                  // do not cancel per period
};

struct RateCertificate {
  SeriesKind kind = SeriesKind::Sin;
  mpz_class p, q;
  mpz_class a_q;        // computed integer bound on the non-unit noise
  std::uint64_t big_l;  // L; the partial sum runs to N = 2qL
  mpq_class alpha;
  Ball lower_bound;  // (1/q) ln L - A_q
  Ball observed;     // |S_N|
  bool valid = false;
};

// Direct partial sum of f(pi n theta)^n / n^alpha for n = 1..N, ascending.
// Terms certified below the radius floor are absorbed without evaluation.
PartialSumResult partial_sum(SeriesKind kind, const AngleForm& theta,
                             const mpq_class& alpha, std::uint64_t n,
                             const PrecisionBudget& budget);

// The exact sum of a convergent series (enclosure of width <= tolerance):
// absolutely convergent residues via geometric tail bounds; the cancelling
// unit-residue pair of a conditional series via its digamma closed form at
// alpha = 1 or a paired loop with an integral tail bound otherwise.
Ball accelerated_value(SeriesKind kind, const mpz_class& p, const mpz_class& q,
                       const mpq_class& alpha, double tolerance);

// Least integer above the alpha->0 supremum of the total absolute non-unit
// residue contribution: sum over |base(a)| < 1 of |base(a)|^a/(1-|base|^(2q)).
// Enumerates 2q residues; requires q <= 2^20.
mpz_class compute_Aq(SeriesKind kind, const mpz_class& p, const mpz_class& q);

// Closed-form integer upper bound q*(2 + pi^2/6), valid for every p coprime
// to q = 2^m and both kinds. Used where enumeration is out of reach.
mpz_class aq_upper_bound_pow2(const mpz_class& q);

// Verifies |S_{2qL}| >= (1/q) ln L - A_q for 4 | q.
RateCertificate rate_certificate(SeriesKind kind, const mpz_class& p,
                                 const mpz_class& q, const mpq_class& alpha,
                                 std::uint64_t big_l);

// Per-residue partial sums, reproducing the direct partial sum exactly.
ResidueDecomposition residue_decomposition(SeriesKind kind, const mpz_class& p,
                                           const mpz_class& q,
                                           const mpq_class& alpha,
                                           std::uint64_t n,
                                           const PrecisionBudget& budget);

// Certified upper bound on |S_infinity - S_N| for a convergent rational
// series (geometric tails plus the paired-term integral bound).
double convergent_tail_bound(SeriesKind kind, const mpz_class& p,
                             const mpz_class& q, const mpq_class& alpha,
                             std::uint64_t n);

// sum_{k>=1} z^k / k^alpha for 0 < z < 1, alpha <= 1, within tolerance.
Ball polylog_sum(const mpq_class& z, const mpq_class& alpha, double tolerance);

// Gamma(1-alpha) * (ln 1/z)^(alpha-1), the z -> 1 asymptotic of the sum.
Ball gelfond_asymptotic(const mpq_class& z, const mpq_class& alpha,
                        mpfr_prec_t prec = 128);

}  // namespace trigpow
