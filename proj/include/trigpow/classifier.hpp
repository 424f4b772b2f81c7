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

#include <optional>
#include <utility>
#include <vector>

#include "trigpow/angle.hpp"
#include "trigpow/ball.hpp"

namespace trigpow {

// Convergence behavior of the power-trig series for alpha in (0, 1].
enum class ConvergenceClass {
  DivergesToPlusInfinity,
  ConvergesConditionally,
  ConvergesAbsolutely,
};

std::string to_string(ConvergenceClass c);

// Recognized closed-form base values f(pi a p / q) at standard angles.
struct ExactBaseValue {
  enum class Magnitude { Zero, Half, Sqrt2Over2, Sqrt3Over2, One };
  Magnitude magnitude;
  int sign;  // -1, 0 (Zero), +1
};

// One residue class n = a (mod 2q) of the decomposition into 2q sub-series.
// base is f(pi a p / q); the n-th term of the sub-series is base^n / n^alpha,
// whose sign is constant along the progression (2lq is even).
struct ResidueBase {
  unsigned long a = 0;  // 1..2q
  Ball base;
  std::optional<ExactBaseValue> exact_form;
  bool unit = false;         // |base| = 1, decided by congruence
  int progression_sign = 0;  // sign of base^n for n = a (mod 2q); 0 if base=0
};

struct ClassificationReport {
  SeriesKind kind = SeriesKind::Sin;
  mpz_class p, q;            // reduced, q >= 1
  bool was_reduced = false;  // the inputs shared a common factor
  ConvergenceClass cls = ConvergenceClass::ConvergesAbsolutely;
  // all residues a in [1, 2q] with |base(a)| = 1, with their constant signs
  std::vector<std::pair<unsigned long, int>> unit_residues;
  std::optional<unsigned long> a0;  // congruence solution, when one exists
  std::string alpha_range = "(0,1]";
};

// Decision table for theta = p/q. Inputs are auto-reduced (gcd), recorded in
// was_reduced. Valid for alpha in (0, 1].
ClassificationReport classify(SeriesKind kind, const mpz_class& p,
                              const mpz_class& q);

// The unique residue where the base value is exactly -1 (cos) or where the
// parity-case congruence puts the +-1 value (sin); absent when the relevant
// congruence has no solution.
std::optional<unsigned long> find_a0(SeriesKind kind, const mpz_class& p,
                                     const mpz_class& q);

// Base values for a = 1..2q with closed forms at standard angles.
std::vector<ResidueBase> residue_bases(SeriesKind kind, const mpz_class& p,
                                       const mpz_class& q,
                                       mpfr_prec_t prec = 128);

}  // namespace trigpow
