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

#include <doctest.h>

#include <cmath>
#include <numeric>

#include "trigpow/classifier.hpp"

using namespace trigpow;

TEST_SUITE_BEGIN("classifier");

namespace {

// independent numeric base value f(pi a p / q) at 200 bits
double base_numeric(SeriesKind kind, long a, long p, long q) {
  mpfr_t x, pi;
  mpfr_init2(x, 200);
  mpfr_init2(pi, 200);
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_mul_si(x, pi, a * p, MPFR_RNDN);
  mpfr_div_si(x, x, q, MPFR_RNDN);
  if (kind == SeriesKind::Sin)
    mpfr_sin(x, x, MPFR_RNDN);
  else
    mpfr_cos(x, x, MPFR_RNDN);
  double out = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  mpfr_clear(pi);
  return out;
}

// the aggregation rule over residue_bases: divergent iff the per-period
// unit contributions do not cancel, conditional iff they cancel, absolute
// iff there are no unit residues
ConvergenceClass oracle_class(SeriesKind kind, long p, long q) {
  auto bases = residue_bases(kind, p, q);
  int unit_count = 0;
  int net = 0;
  for (const auto& rb : bases) {
    if (rb.unit) {
      ++unit_count;
      net += rb.progression_sign;
    }
  }
  if (unit_count == 0) return ConvergenceClass::ConvergesAbsolutely;
  if (net != 0) return ConvergenceClass::DivergesToPlusInfinity;
  return ConvergenceClass::ConvergesConditionally;
}

}  // namespace

TEST_CASE("decision table") {
  CHECK(classify(SeriesKind::Sin, 1, 4).cls ==
        ConvergenceClass::DivergesToPlusInfinity);
  CHECK(classify(SeriesKind::Cos, 1, 3).cls ==
        ConvergenceClass::ConvergesConditionally);
  CHECK(classify(SeriesKind::Sin, 1, 3).cls ==
        ConvergenceClass::ConvergesAbsolutely);
  CHECK(classify(SeriesKind::Cos, 2, 3).cls ==
        ConvergenceClass::DivergesToPlusInfinity);
  CHECK(classify(SeriesKind::Sin, 1, 2).cls ==
        ConvergenceClass::ConvergesConditionally);
  CHECK_THROWS_AS(classify(SeriesKind::Sin, 2, 0), DomainError);
}

TEST_CASE("auto-reduction is flagged") {
  auto rep = classify(SeriesKind::Cos, 2, 6);
  CHECK(rep.was_reduced);
  CHECK(rep.p == 1);
  CHECK(rep.q == 3);
  CHECK(rep.cls == ConvergenceClass::ConvergesConditionally);
}

TEST_CASE("congruence solutions against a brute-force numeric scan") {
  struct Example {
    SeriesKind kind;
    long p, q;
    unsigned long expect;
  } cases[] = {
      {SeriesKind::Cos, 1, 3, 3},
      {SeriesKind::Sin, 1, 2, 1},
      {SeriesKind::Sin, 1, 4, 2},
  };
  for (const auto& ex : cases) {
    auto a0 = find_a0(ex.kind, ex.p, ex.q);
    REQUIRE(a0.has_value());
    CHECK(*a0 == ex.expect);
    // brute-force scan over a in [1, 2q]: a0 must be a unit residue
    double v = base_numeric(ex.kind, static_cast<long>(*a0), ex.p, ex.q);
    CHECK(std::fabs(std::fabs(v) - 1.0) < 1e-40);
  }
  // the paired residue of Sin 1/2: 2q - a0 = 3 carries the opposite sign
  CHECK(base_numeric(SeriesKind::Sin, 3, 1, 2) == doctest::Approx(-1.0));
  // no unit residue of the requested sign for Sin with odd q
  CHECK(!find_a0(SeriesKind::Sin, 1, 3).has_value());
  // Cos with p even: no residue with value -1
  CHECK(!find_a0(SeriesKind::Cos, 2, 3).has_value());
}

TEST_CASE("a0 sign matches the parity case") {
  // cos, both odd: base at a0 is exactly -1
  for (long q : {3, 5, 7, 9, 15}) {
    for (long p : {1, 3}) {
      if (std::gcd(p, q) != 1) continue;
      auto a0 = find_a0(SeriesKind::Cos, p, q);
      REQUIRE(a0.has_value());
      CHECK(base_numeric(SeriesKind::Cos, static_cast<long>(*a0), p, q) ==
            doctest::Approx(-1.0));
    }
  }
  // sin, q = 2 mod 4: base at a0 is exactly +1; sin, 4 | q: even a0
  auto a = find_a0(SeriesKind::Sin, 3, 10);
  REQUIRE(a.has_value());
  CHECK(base_numeric(SeriesKind::Sin, static_cast<long>(*a), 3, 10) ==
        doctest::Approx(1.0));
  auto b = find_a0(SeriesKind::Sin, 3, 8);
  REQUIRE(b.has_value());
  CHECK(*b % 2 == 0);
}

TEST_CASE("residue bases of the three pilot angles") {
  // cos, theta = 1/2: bases 0, -1, 0, +1; both units push +1 per period
  auto c12 = residue_bases(SeriesKind::Cos, 1, 2);
  REQUIRE(c12.size() == 4);
  CHECK(c12[0].progression_sign == 0);
  CHECK(c12[1].unit);
  CHECK(c12[1].progression_sign == +1);
  CHECK(c12[2].progression_sign == 0);
  CHECK(c12[3].unit);
  CHECK(c12[3].progression_sign == +1);

  // sin, theta = 1/2: +1 at a=1, -1 at a=3; contributions cancel
  auto s12 = residue_bases(SeriesKind::Sin, 1, 2);
  CHECK(s12[0].unit);
  CHECK(s12[0].progression_sign == +1);
  CHECK(s12[2].unit);
  CHECK(s12[2].progression_sign == -1);

  // sin, theta = 1/3: no units, max |base| = sqrt(3)/2
  auto s13 = residue_bases(SeriesKind::Sin, 1, 3);
  double max_abs = 0;
  for (const auto& rb : s13) {
    CHECK(!rb.unit);
    max_abs = std::max(max_abs, std::fabs(rb.base.mid_double()));
  }
  CHECK(max_abs == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
}

TEST_CASE("exact forms are recognized at standard angles") {
  auto bases = residue_bases(SeriesKind::Sin, 1, 6);
  for (const auto& rb : bases) {
    REQUIRE(rb.exact_form.has_value());  // q = 6 hits only standard angles
    double v = base_numeric(SeriesKind::Sin, static_cast<long>(rb.a), 1, 6);
    CHECK(std::fabs(rb.base.mid_double() - v) < 1e-12);
  }
  // a non-standard angle stays an enclosure
  auto b7 = residue_bases(SeriesKind::Sin, 1, 7);
  bool any_numeric = false;
  for (const auto& rb : b7) {
    double v = base_numeric(SeriesKind::Sin, static_cast<long>(rb.a), 1, 7);
    CHECK(std::fabs(rb.base.mid_double() - v) < 1e-12);
    if (!rb.exact_form.has_value()) any_numeric = true;
  }
  CHECK(any_numeric);
}

TEST_CASE("oracle equivalence over every reduced p/q with q <= 30") {
  for (long q = 1; q <= 30; ++q) {
    for (long p = 1; p <= 2 * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (SeriesKind kind : {SeriesKind::Sin, SeriesKind::Cos}) {
        CHECK(classify(kind, p, q).cls == oracle_class(kind, p, q));
      }
    }
  }
}

TEST_CASE("unit flags agree with the numeric magnitude") {
  for (long q = 1; q <= 20; ++q) {
    for (long p = 1; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (SeriesKind kind : {SeriesKind::Sin, SeriesKind::Cos}) {
        for (const auto& rb : residue_bases(kind, p, q)) {
          double v = std::fabs(
              base_numeric(kind, static_cast<long>(rb.a), p, q));
          if (rb.unit)
            CHECK(std::fabs(v - 1.0) < 1e-40);
          else
            CHECK(v < 1.0 - 1e-12);
        }
      }
    }
  }
}

TEST_CASE("classification is invariant under p -> p mod 2q and p -> -p") {
  for (long q : {2, 3, 4, 5, 6, 12}) {
    for (long p = 1; p <= 2 * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (SeriesKind kind : {SeriesKind::Sin, SeriesKind::Cos}) {
        auto base = classify(kind, p, q).cls;
        CHECK(classify(kind, p + 2 * q, q).cls == base);
        CHECK(classify(kind, -p, q).cls == base);
      }
    }
  }
}

TEST_SUITE_END();
