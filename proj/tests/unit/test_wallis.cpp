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

#include "trigpow/wallis.hpp"

using namespace trigpow;

TEST_SUITE_BEGIN("wallis");

TEST_CASE("base cases and the 8/15 value") {
  auto i0 = wallis(0);
  CHECK(i0.pi_power == 1);
  CHECK(i0.coeff == mpq_class(1, 2));
  CHECK(i0.value.mid_double() == doctest::Approx(M_PI / 2));
  auto i1 = wallis(1);
  CHECK(i1.pi_power == 0);
  CHECK(i1.coeff == 1);
  auto i5 = wallis(5);
  CHECK(i5.pi_power == 0);
  CHECK(i5.coeff == mpq_class(8, 15));  // (4/5)(2/3) * 1
}

TEST_CASE("product identity n I_n I_{n-1} = pi/2, exact, n <= 2000") {
  WallisExactTable t;
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    t.advance();
    REQUIRE(t.n() == n);
    // cross-multiplied: 2 n num(r_n) num(r_{n-1}) == den(r_n) den(r_{n-1})
    mpz_class lhs = 2 * mpz_class(static_cast<unsigned long>(n)) *
                    t.coeff().get_num() * t.coeff_prev().get_num();
    mpz_class rhs = t.coeff().get_den() * t.coeff_prev().get_den();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("sqrt(n) I_n converges to sqrt(pi/2) monotonically per parity") {
  WallisBallTable t(128);
  double target = std::sqrt(M_PI / 2);
  double prev_even = 0, prev_odd = 0;
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    t.advance();
    CHECK(mpfr_less_p(t.current().mid(), t.previous().mid()));  // I_n strictly decreasing
    double v = std::sqrt(static_cast<double>(n)) * t.current().mid_double();
    CHECK(v < target);  // from below, both parities
    if (n % 2 == 0) {
      if (prev_even > 0) CHECK(v > prev_even);
      prev_even = v;
    } else {
      if (prev_odd > 0) CHECK(v > prev_odd);
      prev_odd = v;
    }
  }
  // O(1/n) distance at n = 1e4
  CHECK(std::fabs(prev_even - target) < target * 1e-4 * 10);
}

TEST_CASE("expected absolute sum: single term and growth exponents") {
  Ball one_term = expected_abs_sum(mpq_class(1), 1);
  CHECK(one_term.mid_double() == doctest::Approx(2.0 / M_PI).epsilon(1e-12));
  // increments scale like n^-(alpha + 1/2): ratios at doubled n
  for (mpq_class alpha : {mpq_class(3, 5), mpq_class(2, 5)}) {
    double a = alpha.get_d();
    Ball s1 = expected_abs_sum(alpha, 4000);
    Ball s2 = expected_abs_sum(alpha, 4001);
    Ball s3 = expected_abs_sum(alpha, 8000);
    Ball s4 = expected_abs_sum(alpha, 8001);
    double inc1 = s2.mid_double() - s1.mid_double();
    double inc2 = s4.mid_double() - s3.mid_double();
    double fitted = std::log(inc2 / inc1) / std::log(2.0);
    CHECK(std::fabs(fitted + a + 0.5) < 0.01);
  }
}

TEST_CASE("monte carlo is reproducible and sane at alpha = 1") {
  auto r1 = mc_estimate(mpq_class(1), 1000, 100, 42);
  auto r2 = mc_estimate(mpq_class(1), 1000, 100, 42);
  CHECK(r1.sample_mean == r2.sample_mean);
  CHECK(r1.sample_stddev == r2.sample_stddev);
  CHECK(r1.z_score == r2.z_score);
  CHECK(std::fabs(r1.z_score) <= 3.0);
  auto r3 = mc_estimate(mpq_class(1), 1000, 100, 43);
  CHECK(r3.sample_mean != r1.sample_mean);
}

TEST_CASE("sample-count floor") {
  CHECK_THROWS_AS(mc_estimate(mpq_class(1), 100, 1, 42), DomainError);
  CHECK_THROWS_AS(mc_estimate(mpq_class(1), 100, 29, 42), DomainError);
}

TEST_SUITE_END();
