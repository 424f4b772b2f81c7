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

#include "trigpow/contfrac.hpp"
#include "trigpow/rng.hpp"

using namespace trigpow;

TEST_SUITE_BEGIN("contfrac");

namespace {

// reconstruct the exact rational value of a finite expansion (Euclid oracle)
mpq_class cf_value(const ContinuedFractionExpansion& e) {
  mpq_class v = 0;
  for (auto it = e.quotients.rbegin(); it != e.quotients.rend(); ++it) {
    v = mpq_class(1) / (mpq_class(*it) + v);
  }
  return mpq_class(e.a0) + v;
}

}  // namespace

TEST_CASE("golden ratio expands into all ones") {
  auto e = expand(AngleForm::named(NamedConstant::GoldenRatio), 30);
  CHECK(e.a0 == 1);
  REQUIRE(static_cast<int>(e.quotients.size()) == 30);
  for (const auto& a : e.quotients) CHECK(a == 1);
  auto cv = convergents(e);
  // Fibonacci ladder: 1/1, 2/1, 3/2, 5/3, ...
  CHECK(cv[1].p == 2);
  CHECK(cv[1].q == 1);
  CHECK(cv[4].p == 8);
  CHECK(cv[4].q == 5);
}

TEST_CASE("sqrt(2) expands into [1;2,2,2,...]") {
  auto e = expand(AngleForm::named(NamedConstant::Sqrt2), 30);
  CHECK(e.a0 == 1);
  for (const auto& a : e.quotients) CHECK(a == 2);
  auto cv = convergents(e);
  long expect_p[] = {1, 3, 7, 17, 41};
  long expect_q[] = {1, 2, 5, 12, 29};
  for (int k = 0; k < 5; ++k) {
    CHECK(cv[k].p == expect_p[k]);
    CHECK(cv[k].q == expect_q[k]);
  }
  // p_k/q_k -> sqrt(2): convergents solve the Pell equation p^2 - 2 q^2 = +-1
  const auto& last = cv.back();
  mpz_class pell = last.p * last.p - 2 * last.q * last.q;
  CHECK((pell == 1 || pell == -1));
}

TEST_CASE("rational input terminates and reconstructs exactly") {
  auto e = expand(AngleForm::rational(355, 113), 64);
  CHECK(e.input_rational);
  REQUIRE(e.quotients.size() == 2);
  CHECK(e.a0 == 3);
  CHECK(e.quotients[0] == 7);
  CHECK(e.quotients[1] == 16);
  CHECK(cf_value(e) == mpq_class(355, 113));
  // generic fuzz: expansion of p/q reconstructs p/q
  SplitMix64 rng(12);
  for (int i = 0; i < 100; ++i) {
    long q = static_cast<long>(rng.next_below(100000) + 1);
    long p = static_cast<long>(rng.next_below(200000)) - 100000;
    auto ee = expand(AngleForm::rational(p, q), 128);
    CHECK(ee.input_rational);
    mpq_class expect(p, q);
    expect.canonicalize();
    CHECK(cf_value(ee) == expect);
  }
}

TEST_CASE("determinant identity at every step") {
  auto e = expand(AngleForm::named(NamedConstant::E), 25);
  auto cv = convergents(e);
  for (std::size_t k = 1; k < cv.size(); ++k) {
    mpz_class det = cv[k].p * cv[k - 1].q - cv[k - 1].p * cv[k].q;
    CHECK((det == 1 || det == -1));
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), cv[k].p.get_mpz_t(), cv[k].q.get_mpz_t());
    CHECK(g == 1);
    // strictly increasing from k = 2 (q_1 can tie q_0 when a_1 = 1)
    if (k >= 2) CHECK(cv[k].q > cv[k - 1].q);
  }
}

TEST_CASE("convergent sandwich against the angle's interval") {
  // 1/(q_k (q_{k+1} + q_k)) < |theta - p_k/q_k| < 1/(q_k q_{k+1})
  AngleForm theta = AngleForm::named(NamedConstant::GoldenRatio);
  auto e = expand(theta, 25);
  auto cv = convergents(e);
  Ball enc = theta.enclosure(512);
  for (std::size_t k = 1; k + 1 < cv.size(); ++k) {
    mpq_class approx(cv[k].p, cv[k].q);
    approx.canonicalize();
    Ball diff = abs_enc(enc + Ball::from_rational(-approx, 512));
    mpq_class upper(1, cv[k].q * cv[k + 1].q);
    mpq_class lower(1, cv[k].q * (cv[k + 1].q + cv[k].q));
    CHECK(diff.hi_double() < upper.get_d());
    CHECK(diff.lo_double() > lower.get_d());
  }
}

TEST_CASE("decimal expansion stops when the interval is used up") {
  // [0.50, 0.51): the second quotient is not determined
  auto e = expand(AngleForm::decimal("0.50", 2), 10);
  CHECK(e.truncated_by_interval);
  CHECK(e.quotients.size() < 10);
  // a 30-digit decimal supports a deep expansion without guessing
  auto deep =
      expand(AngleForm::decimal("0.414213562373095048801688724209", 30), 40);
  CHECK(deep.quotients.size() >= 20);
  for (const auto& a : deep.quotients) CHECK(a >= 1);
}

TEST_CASE("mu estimate: formula values for the algebraic constants") {
  // window k in [3, K-1]; for the golden ratio the max ratio sits at k = 3:
  // ln(q_4)/ln(q_3) = ln 5 / ln 3
  MuEstimate phi = estimate_mu(AngleForm::named(NamedConstant::GoldenRatio), 30);
  double expect_phi = 1.0 + std::log(5.0) / std::log(3.0);
  CHECK(phi.mu_hat == doctest::Approx(expect_phi).epsilon(1e-12));
  CHECK(phi.mu_hat >= 2.0 - 0.05);
  // ratios decay toward 1 (q grows geometrically)
  CHECK(phi.ratios.back() < 1.05);

  MuEstimate r2 = estimate_mu(AngleForm::named(NamedConstant::Sqrt2), 30);
  double expect_r2 = 1.0 + std::log(29.0) / std::log(12.0);
  CHECK(r2.mu_hat == doctest::Approx(expect_r2).epsilon(1e-12));
  CHECK(r2.ratios.back() < 1.05);
}

TEST_CASE("mu estimate blows up on a Liouville-style truncation") {
  // sum_{j<=6} 10^(-j!) as an exact rational: giant partial quotients
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, 720);
  mpq_class v = 0;
  for (unsigned long f : {1ul, 2ul, 6ul, 24ul, 120ul, 720ul}) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, f);
    v += mpq_class(1) / mpq_class(d);
  }
  AngleForm theta = AngleForm::rational(v.get_num(), v.get_den());
  MuEstimate m = estimate_mu(theta, 64);
  CHECK(m.rational);
  CHECK(m.mu_hat > 5.0);
}

TEST_CASE("too short an expansion is rejected") {
  CHECK_THROWS_AS(estimate_mu(AngleForm::rational(1, 2), 30), DomainError);
}

TEST_SUITE_END();
