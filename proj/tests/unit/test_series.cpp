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

#include "trigpow/series.hpp"

using namespace trigpow;

TEST_SUITE_BEGIN("series");

namespace {

double mpfr_const(void (*setter)(mpfr_ptr)) {
  mpfr_t t;
  mpfr_init2(t, 128);
  setter(t);
  double v = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return v;
}

double quarter_pi() {
  return mpfr_const([](mpfr_ptr t) {
    mpfr_const_pi(t, MPFR_RNDN);
    mpfr_div_ui(t, t, 4, MPFR_RNDN);
  });
}

}  // namespace

TEST_CASE("Leibniz oracle: sin series at theta = 1/2, alpha = 1") {
  PrecisionBudget b = PrecisionBudget::for_index_range(100000);
  auto r = partial_sum(SeriesKind::Sin, AngleForm::rational(1, 2), mpq_class(1),
                       100000, b);
  // partial sums approach 1 - 1/3 + 1/5 - ... = pi/4
  CHECK(std::fabs(r.value.mid_double() - quarter_pi()) <
        1e-5 + r.value.rad_double());
  CHECK(r.terms_evaluated == 50000);
}

TEST_CASE("harmonic oracle: cos series at theta = 1/2, alpha = 1") {
  PrecisionBudget b = PrecisionBudget::for_index_range(10000);
  auto r = partial_sum(SeriesKind::Cos, AngleForm::rational(1, 2), mpq_class(1),
                       10000, b);
  // only even n contribute, each +1/n: the sum is H_5000 / 2
  mpfr_t h;
  mpfr_init2(h, 160);
  mpfr_set_zero(h, 1);
  mpfr_t term;
  mpfr_init2(term, 160);
  for (unsigned long k = 1; k <= 5000; ++k) {
    mpfr_set_ui(term, 1, MPFR_RNDN);
    mpfr_div_ui(term, term, k, MPFR_RNDN);
    mpfr_add(h, h, term, MPFR_RNDN);
  }
  double expect = mpfr_get_d(h, MPFR_RNDN) / 2;
  mpfr_clear(h);
  mpfr_clear(term);
  CHECK(std::fabs(r.value.mid_double() - expect) < 1e-12);
  CHECK(expect == doctest::Approx(4.547).epsilon(1e-3));
}

TEST_CASE("empty sums are rejected") {
  PrecisionBudget b;
  CHECK_THROWS_AS(partial_sum(SeriesKind::Sin, AngleForm::rational(1, 2),
                              mpq_class(1), 0, b),
                  DomainError);
}

TEST_CASE("deterministic: identical inputs give identical bits") {
  PrecisionBudget b = PrecisionBudget::for_index_range(20000);
  auto r1 = partial_sum(SeriesKind::Cos, AngleForm::named(NamedConstant::Sqrt2),
                        mpq_class(3, 4), 20000, b);
  auto r2 = partial_sum(SeriesKind::Cos, AngleForm::named(NamedConstant::Sqrt2),
                        mpq_class(3, 4), 20000, b);
  CHECK(mpfr_equal_p(r1.value.mid(), r2.value.mid()));
  CHECK(mpfr_equal_p(r1.value.rad(), r2.value.rad()));
  CHECK(r1.terms_evaluated == r2.terms_evaluated);
}

TEST_CASE("decomposition identity: residue partial sums rebuild the sum") {
  for (auto [kind, p, q] : {std::tuple<SeriesKind, long, long>{
                                SeriesKind::Sin, 1, 3},
                            {SeriesKind::Cos, 2, 5},
                            {SeriesKind::Sin, 3, 4}}) {
    mpq_class alpha(7, 10);
    std::uint64_t n = 2 * q * 50;  // a multiple of the period
    PrecisionBudget b = PrecisionBudget::for_index_range(n);
    auto direct = partial_sum(kind, AngleForm::rational(p, q), alpha, n, b);
    auto decomp = residue_decomposition(kind, p, q, alpha, n, b);
    Ball sum(b.bits());
    for (const auto& sub : decomp.residues) sum += sub.partial;
    CHECK(sum.overlaps(direct.value));
    CHECK(std::fabs(sum.mid_double() - direct.value.mid_double()) < 1e-12);
  }
}

TEST_CASE("divergent residues are the unit residues") {
  auto d = residue_decomposition(SeriesKind::Sin, 1, 4, mpq_class(1), 800,
                                 PrecisionBudget::for_index_range(800));
  CHECK(d.divergent_residues == std::vector<unsigned long>{2, 6});
}

TEST_CASE("accelerated: sin series at 1/2 hits pi/4") {
  Ball v = accelerated_value(SeriesKind::Sin, 1, 2, mpq_class(1), 1e-12);
  CHECK(std::fabs(v.mid_double() - quarter_pi()) < 1e-12);
  CHECK(v.rad_double() < 1e-12);
}

TEST_CASE("accelerated agrees with direct sums plus the certified tail") {
  struct Case {
    SeriesKind kind;
    long p, q;
    mpq_class alpha;
  } cases[] = {
      {SeriesKind::Sin, 1, 3, mpq_class(1)},
      {SeriesKind::Sin, 1, 3, mpq_class(3, 5)},
      {SeriesKind::Cos, 1, 3, mpq_class(1)},
      {SeriesKind::Sin, 1, 2, mpq_class(1)},
      {SeriesKind::Cos, 3, 5, mpq_class(1)},
  };
  for (const auto& c : cases) {
    std::uint64_t n = 100000;
    Ball acc = accelerated_value(c.kind, c.p, c.q, c.alpha, 1e-10);
    PrecisionBudget b = PrecisionBudget::for_index_range(n);
    auto direct = partial_sum(c.kind, AngleForm::rational(c.p, c.q), c.alpha,
                              n, b);
    double tail = convergent_tail_bound(c.kind, c.p, c.q, c.alpha, n);
    double gap = std::fabs(acc.mid_double() - direct.value.mid_double());
    CHECK(gap <= acc.rad_double() + direct.value.rad_double() + tail);
  }
}

TEST_CASE("accelerated rejects divergent input") {
  CHECK_THROWS_AS(accelerated_value(SeriesKind::Sin, 1, 4, mpq_class(1), 1e-8),
                  DomainError);
  CHECK_THROWS_AS(accelerated_value(SeriesKind::Cos, 1, 2, mpq_class(1), 1e-8),
                  DomainError);
}

TEST_CASE("paired-tail integral bound dominates brute force at q = 2") {
  // bound: (u2-u1) (2q)^(-alpha-1) L^(-alpha) with u1=1, u2=3, 2q=4
  for (double alpha : {1.0, 0.7}) {
    for (std::uint64_t L : {10ull, 100ull, 1000ull}) {
      double brute = 0;
      for (std::uint64_t l = L + 1; l <= 20000000; ++l) {
        brute += std::pow(4.0 * l + 1.0, -alpha) -
                 std::pow(4.0 * l + 3.0, -alpha);
      }
      double bound = 2.0 * std::pow(4.0, -alpha - 1.0) *
                     std::pow(static_cast<double>(L), -alpha);
      CHECK(bound >= brute);
      CHECK(bound <= 4.0 * brute);  // and it is not vacuously loose
    }
  }
}

TEST_CASE("conditional pairing decays like l^-2 at alpha = 1") {
  // pairs 1/(4l+1) - 1/(4l+3): positive, decreasing, slope -2 on a log grid
  auto pair = [](double l) {
    return 1.0 / (4.0 * l + 1.0) - 1.0 / (4.0 * l + 3.0);
  };
  CHECK(pair(100) > 0);
  CHECK(pair(100) > pair(101));
  double slope = std::log(pair(10000) / pair(100)) / std::log(100.0);
  CHECK(std::fabs(slope + 2.0) < 0.05);
}

TEST_CASE("A_q values from the closed geometric form") {
  // sin, q=4: (16/15) * sum of (sqrt2/2)^a over a in {1,3,5,7}, ceiling
  double s = 0;
  for (int a : {1, 3, 5, 7}) s += std::pow(std::sqrt(2.0) / 2.0, a);
  double exact = s * 16.0 / 15.0;
  CHECK(exact == doctest::Approx(1.4142).epsilon(1e-3));
  CHECK(compute_Aq(SeriesKind::Sin, 1, 4) == 2);
  CHECK(compute_Aq(SeriesKind::Cos, 1, 4) == 2);
  // finite for odd q too (no unit residues at all)
  CHECK(compute_Aq(SeriesKind::Sin, 1, 3) >= 1);
  // closed-form bound dominates the enumerated value on powers of two
  for (long m : {2, 3, 4, 6, 8}) {
    mpz_class q = mpz_class(1) << m;
    mpz_class exact_a = compute_Aq(SeriesKind::Sin, 1, q);
    CHECK(aq_upper_bound_pow2(q) >= exact_a);
  }
}

TEST_CASE("rate certificate at q = 4") {
  auto cert = rate_certificate(SeriesKind::Sin, 1, 4, mpq_class(1), 1000);
  CHECK(cert.valid);
  CHECK(cert.a_q == 2);
  double expect_lower = std::log(1000.0) / 4.0 - 2.0;  // about -0.273
  CHECK(cert.lower_bound.mid_double() ==
        doctest::Approx(expect_lower).epsilon(1e-9));
  CHECK(cert.observed.mid_double() > 1.0);
  CHECK_THROWS_AS(rate_certificate(SeriesKind::Sin, 1, 6, mpq_class(1), 1000),
                  DomainError);
}

TEST_CASE("tail bounds shrink into each other as the cutoff doubles") {
  // enclosure of the full sum from cutoff N contains the one from 2N
  for (std::uint64_t n : {2000ull, 8000ull}) {
    PrecisionBudget b = PrecisionBudget::for_index_range(2 * n);
    auto s1 = partial_sum(SeriesKind::Cos, AngleForm::rational(1, 3),
                          mpq_class(1), n, b);
    auto s2 = partial_sum(SeriesKind::Cos, AngleForm::rational(1, 3),
                          mpq_class(1), 2 * n, b);
    Ball a1 = s1.value;
    a1.add_error_double(convergent_tail_bound(SeriesKind::Cos, 1, 3,
                                              mpq_class(1), n));
    Ball a2 = s2.value;
    a2.add_error_double(convergent_tail_bound(SeriesKind::Cos, 1, 3,
                                              mpq_class(1), 2 * n));
    CHECK(a2.inside(a1));
  }
}

TEST_CASE("polylog: ln 2 at z = 1/2, leading term at tiny z") {
  Ball v = polylog_sum(mpq_class(1, 2), mpq_class(1), 1e-12);
  double ln2 = mpfr_const([](mpfr_ptr t) { mpfr_log_ui(t, 2, MPFR_RNDN); });
  CHECK(std::fabs(v.mid_double() - ln2) < 1e-12);
  // z = 1e-8, alpha = 0.3: the first term dominates
  Ball w = polylog_sum(mpq_class(1, 100000000), mpq_class(3, 10), 1e-20);
  CHECK(std::fabs(w.mid_double() / 1e-8 - 1.0) < 1e-7);
}

TEST_CASE("polylog against the asymptotic near z = 1") {
  // z = 0.9999, alpha = 1/2: the ratio sits within 1% of 1
  mpq_class z(9999, 10000);
  Ball sum = polylog_sum(z, mpq_class(1, 2), 1e-8);
  Ball asym = gelfond_asymptotic(z, mpq_class(1, 2));
  CHECK(asym.mid_double() == doctest::Approx(177.2).epsilon(2e-3));
  CHECK(std::fabs(sum.mid_double() / asym.mid_double() - 1.0) < 0.01);
}

TEST_CASE("ratio sweep toward z = 1 at alpha = 3/4") {
  double prev = 0;
  for (mpq_class z : {mpq_class(9, 10), mpq_class(99, 100),
                      mpq_class(999, 1000)}) {
    Ball asym = gelfond_asymptotic(z, mpq_class(3, 4));
    Ball sum = polylog_sum(z, mpq_class(3, 4), 1e-6 * asym.mid_double());
    double ratio = sum.mid_double() / asym.mid_double();
    CHECK(ratio < 1.0);
    CHECK(ratio > prev);  // approaches 1 from below as z increases
    prev = ratio;
  }
}

TEST_CASE("asymptotic factors at plain points") {
  // ln(1/z) = 1 within 1e-16 at this rational z; gamma(1) = 1
  mpq_class z = parse_decimal_rational("0.36787944117144233");
  Ball g = gelfond_asymptotic(z, mpq_class(0));
  CHECK(std::fabs(g.mid_double() - 1.0) < 1e-12);
  // z = 0.999, alpha = 1/2: sqrt(pi) * (ln 1/z)^(-1/2) = 56.03...
  Ball h = gelfond_asymptotic(mpq_class(999, 1000), mpq_class(1, 2));
  CHECK(h.mid_double() == doctest::Approx(56.0345).epsilon(1e-4));
  // against the sum: deviation is zeta(1/2)-sized, a bit under 3%
  Ball s = polylog_sum(mpq_class(999, 1000), mpq_class(1, 2), 1e-8);
  CHECK(std::fabs(s.mid_double() / h.mid_double() - 1.0) < 0.03);
}

TEST_SUITE_END();
