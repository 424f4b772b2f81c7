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
#include <set>

#include "trigpow/angle.hpp"
#include "trigpow/shells.hpp"

using namespace trigpow;

TEST_SUITE_BEGIN("shells");

namespace {

PrecisionBudget budget_for(std::uint64_t n) {
  return PrecisionBudget::for_index_range(n);
}

// brute-force membership scan at 200 bits, independent of the scan engine
std::vector<std::uint64_t> brute_members(double (*value_of)(std::uint64_t),
                                         int s, std::uint64_t n_max) {
  std::vector<std::uint64_t> out;
  double lo = 1.0 - std::ldexp(1.0, -s);
  double hi = 1.0 - std::ldexp(1.0, -(s + 1));
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    double v = value_of(n);
    if (v >= lo && v < hi) out.push_back(n);
  }
  return out;
}

double abs_cos_sqrt2(std::uint64_t n) {
  mpfr_t x, s;
  mpfr_init2(x, 200);
  mpfr_init2(s, 200);
  mpfr_sqrt_ui(x, 2, MPFR_RNDN);
  mpfr_mul_ui(x, x, static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_const_pi(s, MPFR_RNDN);
  mpfr_mul(x, x, s, MPFR_RNDN);
  mpfr_cos(x, x, MPFR_RNDN);
  mpfr_abs(x, x, MPFR_RNDN);
  double v = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  mpfr_clear(s);
  return v;
}

double abs_cos_golden(std::uint64_t n) {
  mpfr_t x, s;
  mpfr_init2(x, 200);
  mpfr_init2(s, 200);
  mpfr_sqrt_ui(x, 5, MPFR_RNDN);
  mpfr_add_ui(x, x, 1, MPFR_RNDN);
  mpfr_div_2ui(x, x, 1, MPFR_RNDN);
  mpfr_mul_ui(x, x, static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_const_pi(s, MPFR_RNDN);
  mpfr_mul(x, x, s, MPFR_RNDN);
  mpfr_cos(x, x, MPFR_RNDN);
  mpfr_abs(x, x, MPFR_RNDN);
  double v = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  mpfr_clear(s);
  return v;
}

}  // namespace

TEST_CASE("shell 0 of the golden ratio has density 2 asin(1/2)/pi = 1/3") {
  auto rec = enumerate_shell(AngleForm::named(NamedConstant::GoldenRatio),
                             SeriesKind::Cos, 0, mpq_class(1), 10000,
                             budget_for(10000));
  double density = static_cast<double>(rec.count) / 10000.0;
  CHECK(std::fabs(density - 1.0 / 3.0) < 0.05 / 3.0);
  // equidistribution oracle: direct enumeration
  auto brute = brute_members(&abs_cos_golden, 0, 10000);
  CHECK(brute.size() == rec.count);
  CHECK(std::equal(brute.begin(), brute.end(), rec.members.begin()));
}

TEST_CASE("sparse shell of sqrt(2) matches a brute-force scan") {
  auto rec = enumerate_shell(AngleForm::named(NamedConstant::Sqrt2),
                             SeriesKind::Cos, 8, mpq_class(1), 100000,
                             budget_for(100000));
  auto brute = brute_members(&abs_cos_sqrt2, 8, 100000);
  REQUIRE(rec.count == brute.size());
  CHECK(rec.members == brute);
  CHECK(rec.first_member == brute.front());
  for (std::size_t i = 1; i < rec.members.size(); ++i)
    CHECK(rec.members[i] > rec.members[i - 1]);
  CHECK(rec.min_gap >= 1);
}

TEST_CASE("rational angles are rejected") {
  CHECK_THROWS_AS(enumerate_shell(AngleForm::rational(1, 3), SeriesKind::Cos,
                                  2, mpq_class(1), 1000, budget_for(1000)),
                  DomainError);
}

TEST_CASE("shells partition every index and rebuild the absolute sum") {
  const std::uint64_t n_max = 10000;
  const int s_max = 40;
  mpq_class alpha(3, 4);
  AngleForm theta = AngleForm::named(NamedConstant::GoldenRatio);
  auto scan = shell_scan(theta, SeriesKind::Cos, {alpha}, s_max, n_max,
                         budget_for(n_max), false);
  std::uint64_t total = scan.beyond_count;
  for (const auto& rec : scan.shells) total += rec.count;
  CHECK(total == n_max);
  CHECK(scan.beyond_count == 0);  // s_max = 40 is deep enough here

  // completeness: sum of shell sums equals the absolute partial sum
  Ball whole(budget_for(n_max).bits());
  for (const auto& s : scan.sums[0]) whole += s;
  Ball direct(budget_for(n_max).bits());
  PrecisionBudget b = budget_for(n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    Ball mag = term_magnitude(n, theta, SeriesKind::Cos, b);
    direct += mag / pow_rational_of_ui(n, alpha, b.bits());
  }
  CHECK(whole.overlaps(direct));
  CHECK(std::fabs(whole.mid_double() - direct.mid_double()) < 1e-9);
}

TEST_CASE("gap-exponent fit for the golden ratio sits near -1/2") {
  auto fit = fit_gap_exponent(AngleForm::named(NamedConstant::GoldenRatio),
                              SeriesKind::Cos, 4, 10, 1000000,
                              budget_for(1000000));
  CHECK(fit.fitted_exponent > -0.65);
  CHECK(fit.fitted_exponent < -0.35);
  CHECK(fit.mu_used == 2.0);
  CHECK(fit.mu_defaulted);
  CHECK(fit.nu_expected == doctest::Approx(0.5));
}

TEST_CASE("fit requires enough populated shells") {
  CHECK_THROWS_AS(fit_gap_exponent(AngleForm::named(NamedConstant::Sqrt2),
                                   SeriesKind::Cos, 18, 20, 2000,
                                   budget_for(2000)),
                  DomainError);
}

TEST_CASE("arccos(1 - eps) < 2 sqrt(eps) across (0, 1)") {
  for (int k = 1; k <= 1000; ++k) {
    mpq_class eps(k, 1001);
    Ball lhs = acos_enc(Ball::from_rational(1 - eps, 128));
    Ball rhs = sqrt_enc(Ball::from_rational(eps, 128)).mul_ui(2);
    CHECK(lhs.hi_double() < rhs.lo_double());
  }
}

TEST_CASE("shell tail bounds flag truncation only when they matter") {
  auto scan =
      shell_scan(AngleForm::named(NamedConstant::GoldenRatio), SeriesKind::Cos,
                 {mpq_class(1)}, 12, 1000000, budget_for(1000000), false);
  for (const auto& rec : scan.shells) {
    CHECK_FALSE(rec.truncated);  // N = 1e6 exhausts shells up to s = 12
    CHECK(rec.tail_bound <= budget_for(1000000).target_radius);
  }
}

TEST_SUITE_END();
