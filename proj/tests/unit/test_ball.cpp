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

#include "trigpow/ball.hpp"
#include "trigpow/errors.hpp"
#include "trigpow/rng.hpp"

using namespace trigpow;

TEST_SUITE_BEGIN("ball");

namespace {

bool ball_contains_double(const Ball& b, double v) {
  return b.lo_double() <= v && v <= b.hi_double();
}

}  // namespace

TEST_CASE("exact constructors carry zero radius") {
  Ball a = Ball::from_si(-7, 64);
  CHECK(a.exact());
  CHECK(a.mid_double() == -7.0);
  Ball h = Ball::from_rational(mpq_class(1, 2), 64);
  CHECK(h.exact());  // dyadic rationals are representable
  Ball third = Ball::from_rational(mpq_class(1, 3), 64);
  CHECK(!third.exact());
  CHECK(third.contains(mpq_class(1, 3)));
}

TEST_CASE("arithmetic encloses the true value under random fuzz") {
  SplitMix64 rng(20260808);
  for (int i = 0; i < 500; ++i) {
    double x = rng.next_unit() * 20.0 - 10.0;
    double y = rng.next_unit() * 20.0 - 10.0;
    Ball bx = Ball::from_double(x, 96);
    Ball by = Ball::from_double(y, 96);
    CHECK(ball_contains_double(bx + by, x + y));
    CHECK(ball_contains_double(bx - by, x - y));
    CHECK(ball_contains_double(bx * by, x * y));
    if (std::fabs(y) > 1e-3) CHECK(ball_contains_double(bx / by, x / y));
  }
}

TEST_CASE("division by an enclosure containing zero is rejected") {
  Ball num = Ball::from_ui(1, 64);
  Ball den = Ball::from_double(1e-30, 64);
  den.add_error_double(1.0);  // straddles zero now
  CHECK_THROWS_AS(num / den, PrecisionError);
}

TEST_CASE("monotone function enclosures contain reference values") {
  SplitMix64 rng(7);
  for (int i = 0; i < 200; ++i) {
    double x = rng.next_unit() * 3.0 + 0.01;
    Ball b = Ball::from_double(x, 96);
    CHECK(std::fabs(exp_enc(b).mid_double() - std::exp(x)) <
          1e-13 * std::exp(x));
    CHECK(std::fabs(log_enc(b).mid_double() - std::log(x)) < 1e-13);
    CHECK(ball_contains_double(sqrt_enc(b), std::sqrt(x)));
  }
}

TEST_CASE("sin_pi_dist matches sin(pi d) and clamps to [0,1]") {
  SplitMix64 rng(99);
  for (int i = 0; i < 300; ++i) {
    double d = rng.next_unit() * 0.5;
    Ball b = Ball::from_double(d, 96);
    Ball s = sin_pi_dist(b);
    // the double-precision reference itself carries ~1e-16 error
    CHECK(std::fabs(s.mid_double() - std::sin(M_PI * d)) <
          1e-13 + s.rad_double());
    CHECK(s.lo_double() >= -1e-30);
    CHECK(s.hi_double() <= 1.0 + 1e-30);
  }
  // the peak: an interval around 1/2 must reach 1
  Ball near_half = Ball::from_double(0.5, 96);
  near_half.add_error_double(1e-10);
  CHECK(sin_pi_dist(near_half).hi_double() == 1.0);
}

TEST_CASE("dist_to_nearest_int handles wraps and stays in [0,1/2]") {
  SplitMix64 rng(3);
  for (int i = 0; i < 500; ++i) {
    double x = rng.next_unit() * 200.0 - 100.0;
    Ball b = Ball::from_double(x, 96);
    double d = std::fabs(x - std::nearbyint(x));
    Ball db = dist_to_nearest_int(b);
    CHECK(ball_contains_double(db, d));
    CHECK(db.lo_double() >= -1e-30);
    CHECK(db.hi_double() <= 0.5 + 1e-30);
  }
  // straddling an integer forces the lower endpoint to zero
  Ball cross = Ball::from_double(3.0, 96);
  cross.add_error_double(0.25);
  CHECK(dist_to_nearest_int(cross).lo_double() == 0.0);
}

TEST_CASE("pow_ui_enc tracks huge powers without underflow") {
  Ball b = Ball::from_rational(mpq_class(9, 10), 128);
  Ball p = pow_ui_enc(b, 1000000);
  // 0.9^1e6 = 10^(-45757.49...): representable in mpfr, sane enclosure
  CHECK(p.hi_double() < 1e-300);  // far below double range
  CHECK(mpfr_sgn(p.mid()) >= 0);
  Ball small = pow_ui_enc(Ball::from_rational(mpq_class(1, 2), 64), 10);
  CHECK(small.contains(mpq_class(1, 1024)));
}

TEST_CASE("k^alpha via square-root chains agrees with pow") {
  mpq_class three_quarters(3, 4);
  Ball a = pow_rational_of_ui(12345, three_quarters, 128);
  double expect = std::pow(12345.0, 0.75);
  CHECK(ball_contains_double(a, expect));
  mpq_class neg(-1, 2);
  Ball b = pow_rational_of_ui(100, neg, 128);
  CHECK(ball_contains_double(b, 0.1));
}

TEST_CASE("gamma and digamma enclosures at rational points") {
  // gamma(1/2) = sqrt(pi)
  Ball g = gamma_enc(Ball::from_rational(mpq_class(1, 2), 128));
  CHECK(ball_contains_double(g, std::sqrt(M_PI)));
  CHECK(g.rad_double() < 1e-25);
  // digamma(3/4) - digamma(1/4) = pi  (reflection at 1/4)
  Ball d = digamma_enc(Ball::from_rational(mpq_class(3, 4), 128)) -
           digamma_enc(Ball::from_rational(mpq_class(1, 4), 128));
  CHECK(ball_contains_double(d, M_PI));
  CHECK(d.rad_double() < 1e-25);
}

TEST_CASE("enclosure ordering helpers") {
  Ball wide = Ball::from_double(1.0, 64);
  wide.add_error_double(0.5);
  Ball narrow = Ball::from_double(1.1, 64);
  narrow.add_error_double(0.01);
  CHECK(narrow.inside(wide));
  CHECK(!wide.inside(narrow));
  CHECK(wide.overlaps(narrow));
}

TEST_SUITE_END();
