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

#include "trigpow/wallis.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "trigpow/rng.hpp"

namespace trigpow {

namespace {

constexpr double kLn2 = 0.6931471805599453;

class Scratch {
 public:
  explicit Scratch(mpfr_prec_t prec) { mpfr_init2(x_, prec); }
  ~Scratch() { mpfr_clear(x_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  operator mpfr_ptr() { return x_; }
  operator mpfr_srcptr() const { return x_; }
  mpfr_ptr get() { return x_; }

 private:
  mpfr_t x_;
};

}  // namespace

void WallisExactTable::advance() {
  // r_{n+1} = r_{n-1} * n / (n+1)
  mpq_class next = r_prev_ * mpq_class(n_, n_ + 1);
  r_prev_ = r_cur_;
  r_cur_ = next;
  ++n_;
}

WallisValue wallis(std::uint64_t n, mpfr_prec_t prec) {
  WallisExactTable t;
  WallisValue v;
  v.n = n;
  if (n == 0) {
    v.coeff = mpq_class(1, 2);
    v.pi_power = 1;
    v.value = pi_enc(prec).div_ui(2);
    return v;
  }
  while (t.n() < n) t.advance();
  v.coeff = t.coeff();
  v.pi_power = n % 2 == 0 ? 1 : 0;
  if (n % 2 == 0) {
    v.value = pi_enc(prec).mul_q(v.coeff);
  } else {
    v.value = Ball::from_rational(v.coeff, prec);
  }
  return v;
}

WallisBallTable::WallisBallTable(mpfr_prec_t prec)
    : n_(1), prev_(pi_enc(prec).div_ui(2)), cur_(Ball::from_ui(1, prec)) {}

void WallisBallTable::advance() {
  // I_{n+1} = n/(n+1) * I_{n-1}
  Ball next = prev_.mul_ui(static_cast<unsigned long>(n_))
                  .div_ui(static_cast<unsigned long>(n_ + 1));
  prev_ = cur_;
  cur_ = next;
  ++n_;
}

Ball expected_abs_sum(const mpq_class& alpha, std::uint64_t n_max,
                      mpfr_prec_t prec) {
  if (alpha <= 0 || alpha > 1)
    throw DomainError("bad_alpha", "alpha must lie in (0, 1]");
  if (n_max < 1) throw DomainError("invalid_n", "N must be >= 1");
  WallisBallTable t(prec);
  Ball pi = pi_enc(prec);
  Ball acc(prec);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (t.n() != n) t.advance();
    Ball term = t.current().mul_ui(2) /
                (pi * pow_rational_of_ui(n, alpha, prec));
    acc += term;
  }
  return acc;
}

MonteCarloReport mc_estimate(const mpq_class& alpha, std::uint64_t n_max,
                             int samples, std::uint64_t seed) {
  if (alpha <= 0 || alpha > 1)
    throw DomainError("bad_alpha", "alpha must lie in (0, 1]");
  if (n_max < 1) throw DomainError("invalid_n", "N must be >= 1");
  if (samples < 30)
    throw DomainError("too_few_samples", "need at least 30 samples");

  MonteCarloReport rep;
  rep.alpha = alpha;
  rep.n = n_max;
  rep.samples = samples;
  rep.seed = seed;
  int digits = 1;
  {
    std::uint64_t v = n_max;
    while (v >= 10) {
      v /= 10;
      ++digits;
    }
  }
  rep.theta_digits = digits + 20;

  const mpfr_prec_t prec = 96;
  // guard bits for the certified small-term skip
  int g = 80;
  SplitMix64 rng(seed);
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 10, static_cast<unsigned long>(rep.theta_digits));
  mpz_class q2 = 2 * denom;  // theta = (2X+1) / (2*10^D), exact midpoint

  std::vector<double> values;
  values.reserve(samples);
  Scratch tmp(prec);
  for (int i = 0; i < samples; ++i) {
    mpz_class x = rng.next_decimal(rep.theta_digits);
    mpz_class p = 2 * x + 1;
    Ball acc(prec);
    std::uint64_t skipped = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      // m = n*p mod 2*10^D; || n theta || = min(m, q2 - m) / q2
      mpz_class m = mpz_class(static_cast<unsigned long>(n)) * p;
      mpz_fdiv_r(m.get_mpz_t(), m.get_mpz_t(), q2.get_mpz_t());
      mpz_class mm = std::min(m, mpz_class(q2 - m));
      mpq_class d(mm, q2);
      double dd = mpq_class(d).get_d();
      double u = 0.5 - dd - 1e-12;
      if (u > 0 &&
          static_cast<double>(n) * 9.8696044 * u * u * 0.5 * 0.98 > g * kLn2) {
        ++skipped;
        continue;
      }
      d.canonicalize();
      Ball mag = pow_ui_enc(sin_pi_dist(Ball::from_rational(d, prec)),
                            static_cast<unsigned long>(n));
      acc += mag / pow_rational_of_ui(n, alpha, prec);
    }
    if (skipped) {
      Scratch sc(64);
      mpfr_set_ui(sc, static_cast<unsigned long>(skipped), MPFR_RNDU);
      mpfr_mul_2si(sc, sc, -g, MPFR_RNDU);
      acc.add_error(sc);
    }
    values.push_back(acc.mid_double());
  }

  double mean = 0;
  for (double v : values) mean += v;
  mean /= samples;
  double var = 0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= (samples - 1);
  rep.sample_mean = mean;
  rep.sample_stddev = std::sqrt(var);
  rep.standard_error = rep.sample_stddev / std::sqrt(static_cast<double>(samples));
  rep.expected = expected_abs_sum(alpha, n_max, prec).mid_double();
  rep.z_score = rep.standard_error > 0
                    ? (mean - rep.expected) / rep.standard_error
                    : std::numeric_limits<double>::infinity();
  return rep;
}

}  // namespace trigpow
