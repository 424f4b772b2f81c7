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

#include "trigpow/ball.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "trigpow/errors.hpp"

namespace trigpow {

namespace {

// RAII scratch register.
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

mpfr_prec_t join_prec(const Ball& a, const Ball& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

mpfr_prec_t digits_to_bits(int decimal_digits) {
  if (decimal_digits < 2) decimal_digits = 2;
  return static_cast<mpfr_prec_t>(decimal_digits * 3.3219280948873623 + 8.0);
}

Ball::Ball(mpfr_prec_t prec) {
  mpfr_init2(mid_, prec);
  mpfr_set_zero(mid_, 1);
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& other) {
  mpfr_init2(mid_, other.precision());
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& other) noexcept {
  mid_[0] = other.mid_[0];
  rad_[0] = other.rad_[0];
  // leave the source in a destructible state
  mpfr_init2(other.mid_, MPFR_PREC_MIN);
  mpfr_init2(other.rad_, MPFR_PREC_MIN);
}

Ball& Ball::operator=(const Ball& other) {
  if (this != &other) {
    mpfr_set_prec(mid_, other.precision());
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
  }
  return *this;
}

Ball& Ball::operator=(Ball&& other) noexcept {
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
  return *this;
}

Ball::~Ball() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

Ball Ball::zero(mpfr_prec_t prec) { return Ball(prec); }

Ball Ball::from_si(long v, mpfr_prec_t prec) {
  Ball r(prec);
  int t = mpfr_set_si(r.mid_, v, MPFR_RNDN);
  r.bump_ulp(t);
  return r;
}

Ball Ball::from_ui(unsigned long v, mpfr_prec_t prec) {
  Ball r(prec);
  int t = mpfr_set_ui(r.mid_, v, MPFR_RNDN);
  r.bump_ulp(t);
  return r;
}

Ball Ball::from_double(double v, mpfr_prec_t prec) {
  Ball r(prec);
  int t = mpfr_set_d(r.mid_, v, MPFR_RNDN);
  r.bump_ulp(t);
  return r;
}

Ball Ball::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
  Ball r(prec);
  int t = mpfr_set_z(r.mid_, v.get_mpz_t(), MPFR_RNDN);
  r.bump_ulp(t);
  return r;
}

Ball Ball::from_rational(const mpq_class& v, mpfr_prec_t prec) {
  Ball r(prec);
  int t = mpfr_set_q(r.mid_, v.get_mpq_t(), MPFR_RNDN);
  r.bump_ulp(t);
  return r;
}

Ball Ball::from_rational_interval(const mpq_class& lo, const mpq_class& hi,
                                  mpfr_prec_t prec) {
  Scratch l(prec + 8), h(prec + 8);
  mpfr_set_q(l, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(h, hi.get_mpq_t(), MPFR_RNDU);
  return from_endpoints(l, h, prec);
}

Ball Ball::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec) {
  Ball r(prec);
  mpfr_add(r.mid_, lo, hi, MPFR_RNDN);
  mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
  Scratch d(kRadiusPrec);
  mpfr_sub(d, hi, r.mid_, MPFR_RNDU);
  if (mpfr_sgn(d.get()) > 0) mpfr_set(r.rad_, d.get(), MPFR_RNDU);
  mpfr_sub(d, r.mid_, lo, MPFR_RNDU);
  if (mpfr_cmp(d, r.rad_) > 0) mpfr_set(r.rad_, d.get(), MPFR_RNDU);
  return r;
}

Ball Ball::point(mpfr_srcptr m) {
  Ball r(mpfr_get_prec(m));
  mpfr_set(r.mid_, m, MPFR_RNDN);
  return r;
}

void Ball::bump_ulp(int ternary) {
  if (ternary == 0 || mpfr_zero_p(mid_)) return;
  // One ulp of the midpoint dominates the rounding error of a
  // round-to-nearest operation.
  Scratch u(kRadiusPrec);
  mpfr_set_ui_2exp(u, 1, mpfr_get_exp(mid_) - precision(), MPFR_RNDU);
  mpfr_add(rad_, rad_, u, MPFR_RNDU);
}

bool Ball::contains_zero() const {
  return mpfr_cmpabs(mid_, rad_) <= 0;
}

bool Ball::contains(const mpq_class& v) const {
  Scratch t(precision() + 8);
  mpfr_set_q(t, v.get_mpq_t(), MPFR_RNDD);
  mpfr_sub(t, mid_, t, MPFR_RNDA);  // away from zero: overestimates |mid - v|
  return mpfr_cmpabs(t, rad_) <= 0;
}

bool Ball::is_positive() const {
  return mpfr_sgn(mid_) > 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

bool Ball::is_negative() const {
  return mpfr_sgn(mid_) < 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

void Ball::lo(mpfr_ptr out) const { mpfr_sub(out, mid_, rad_, MPFR_RNDD); }
void Ball::hi(mpfr_ptr out) const { mpfr_add(out, mid_, rad_, MPFR_RNDU); }

double Ball::lo_double() const {
  Scratch t(precision());
  lo(t);
  return mpfr_get_d(t, MPFR_RNDD);
}

double Ball::hi_double() const {
  Scratch t(precision());
  hi(t);
  return mpfr_get_d(t, MPFR_RNDU);
}

std::string Ball::mid_string(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, mid_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string Ball::rad_string() const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.3Rg", rad_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string Ball::to_string(int digits) const {
  return mid_string(digits) + " +/- " + rad_string();
}

Ball Ball::operator-() const {
  Ball r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

Ball add_impl(const Ball& a, const Ball& b, int sign) {
  Ball r(join_prec(a, b));
  int t = sign > 0 ? mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN)
                   : mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  r.bump_ulp(t);
  return r;
}

Ball operator+(const Ball& a, const Ball& b) { return add_impl(a, b, +1); }
Ball operator-(const Ball& a, const Ball& b) { return add_impl(a, b, -1); }

Ball& Ball::operator+=(const Ball& b) {
  int t = mpfr_add(mid_, mid_, b.mid_, MPFR_RNDN);
  mpfr_add(rad_, rad_, b.rad_, MPFR_RNDU);
  bump_ulp(t);
  return *this;
}

Ball& Ball::operator-=(const Ball& b) {
  int t = mpfr_sub(mid_, mid_, b.mid_, MPFR_RNDN);
  mpfr_add(rad_, rad_, b.rad_, MPFR_RNDU);
  bump_ulp(t);
  return *this;
}

Ball operator*(const Ball& a, const Ball& b) {
  Ball r(join_prec(a, b));
  int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  // rad = |a.mid|*b.rad + |b.mid|*a.rad + a.rad*b.rad, rounded up
  Scratch am(kRadiusPrec), bm(kRadiusPrec), term(kRadiusPrec);
  mpfr_abs(am, a.mid_, MPFR_RNDU);
  mpfr_abs(bm, b.mid_, MPFR_RNDU);
  mpfr_mul(term, am, b.rad_, MPFR_RNDU);
  mpfr_set(r.rad_, term.get(), MPFR_RNDU);
  mpfr_mul(term, bm, a.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, term, MPFR_RNDU);
  mpfr_mul(term, a.rad_, b.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, term, MPFR_RNDU);
  r.bump_ulp(t);
  return r;
}

Ball operator/(const Ball& a, const Ball& b) {
  // denominator must be certainly nonzero
  Scratch bl(kRadiusPrec);
  mpfr_abs(bl, b.mid_, MPFR_RNDD);
  mpfr_sub(bl, bl, b.rad_, MPFR_RNDD);
  if (mpfr_sgn(bl.get()) <= 0) {
    throw PrecisionError("division by an enclosure containing zero");
  }
  Ball r(join_prec(a, b));
  int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  // |x/y - a.m/b.m| <= (a.rad*|b.m| + |a.m|*b.rad) / (|b.m| * (|b.m|-b.rad))
  Scratch num(kRadiusPrec), term(kRadiusPrec), den(kRadiusPrec);
  mpfr_abs(num, b.mid_, MPFR_RNDU);
  mpfr_mul(num, num, a.rad_, MPFR_RNDU);
  mpfr_abs(term, a.mid_, MPFR_RNDU);
  mpfr_mul(term, term, b.rad_, MPFR_RNDU);
  mpfr_add(num, num, term, MPFR_RNDU);
  mpfr_abs(den, b.mid_, MPFR_RNDD);
  mpfr_mul(den, den, bl, MPFR_RNDD);
  mpfr_div(r.rad_, num, den, MPFR_RNDU);
  r.bump_ulp(t);
  return r;
}

Ball Ball::mul_ui(unsigned long v) const {
  Ball r(precision());
  int t = mpfr_mul_ui(r.mid_, mid_, v, MPFR_RNDN);
  mpfr_mul_ui(r.rad_, rad_, v, MPFR_RNDU);
  r.bump_ulp(t);
  return r;
}

Ball Ball::div_ui(unsigned long v) const {
  if (v == 0) throw DomainError("division_by_zero", "div_ui by zero");
  Ball r(precision());
  int t = mpfr_div_ui(r.mid_, mid_, v, MPFR_RNDN);
  mpfr_div_ui(r.rad_, rad_, v, MPFR_RNDU);
  // radius division rounds up already; the quotient rounding needs a bump
  r.bump_ulp(t);
  // rad/v rounded up may still under-estimate by < 1 ulp of rad; widen one step
  mpfr_nextabove(r.rad_);
  return r;
}

Ball Ball::mul_q(const mpq_class& v) const {
  return *this * Ball::from_rational(v, precision());
}

Ball Ball::add_q(const mpq_class& v) const {
  return *this + Ball::from_rational(v, precision());
}

void Ball::add_error(mpfr_srcptr extra) {
  mpfr_add(rad_, rad_, extra, MPFR_RNDU);
}

void Ball::add_error_2exp(long e) {
  Scratch u(kRadiusPrec);
  mpfr_set_ui_2exp(u, 1, e, MPFR_RNDU);
  mpfr_add(rad_, rad_, u, MPFR_RNDU);
}

void Ball::add_error_double(double extra) {
  Scratch u(kRadiusPrec);
  mpfr_set_d(u, extra, MPFR_RNDU);
  mpfr_add(rad_, rad_, u, MPFR_RNDU);
}

bool Ball::inside(const Ball& other) const {
  mpfr_prec_t p = std::max(precision(), other.precision()) + 8;
  Scratch a(p), b(p);
  lo(a);
  other.lo(b);
  if (mpfr_cmp(a, b) < 0) return false;
  hi(a);
  other.hi(b);
  return mpfr_cmp(a, b) <= 0;
}

bool Ball::overlaps(const Ball& other) const {
  mpfr_prec_t p = std::max(precision(), other.precision()) + 8;
  Scratch a(p), b(p);
  lo(a);
  other.hi(b);
  if (mpfr_cmp(a, b) > 0) return false;
  hi(a);
  other.lo(b);
  return mpfr_cmp(a, b) >= 0;
}

// --- elementary enclosures --------------------------------------------------

Ball abs_enc(const Ball& x) {
  if (!x.contains_zero()) {
    Ball r(x);
    if (mpfr_sgn(x.mid()) < 0) r = -r;
    return r;
  }
  // interval [max(0,|m|-r) .. |m|+r] collapsed against zero
  mpfr_prec_t p = x.precision();
  Scratch hi(p + 8), zero(p);
  x.hi(hi);
  mpfr_abs(hi, hi, MPFR_RNDU);
  Scratch lo2(p + 8);
  x.lo(lo2);
  mpfr_abs(lo2, lo2, MPFR_RNDU);
  if (mpfr_cmp(lo2, hi) > 0) mpfr_set(hi, lo2.get(), MPFR_RNDU);
  mpfr_set_zero(zero, 1);
  return Ball::from_endpoints(zero, hi, p);
}

namespace {

// Monotone-increasing function enclosure via directed endpoint evaluation.
template <typename F>
Ball monotone_inc(const Ball& x, mpfr_prec_t p, F&& f) {
  Scratch lo(p + 8), hi(p + 8), flo(p + 8), fhi(p + 8);
  x.lo(lo);
  x.hi(hi);
  f(flo.get(), lo.get(), MPFR_RNDD);
  f(fhi.get(), hi.get(), MPFR_RNDU);
  return Ball::from_endpoints(flo, fhi, p);
}

}  // namespace

Ball sqrt_enc(const Ball& x) {
  mpfr_prec_t p = x.precision();
  Scratch lo(p + 8), hi(p + 8), flo(p + 8), fhi(p + 8);
  x.lo(lo);
  x.hi(hi);
  if (mpfr_sgn(hi.get()) < 0)
    throw DomainError("negative_sqrt", "sqrt of a negative enclosure");
  if (mpfr_sgn(lo.get()) < 0) mpfr_set_zero(lo, 1);
  mpfr_sqrt(flo, lo, MPFR_RNDD);
  mpfr_sqrt(fhi, hi, MPFR_RNDU);
  return Ball::from_endpoints(flo, fhi, p);
}

Ball exp_enc(const Ball& x) {
  return monotone_inc(x, x.precision(),
                      [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) {
                        mpfr_exp(r, a, rnd);
                      });
}

Ball log_enc(const Ball& x) {
  if (!x.is_positive())
    throw PrecisionError("log of an enclosure not certified positive");
  return monotone_inc(x, x.precision(),
                      [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) {
                        mpfr_log(r, a, rnd);
                      });
}

Ball pow_ui_enc(const Ball& base, unsigned long n) {
  mpfr_prec_t p = base.precision();
  if (n == 0) return Ball::from_ui(1, p);
  Scratch lo(p + 8), hi(p + 8), flo(p + 8), fhi(p + 8);
  base.lo(lo);
  base.hi(hi);
  if (mpfr_sgn(lo.get()) < 0) mpfr_set_zero(lo, 1);
  if (mpfr_sgn(hi.get()) < 0) mpfr_set_zero(hi, 1);
  mpfr_pow_ui(flo, lo, n, MPFR_RNDD);
  mpfr_pow_ui(fhi, hi, n, MPFR_RNDU);
  return Ball::from_endpoints(flo, fhi, p);
}

Ball asin_enc(const Ball& x) {
  mpfr_prec_t p = x.precision();
  Scratch lo(p + 8), hi(p + 8), flo(p + 8), fhi(p + 8);
  x.lo(lo);
  x.hi(hi);
  if (mpfr_cmp_si(lo.get(), -1) < 0) mpfr_set_si(lo, -1, MPFR_RNDZ);
  if (mpfr_cmp_si(hi.get(), 1) > 0) mpfr_set_si(hi, 1, MPFR_RNDZ);
  mpfr_asin(flo, lo, MPFR_RNDD);
  mpfr_asin(fhi, hi, MPFR_RNDU);
  return Ball::from_endpoints(flo, fhi, p);
}

Ball acos_enc(const Ball& x) {
  mpfr_prec_t p = x.precision();
  Scratch lo(p + 8), hi(p + 8), flo(p + 8), fhi(p + 8);
  x.lo(lo);
  x.hi(hi);
  if (mpfr_cmp_si(lo.get(), -1) < 0) mpfr_set_si(lo, -1, MPFR_RNDZ);
  if (mpfr_cmp_si(hi.get(), 1) > 0) mpfr_set_si(hi, 1, MPFR_RNDZ);
  // decreasing
  mpfr_acos(flo, hi, MPFR_RNDD);
  mpfr_acos(fhi, lo, MPFR_RNDU);
  return Ball::from_endpoints(flo, fhi, p);
}

Ball gamma_enc(const Ball& x) {
  mpfr_prec_t p = x.precision();
  Scratch lo(p + 8), hi(p + 8), flo(p + 8), fhi(p + 8);
  x.lo(lo);
  x.hi(hi);
  if (mpfr_sgn(lo.get()) <= 0)
    throw DomainError("gamma_domain", "gamma requires a positive enclosure");
  // Gamma is decreasing on (0, 1.4616...]; that is the only branch we need.
  if (mpfr_cmp_d(hi.get(), 1.4616) > 0)
    throw DomainError("gamma_domain",
                      "gamma enclosure only implemented on (0, 1.4616]");
  mpfr_gamma(flo, hi, MPFR_RNDD);
  mpfr_gamma(fhi, lo, MPFR_RNDU);
  return Ball::from_endpoints(flo, fhi, p);
}

Ball digamma_enc(const Ball& x) {
  if (!x.is_positive())
    throw DomainError("digamma_domain", "digamma requires x > 0");
  return monotone_inc(x, x.precision(),
                      [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) {
                        mpfr_digamma(r, a, rnd);
                      });
}

Ball sin_pi_dist(const Ball& d) {
  mpfr_prec_t p = d.precision();
  Scratch lo(p + 8), hi(p + 8);
  d.lo(lo);
  d.hi(hi);
  if (mpfr_sgn(lo.get()) < 0) mpfr_set_zero(lo, 1);
  Scratch half(p);
  mpfr_set_d(half, 0.5, MPFR_RNDN);
  if (mpfr_cmp(hi, half) > 0) mpfr_set(hi, half.get(), MPFR_RNDN);

  Scratch pi_lo(p + 8), pi_hi(p + 8);
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);

  Scratch xlo(p + 8), xhi(p + 8), slo(p + 8), shi(p + 8);
  mpfr_mul(xlo, lo, pi_lo, MPFR_RNDD);
  mpfr_mul(xhi, hi, pi_hi, MPFR_RNDU);

  mpfr_sin(slo, xlo, MPFR_RNDD);  // xlo <= pi/2: increasing branch
  if (mpfr_sgn(slo.get()) < 0) mpfr_set_zero(slo, 1);

  Scratch pi_half(p + 8);
  mpfr_div_2ui(pi_half, pi_lo, 1, MPFR_RNDD);
  if (mpfr_cmp(xhi, pi_half) >= 0) {
    // the argument interval may reach pi/2, where sin attains 1
    mpfr_set_ui(shi, 1, MPFR_RNDN);
  } else {
    mpfr_sin(shi, xhi, MPFR_RNDU);
    if (mpfr_cmp_ui(shi.get(), 1) > 0) mpfr_set_ui(shi, 1, MPFR_RNDN);
  }
  return Ball::from_endpoints(slo, shi, p);
}

Ball pi_enc(mpfr_prec_t prec) {
  Scratch lo(prec + 8), hi(prec + 8);
  mpfr_const_pi(lo, MPFR_RNDD);
  mpfr_const_pi(hi, MPFR_RNDU);
  return Ball::from_endpoints(lo, hi, prec);
}

Ball log_ui_enc(unsigned long v, mpfr_prec_t prec) {
  Scratch x(prec + 8), lo(prec + 8), hi(prec + 8);
  mpfr_set_ui(x, v, MPFR_RNDN);
  mpfr_log(lo, x, MPFR_RNDD);
  mpfr_log(hi, x, MPFR_RNDU);
  return Ball::from_endpoints(lo, hi, prec);
}

Ball pow_rational_of_ui(std::uint64_t k, const mpq_class& alpha,
                        mpfr_prec_t prec) {
  if (k == 0) throw DomainError("pow_domain", "k^alpha requires k >= 1");
  if (alpha == 0) return Ball::from_ui(1, prec);
  if (alpha < 0) {
    return Ball::from_ui(1, prec) / pow_rational_of_ui(k, -alpha, prec);
  }
  if (alpha == 1) return Ball::from_mpz(mpz_class(static_cast<unsigned long>(k)), prec);
  const mpz_class& num = alpha.get_num();
  const mpz_class& den = alpha.get_den();
  if (num.fits_ulong_p() && (den == 1 || den == 2 || den == 4)) {
    mpz_class kz(static_cast<unsigned long>(k));
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), kz.get_mpz_t(), num.get_ui());
    Ball b = Ball::from_mpz(t, prec);
    if (den >= 2) b = sqrt_enc(b);
    if (den == 4) b = sqrt_enc(b);
    return b;
  }
  Ball lk = log_ui_enc(static_cast<unsigned long>(k), prec);
  return exp_enc(lk.mul_q(alpha));
}

Ball frac_mod1(const Ball& x) {
  mpfr_prec_t p = x.precision();
  Ball r(x);
  Scratch fl(p);
  mpfr_floor(fl, x.mid());
  Ball shifted = x - Ball::point(fl);
  // representative wrap: keep midpoint inside [0,1)
  if (mpfr_sgn(shifted.mid()) < 0) shifted = shifted.add_q(mpq_class(1));
  if (mpfr_cmp_ui(shifted.mid(), 1) >= 0) shifted = shifted.add_q(mpq_class(-1));
  return shifted;
}

Ball frac_mod2(const Ball& x) {
  mpfr_prec_t p = x.precision();
  Scratch h(p + 8), fl(p + 8);
  mpfr_div_2ui(h, x.mid(), 1, MPFR_RNDN);
  mpfr_floor(fl, h);
  mpfr_mul_2ui(fl, fl, 1, MPFR_RNDN);  // exact
  Ball shifted = x - Ball::point(fl);
  if (mpfr_sgn(shifted.mid()) < 0) shifted = shifted.add_q(mpq_class(2));
  if (mpfr_cmp_ui(shifted.mid(), 2) >= 0) shifted = shifted.add_q(mpq_class(-2));
  return shifted;
}

Ball dist_to_nearest_int(const Ball& x) {
  mpfr_prec_t p = x.precision();
  // a wide ball covers the full range of the distance function
  if (mpfr_cmp_d(x.rad(), 0.5) >= 0) {
    Ball r(p);
    Scratch q(p);
    mpfr_set_d(q, 0.25, MPFR_RNDN);
    r = Ball::from_rational_interval(mpq_class(0), mpq_class(1, 2), p);
    return r;
  }
  // recentre around the nearest integer of the midpoint
  Scratch n(p + 8);
  mpfr_round(n, x.mid());
  Ball m = x - Ball::point(n);  // m in (-1, 1), |m.mid| <= 1/2
  Scratch a(p + 8), b(p + 8);
  m.lo(a);
  m.hi(b);
  // f(t) = min(|t|, 1 - |t|) on [a, b] subset (-1, 1)
  auto eval_f = [&](mpfr_srcptr t, mpfr_ptr out, mpfr_rnd_t rnd) {
    mpfr_abs(out, t, rnd);
    if (mpfr_cmp_d(out, 0.5) > 0) mpfr_ui_sub(out, 1, out, rnd);
  };
  Scratch flo(p + 8), fhi(p + 8), tmp(p + 8);
  bool contains0 = mpfr_sgn(a.get()) <= 0 && mpfr_sgn(b.get()) >= 0;
  if (contains0) {
    mpfr_set_zero(flo, 1);
  } else {
    eval_f(a, flo, MPFR_RNDD);
    eval_f(b, tmp, MPFR_RNDD);
    if (mpfr_cmp(tmp, flo) < 0) mpfr_set(flo, tmp.get(), MPFR_RNDD);
  }
  // max: attained at +-1/2 if inside, else at an endpoint
  bool peak = (mpfr_cmp_d(a.get(), 0.5) <= 0 && mpfr_cmp_d(b.get(), 0.5) >= 0) ||
              (mpfr_cmp_d(a.get(), -0.5) <= 0 && mpfr_cmp_d(b.get(), -0.5) >= 0);
  if (peak) {
    mpfr_set_d(fhi, 0.5, MPFR_RNDN);
  } else {
    eval_f(a, fhi, MPFR_RNDU);
    eval_f(b, tmp, MPFR_RNDU);
    if (mpfr_cmp(tmp, fhi) > 0) mpfr_set(fhi, tmp.get(), MPFR_RNDU);
  }
  if (mpfr_cmp_d(fhi.get(), 0.5) > 0) mpfr_set_d(fhi, 0.5, MPFR_RNDN);
  if (mpfr_sgn(flo.get()) < 0) mpfr_set_zero(flo, 1);
  return Ball::from_endpoints(flo, fhi, p);
}

}  // namespace trigpow
