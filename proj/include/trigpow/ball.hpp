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

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>

namespace trigpow {

// Precision of the radius word. The radius only needs a couple of correct
// leading bits; it is always rounded up.
inline constexpr mpfr_prec_t kRadiusPrec = 32;

// Decimal digits -> mantissa bits, rounded up with a small cushion.
mpfr_prec_t digits_to_bits(int decimal_digits);

// Midpoint-radius enclosure of a real number: the true value lies in
// [mid - rad, mid + rad]. Every operation rounds the enclosure outward, so
// arithmetic never loses containment. The midpoint precision is per-value;
// binary operations produce results at the wider of the two precisions.
class Ball {
 public:
  explicit Ball(mpfr_prec_t prec = 64);
  Ball(const Ball& other);
  Ball(Ball&& other) noexcept;
  Ball& operator=(const Ball& other);
  Ball& operator=(Ball&& other) noexcept;
  ~Ball();

  static Ball zero(mpfr_prec_t prec);
  static Ball from_si(long v, mpfr_prec_t prec);
  static Ball from_ui(unsigned long v, mpfr_prec_t prec);
  static Ball from_double(double v, mpfr_prec_t prec);
  static Ball from_mpz(const mpz_class& v, mpfr_prec_t prec);
  static Ball from_rational(const mpq_class& v, mpfr_prec_t prec);
  static Ball from_rational_interval(const mpq_class& lo, const mpq_class& hi,
                                     mpfr_prec_t prec);
  // Enclosure of the interval [lo, hi] (endpoints in any mpfr precision).
  static Ball from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec);
  // Exact point at the argument's own precision.
  static Ball point(mpfr_srcptr m);

  mpfr_prec_t precision() const { return mpfr_get_prec(mid_); }
  mpfr_srcptr mid() const { return mid_; }
  mpfr_srcptr rad() const { return rad_; }

  bool exact() const { return mpfr_zero_p(rad_); }
  bool contains_zero() const;
  bool contains(const mpq_class& v) const;
  // Certified sign tests (false when the enclosure straddles zero).
  bool is_positive() const;
  bool is_negative() const;

  // Lower/upper endpoint, rounded outward into `out`.
  void lo(mpfr_ptr out) const;
  void hi(mpfr_ptr out) const;
  double mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
  double rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }
  double lo_double() const;
  double hi_double() const;

  std::string mid_string(int digits) const;
  std::string rad_string() const;
  std::string to_string(int digits = 20) const;

  Ball operator-() const;
  Ball& operator+=(const Ball& b);
  Ball& operator-=(const Ball& b);

  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  friend Ball operator/(const Ball& a, const Ball& b);

  Ball mul_ui(unsigned long v) const;
  Ball div_ui(unsigned long v) const;
  Ball mul_q(const mpq_class& v) const;
  Ball add_q(const mpq_class& v) const;

  // Inflates the radius by `extra` (an absolute error bound, rounded up).
  void add_error(mpfr_srcptr extra);
  void add_error_2exp(long e);  // radius += 2^e
  void add_error_double(double extra);

  // True if this enclosure lies inside [other.lo, other.hi].
  bool inside(const Ball& other) const;
  // True if the two enclosures overlap.
  bool overlaps(const Ball& other) const;

 private:
  friend Ball add_impl(const Ball&, const Ball&, int sign);
  void bump_ulp(int ternary);
  mpfr_t mid_;
  mpfr_t rad_;
};

// --- enclosures of elementary functions -----------------------------------

Ball abs_enc(const Ball& x);
Ball sqrt_enc(const Ball& x);   // domain clamped to [0, inf)
Ball exp_enc(const Ball& x);
Ball log_enc(const Ball& x);    // requires a certified positive enclosure
Ball pow_ui_enc(const Ball& base, unsigned long n);  // base clamped to >= 0
Ball asin_enc(const Ball& x);   // domain clamped to [-1, 1]
Ball acos_enc(const Ball& x);
Ball gamma_enc(const Ball& x);    // x inside (0, 1.46]: monotone branch
Ball digamma_enc(const Ball& x);  // x > 0

// sin(pi*d) for a distance d in [0, 1/2]; the enclosure is clamped to [0, 1].
Ball sin_pi_dist(const Ball& d);

Ball pi_enc(mpfr_prec_t prec);
Ball log_ui_enc(unsigned long v, mpfr_prec_t prec);

// k^alpha for integer k >= 1 and rational alpha in (0, 1]; exact square-root
// chains for denominators 1, 2 and 4, exp(alpha*log k) otherwise.
Ball pow_rational_of_ui(std::uint64_t k, const mpq_class& alpha,
                        mpfr_prec_t prec);

// x reduced into [0,1) / [0,2). The returned midpoint is the reduced
// representative; the radius is preserved (the enclosure is to be read
// modulo the period when it straddles a period boundary).
Ball frac_mod1(const Ball& x);
Ball frac_mod2(const Ball& x);

// Distance to the nearest integer, in [0, 1/2].
Ball dist_to_nearest_int(const Ball& x);

}  // namespace trigpow
