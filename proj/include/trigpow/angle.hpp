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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigpow/ball.hpp"
#include "trigpow/errors.hpp"

namespace trigpow {

enum class SeriesKind { Sin, Cos };

std::string to_string(SeriesKind k);
SeriesKind series_kind_from_string(std::string_view s);

enum class NamedConstant { Sqrt2, GoldenRatio, E, PiReciprocal };

std::string to_string(NamedConstant c);

// Working precision policy. working_digits decimal digits are carried through
// every midpoint; target_radius is the radius the caller wants on results.
// frac(n*theta) loses about log10(n) digits to the multiplication, so budgets
// for an index range N add ceil(log10 N) digits up front.
struct PrecisionBudget {
  int working_digits = 30;      // >= 10
  double target_radius = 1e-12;

  mpfr_prec_t bits() const { return digits_to_bits(working_digits); }
  static PrecisionBudget for_index_range(std::uint64_t n_max,
                                         int output_digits = 12);
};

// How an angle enters the system: an exact rational p/q, a truncated decimal
// with a stated precision (the value is only known to lie in an interval of
// width 10^-precision), a prefix of a continued-fraction expansion, or a
// named constant materialized on demand.
class AngleForm {
 public:
  enum class Form { Rational, Decimal, ContinuedFraction, Named };

  static AngleForm rational(const mpz_class& p, const mpz_class& q);
  static AngleForm decimal(const std::string& digits, int stated_precision);
  static AngleForm continued_fraction(const mpz_class& integer_part,
                                      std::vector<mpz_class> quotients);
  static AngleForm named(NamedConstant c);

  // Shared CLI grammar: "p/q", "0.4142~40", "cf:[1;2,2,2]", "const:sqrt2".
  static AngleForm parse(std::string_view text);

  Form form() const { return form_; }
  bool exact_rational() const { return form_ == Form::Rational; }

  const mpq_class& rational_value() const;     // Rational only
  int decimal_stated_precision() const;        // Decimal only
  NamedConstant named_constant() const;        // Named only
  const mpz_class& cf_integer_part() const;    // ContinuedFraction only
  const std::vector<mpz_class>& cf_quotients() const;

  // Exact rational interval certainly containing the value. Available for
  // every form except Named (whose enclosure is produced at any precision).
  void exact_interval(mpq_class& lo, mpq_class& hi) const;

  // Enclosure of the value at the given midpoint precision.
  Ball enclosure(mpfr_prec_t prec) const;

  std::string to_string() const;

 private:
  AngleForm() = default;
  Form form_ = Form::Rational;
  mpq_class rational_;                 // Rational
  mpq_class decimal_value_;            // Decimal: the printed digits, exactly
  int stated_precision_ = 0;           // Decimal
  mpz_class cf_a0_;                    // ContinuedFraction
  std::vector<mpz_class> cf_quotients_;
  NamedConstant named_ = NamedConstant::Sqrt2;
  std::string original_text_;
};

// The reduced data of n*theta: fractional parts and the two distances that
// control |sin(pi n theta)| = sin(pi*dist_to_int) and
// |cos(pi n theta)| = sin(pi*dist_to_half).
struct ReducedAngle {
  Ball frac_part;     // n*theta mod 1, in [0,1)
  Ball frac_mod2;     // n*theta mod 2, in [0,2); carries the sign information
  Ball dist_to_int;   // ||n*theta||, in [0,1/2]
  Ball dist_to_half;  // ||n*theta - 1/2||, in [0,1/2]
  bool exact = false;

  // Exact values for rational theta (denominators divide q resp. 2q).
  std::optional<mpq_class> frac_part_q;
  std::optional<mpq_class> frac_mod2_q;
  std::optional<mpq_class> dist_to_int_q;
  std::optional<mpq_class> dist_to_half_q;
};

ReducedAngle reduce_angle(std::uint64_t n, const AngleForm& theta,
                          const PrecisionBudget& budget);

// |sin(pi n theta)|^n or |cos(pi n theta)|^n as an enclosure. Exactly 0 when
// the relevant distance is exactly 0, exactly 1 when it is exactly 1/2.
Ball term_magnitude(std::uint64_t n, const AngleForm& theta, SeriesKind kind,
                    const PrecisionBudget& budget);

// f(pi n theta)^n / n^alpha with sign, f = sin or cos. When the sign cannot
// be certified (enclosure of n*theta mod 2 touching a sign change, where the
// magnitude is near zero) the result covers both signs.
Ball signed_term(std::uint64_t n, const AngleForm& theta, SeriesKind kind,
                 const mpq_class& alpha, const PrecisionBudget& budget);

// Streaming reducer: prepares theta once and hands out per-index reductions
// without reparsing or rematerializing. This is what the scan loops use.
class AngleReducer {
 public:
  AngleReducer(const AngleForm& theta, std::uint64_t n_max,
               const PrecisionBudget& budget);
  ~AngleReducer();
  AngleReducer(const AngleReducer&) = delete;
  AngleReducer& operator=(const AngleReducer&) = delete;

  bool exact() const { return exact_; }
  mpfr_prec_t precision() const { return prec_; }

  ReducedAngle reduce(std::uint64_t n) const;

  // Fast path: writes certified endpoints of the requested distance for
  // index n into lo/hi (both at precision() bits).
  void dist_to_int(std::uint64_t n, mpfr_ptr lo, mpfr_ptr hi) const;
  void dist_to_half(std::uint64_t n, mpfr_ptr lo, mpfr_ptr hi) const;

  // Certified sign of f(pi n theta): -1, 0, +1, or unknown (nullopt).
  std::optional<int> base_sign(std::uint64_t n, SeriesKind kind) const;

 private:
  void interval_reduce(std::uint64_t n, int half_shift, mpfr_ptr lo,
                       mpfr_ptr hi) const;
  Ball theta_ball() const;

  bool exact_ = false;
  mpfr_prec_t prec_ = 0;
  // rational path
  mpz_class p_, q_, two_q_;
  // interval path: theta endpoints at prec_
  mpfr_t th_lo_;
  mpfr_t th_hi_;
  bool mpfr_init_done_ = false;
  std::uint64_t n_max_ = 0;
};

// Parses a decimal literal ("0.6", "1", ".25") into an exact rational.
mpq_class parse_decimal_rational(std::string_view text);

}  // namespace trigpow
