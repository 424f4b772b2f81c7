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

#include "trigpow/angle.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace trigpow {

namespace {

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

int ceil_log2_u64(std::uint64_t n) {
  int b = 0;
  std::uint64_t v = 1;
  while (v < n) {
    v <<= 1;
    ++b;
    if (b >= 63) break;
  }
  return b;
}

mpq_class mpq_from_double_exact(double d) {
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), d);
  return q;
}

// min(|t|, 1-|t|) for t in (-1,1), exact in rational arithmetic
mpq_class dist_point_q(const mpq_class& t) {
  mpq_class at = abs(t);
  mpq_class other = 1 - at;
  return at <= other ? at : other;
}

// distance-to-nearest-integer range over the exact interval [a, b]
void dist_interval_q(const mpq_class& a, const mpq_class& b, mpq_class& dlo,
                     mpq_class& dhi) {
  if (b - a >= 1) {
    dlo = 0;
    dhi = mpq_class(1, 2);
    return;
  }
  mpq_class mid = (a + b) / 2;
  mpq_class shifted = mid + mpq_class(1, 2);
  mpz_class m;
  mpz_fdiv_q(m.get_mpz_t(), shifted.get_num().get_mpz_t(),
             shifted.get_den().get_mpz_t());
  mpq_class aa = a - m;
  mpq_class bb = b - m;
  const mpq_class half(1, 2);
  if (aa <= 0 && bb >= 0) {
    dlo = 0;
  } else {
    dlo = std::min(dist_point_q(aa), dist_point_q(bb));
  }
  bool peak = (aa <= half && bb >= half) || (aa <= -half && bb >= -half);
  dhi = peak ? half : std::max(dist_point_q(aa), dist_point_q(bb));
}

mpq_class pow10_q(int e) {
  mpz_class t;
  mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(e)));
  return e >= 0 ? mpq_class(t) : mpq_class(1) / mpq_class(t);
}

}  // namespace

std::string to_string(SeriesKind k) {
  return k == SeriesKind::Sin ? "sin" : "cos";
}

SeriesKind series_kind_from_string(std::string_view s) {
  if (s == "sin") return SeriesKind::Sin;
  if (s == "cos") return SeriesKind::Cos;
  throw DomainError("bad_kind", "series kind must be 'sin' or 'cos'");
}

std::string to_string(NamedConstant c) {
  switch (c) {
    case NamedConstant::Sqrt2: return "sqrt2";
    case NamedConstant::GoldenRatio: return "golden";
    case NamedConstant::E: return "e";
    case NamedConstant::PiReciprocal: return "pi_reciprocal";
  }
  return "?";
}

PrecisionBudget PrecisionBudget::for_index_range(std::uint64_t n_max,
                                                 int output_digits) {
  PrecisionBudget b;
  int idx_digits = 1;
  while (n_max >= 10) {
    n_max /= 10;
    ++idx_digits;
  }
  b.working_digits = std::max(10, idx_digits + output_digits + 10);
  b.target_radius = std::pow(10.0, -output_digits);
  return b;
}

mpq_class parse_decimal_rational(std::string_view text) {
  std::string s(text);
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  std::string int_part, frac_part;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
    int_part += s[i++];
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      frac_part += s[i++];
  }
  if (i != s.size() || (int_part.empty() && frac_part.empty()))
    throw DomainError("bad_number", "cannot parse decimal literal: " + s);
  mpz_class num(int_part.empty() ? "0" : int_part, 10);
  mpq_class v(num);
  if (!frac_part.empty()) {
    mpz_class f(frac_part, 10);
    v += mpq_class(f) / pow10_q(static_cast<int>(frac_part.size()));
  }
  if (neg) v = -v;
  return v;
}

// --- AngleForm ---------------------------------------------------------------

AngleForm AngleForm::rational(const mpz_class& p, const mpz_class& q) {
  if (q == 0) throw DomainError("zero_denominator", "angle p/q with q = 0");
  AngleForm a;
  a.form_ = Form::Rational;
  a.rational_ = mpq_class(p, q);
  a.rational_.canonicalize();
  return a;
}

AngleForm AngleForm::decimal(const std::string& digits, int stated_precision) {
  if (stated_precision < 1)
    throw DomainError("bad_precision", "stated decimal precision must be >= 1");
  AngleForm a;
  a.form_ = Form::Decimal;
  a.decimal_value_ = parse_decimal_rational(digits);
  a.stated_precision_ = stated_precision;
  a.original_text_ = digits + "~" + std::to_string(stated_precision);
  return a;
}

AngleForm AngleForm::continued_fraction(const mpz_class& integer_part,
                                        std::vector<mpz_class> quotients) {
  for (const auto& q : quotients)
    if (q < 1)
      throw DomainError("bad_cf", "partial quotients beyond index 0 must be >= 1");
  AngleForm a;
  a.form_ = Form::ContinuedFraction;
  a.cf_a0_ = integer_part;
  a.cf_quotients_ = std::move(quotients);
  return a;
}

AngleForm AngleForm::named(NamedConstant c) {
  AngleForm a;
  a.form_ = Form::Named;
  a.named_ = c;
  return a;
}

AngleForm AngleForm::parse(std::string_view text) {
  std::string s(text);
  if (s.rfind("const:", 0) == 0) {
    std::string name = s.substr(6);
    if (name == "sqrt2") return named(NamedConstant::Sqrt2);
    if (name == "golden") return named(NamedConstant::GoldenRatio);
    if (name == "e") return named(NamedConstant::E);
    if (name == "pi_reciprocal") return named(NamedConstant::PiReciprocal);
    throw DomainError("bad_constant", "unknown named constant: " + name);
  }
  if (s.rfind("cf:", 0) == 0) {
    std::string body = s.substr(3);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
      throw DomainError("bad_cf", "continued fraction must look like cf:[a0;a1,a2]");
    body = body.substr(1, body.size() - 2);
    auto semi = body.find(';');
    std::string head = semi == std::string::npos ? body : body.substr(0, semi);
    mpz_class a0(head, 10);
    std::vector<mpz_class> quotients;
    if (semi != std::string::npos) {
      std::string rest = body.substr(semi + 1);
      std::size_t pos = 0;
      while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        std::string tok = rest.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!tok.empty()) quotients.emplace_back(tok, 10);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    return continued_fraction(a0, std::move(quotients));
  }
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class p(s.substr(0, slash), 10);
    mpz_class q(s.substr(slash + 1), 10);
    return rational(p, q);
  }
  auto tilde = s.find('~');
  if (tilde != std::string::npos) {
    std::string digits = s.substr(0, tilde);
    // strip a presentational ellipsis, if any
    while (!digits.empty() && (digits.back() == '.' || digits.back() == ' ')) {
      if (digits.size() >= 3 && digits.substr(digits.size() - 3) == "...") {
        digits.erase(digits.size() - 3);
        break;
      }
      if (digits.back() == ' ')
        digits.pop_back();
      else
        break;
    }
    int prec = std::stoi(s.substr(tilde + 1));
    return decimal(digits, prec);
  }
  // bare decimal literal: exact rational
  mpq_class v = parse_decimal_rational(s);
  AngleForm a;
  a.form_ = Form::Rational;
  a.rational_ = v;
  return a;
}

const mpq_class& AngleForm::rational_value() const {
  if (form_ != Form::Rational)
    throw DomainError("bad_form", "angle is not an exact rational");
  return rational_;
}

int AngleForm::decimal_stated_precision() const {
  if (form_ != Form::Decimal)
    throw DomainError("bad_form", "angle is not a decimal");
  return stated_precision_;
}

NamedConstant AngleForm::named_constant() const {
  if (form_ != Form::Named) throw DomainError("bad_form", "angle is not named");
  return named_;
}

const mpz_class& AngleForm::cf_integer_part() const { return cf_a0_; }
const std::vector<mpz_class>& AngleForm::cf_quotients() const {
  return cf_quotients_;
}

void AngleForm::exact_interval(mpq_class& lo, mpq_class& hi) const {
  switch (form_) {
    case Form::Rational:
      lo = rational_;
      hi = rational_;
      return;
    case Form::Decimal: {
      lo = decimal_value_;
      hi = decimal_value_ + pow10_q(-stated_precision_);
      return;
    }
    case Form::ContinuedFraction: {
      // value lies between the last convergent and its mediant with the
      // previous one (any continuation has a tail > 1)
      mpz_class pk = cf_a0_, pk1 = 1;
      mpz_class qk = 1, qk1 = 0;
      for (const auto& a : cf_quotients_) {
        mpz_class pn = a * pk + pk1;
        mpz_class qn = a * qk + qk1;
        pk1 = pk;
        qk1 = qk;
        pk = pn;
        qk = qn;
      }
      mpq_class c1(pk, qk);
      c1.canonicalize();
      mpq_class c2(pk + pk1, qk + qk1);
      c2.canonicalize();
      lo = std::min(c1, c2);
      hi = std::max(c1, c2);
      return;
    }
    case Form::Named:
      throw DomainError("bad_form",
                        "named constants have no exact rational interval");
  }
}

Ball AngleForm::enclosure(mpfr_prec_t prec) const {
  if (form_ == Form::Named) {
    Scratch lo(prec + 8), hi(prec + 8), t(prec + 8);
    switch (named_) {
      case NamedConstant::Sqrt2:
        mpfr_sqrt_ui(lo, 2, MPFR_RNDD);
        mpfr_sqrt_ui(hi, 2, MPFR_RNDU);
        break;
      case NamedConstant::GoldenRatio:
        mpfr_sqrt_ui(lo, 5, MPFR_RNDD);
        mpfr_add_ui(lo, lo, 1, MPFR_RNDD);
        mpfr_div_2ui(lo, lo, 1, MPFR_RNDD);
        mpfr_sqrt_ui(hi, 5, MPFR_RNDU);
        mpfr_add_ui(hi, hi, 1, MPFR_RNDU);
        mpfr_div_2ui(hi, hi, 1, MPFR_RNDU);
        break;
      case NamedConstant::E:
        mpfr_set_ui(t, 1, MPFR_RNDN);
        mpfr_exp(lo, t, MPFR_RNDD);
        mpfr_exp(hi, t, MPFR_RNDU);
        break;
      case NamedConstant::PiReciprocal:
        mpfr_const_pi(t, MPFR_RNDU);
        mpfr_ui_div(lo, 1, t, MPFR_RNDD);
        mpfr_const_pi(t, MPFR_RNDD);
        mpfr_ui_div(hi, 1, t, MPFR_RNDU);
        break;
    }
    return Ball::from_endpoints(lo, hi, prec);
  }
  mpq_class lo, hi;
  exact_interval(lo, hi);
  return Ball::from_rational_interval(lo, hi, prec);
}

std::string AngleForm::to_string() const {
  switch (form_) {
    case Form::Rational:
      return rational_.get_num().get_str() + "/" + rational_.get_den().get_str();
    case Form::Decimal:
      return original_text_;
    case Form::ContinuedFraction: {
      std::string s = "cf:[" + cf_a0_.get_str();
      if (!cf_quotients_.empty()) {
        s += ";";
        for (std::size_t i = 0; i < cf_quotients_.size(); ++i) {
          if (i) s += ",";
          s += cf_quotients_[i].get_str();
        }
      }
      return s + "]";
    }
    case Form::Named:
      return "const:" + trigpow::to_string(named_);
  }
  return "?";
}

// --- AngleReducer ------------------------------------------------------------

AngleReducer::AngleReducer(const AngleForm& theta, std::uint64_t n_max,
                           const PrecisionBudget& budget)
    : n_max_(n_max) {
  if (budget.working_digits < 10)
    throw DomainError("bad_budget", "working_digits must be >= 10");
  if (theta.exact_rational()) {
    exact_ = true;
    prec_ = budget.bits();
    const mpq_class& v = theta.rational_value();
    q_ = v.get_den();
    two_q_ = 2 * q_;
    // normalize the numerator into [0, 2q)
    mpz_fdiv_r(p_.get_mpz_t(), v.get_num().get_mpz_t(), two_q_.get_mpz_t());
    return;
  }
  prec_ = budget.bits() + ceil_log2_u64(n_max ? n_max : 1) + 16;
  if (theta.form() == AngleForm::Form::Decimal) {
    // stated precision must support the whole index range
    mpq_class width = pow10_q(-theta.decimal_stated_precision());
    mpq_class budget_rad = mpq_from_double_exact(budget.target_radius);
    if (mpq_class(static_cast<unsigned long>(n_max)) * width > budget_rad)
      throw PrecisionError(
          "decimal angle is too coarse for the requested index range");
  }
  mpfr_init2(th_lo_, prec_);
  mpfr_init2(th_hi_, prec_);
  mpfr_init_done_ = true;
  if (theta.form() == AngleForm::Form::Named) {
    Ball enc = theta.enclosure(prec_);
    enc.lo(th_lo_);
    enc.hi(th_hi_);
  } else {
    mpq_class lo, hi;
    theta.exact_interval(lo, hi);
    if (theta.form() == AngleForm::Form::ContinuedFraction) {
      mpq_class budget_rad = mpq_from_double_exact(budget.target_radius);
      if (mpq_class(static_cast<unsigned long>(n_max)) * (hi - lo) > budget_rad)
        throw PrecisionError(
            "continued-fraction prefix is too coarse for the index range");
    }
    mpfr_set_q(th_lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(th_hi_, hi.get_mpq_t(), MPFR_RNDU);
  }
}

AngleReducer::~AngleReducer() {
  if (mpfr_init_done_) {
    mpfr_clear(th_lo_);
    mpfr_clear(th_hi_);
  }
}

namespace {

// distance range of the interval [a, b] (width < 1/2) to the integers;
// all subtractions are exact cancellations, so dlo/dhi are sharp.
void dist_core(mpfr_srcptr a, mpfr_srcptr b, mpfr_ptr dlo, mpfr_ptr dhi,
               mpfr_ptr t0, mpfr_ptr aa, mpfr_ptr bb) {
  mpfr_round(t0, a);
  mpfr_sub(aa, a, t0, MPFR_RNDD);
  mpfr_sub(bb, b, t0, MPFR_RNDU);
  auto f = [&](mpfr_srcptr t, mpfr_ptr out, mpfr_rnd_t rnd) {
    mpfr_abs(out, t, rnd);
    if (mpfr_cmp_d(out, 0.5) > 0) mpfr_ui_sub(out, 1, out, rnd);
  };
  bool contains0 = mpfr_sgn(aa) <= 0 && mpfr_sgn(bb) >= 0;
  if (contains0) {
    mpfr_set_zero(dlo, 1);
  } else {
    f(aa, dlo, MPFR_RNDD);
    f(bb, t0, MPFR_RNDD);
    if (mpfr_cmp(t0, dlo) < 0) mpfr_set(dlo, t0, MPFR_RNDD);
  }
  bool peak = (mpfr_cmp_d(aa, 0.5) <= 0 && mpfr_cmp_d(bb, 0.5) >= 0) ||
              (mpfr_cmp_d(aa, -0.5) <= 0 && mpfr_cmp_d(bb, -0.5) >= 0);
  if (peak) {
    mpfr_set_d(dhi, 0.5, MPFR_RNDN);
  } else {
    f(aa, dhi, MPFR_RNDU);
    f(bb, t0, MPFR_RNDU);
    if (mpfr_cmp(t0, dhi) > 0) mpfr_set(dhi, t0, MPFR_RNDU);
  }
  if (mpfr_sgn(dlo) < 0) mpfr_set_zero(dlo, 1);
  if (mpfr_cmp_d(dhi, 0.5) > 0) mpfr_set_d(dhi, 0.5, MPFR_RNDN);
}

}  // namespace

void AngleReducer::interval_reduce(std::uint64_t n, int half_shift,
                                   mpfr_ptr lo, mpfr_ptr hi) const {
  if (exact_) {
    // exact modular arithmetic on n*p mod 2q
    mpz_class nn(static_cast<unsigned long>(n));
    mpz_class m = nn * p_;
    mpz_fdiv_r(m.get_mpz_t(), m.get_mpz_t(), two_q_.get_mpz_t());
    mpq_class d;
    if (half_shift == 0) {
      mpz_class m1;
      mpz_fdiv_r(m1.get_mpz_t(), m.get_mpz_t(), q_.get_mpz_t());
      mpz_class other = q_ - m1;
      d = mpq_class(std::min(m1, other), q_);
    } else {
      mpz_class u = 2 * m - q_;
      mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), two_q_.get_mpz_t());
      mpz_class other = two_q_ - u;
      d = mpq_class(std::min(u, other), two_q_);
    }
    d.canonicalize();
    mpfr_set_q(lo, d.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi, d.get_mpq_t(), MPFR_RNDU);
    return;
  }
  Scratch a(prec_), b(prec_), t0(prec_), t1(prec_), t2(prec_);
  mpfr_mul_ui(a, th_lo_, static_cast<unsigned long>(n), MPFR_RNDD);
  mpfr_mul_ui(b, th_hi_, static_cast<unsigned long>(n), MPFR_RNDU);
  if (half_shift) {
    mpfr_sub_d(a, a, 0.5, MPFR_RNDD);
    mpfr_sub_d(b, b, 0.5, MPFR_RNDU);
  }
  // if the enclosure of n*theta is wider than 1/2 the distance is vacuous
  mpfr_sub(t0, b, a, MPFR_RNDU);
  if (mpfr_cmp_d(t0.get(), 0.5) >= 0) {
    mpfr_set_zero(lo, 1);
    mpfr_set_d(hi, 0.5, MPFR_RNDN);
    return;
  }
  dist_core(a, b, lo, hi, t0, t1, t2);
}

void AngleReducer::dist_to_int(std::uint64_t n, mpfr_ptr lo,
                               mpfr_ptr hi) const {
  interval_reduce(n, 0, lo, hi);
}

void AngleReducer::dist_to_half(std::uint64_t n, mpfr_ptr lo,
                                mpfr_ptr hi) const {
  interval_reduce(n, 1, lo, hi);
}

std::optional<int> AngleReducer::base_sign(std::uint64_t n,
                                           SeriesKind kind) const {
  if (exact_) {
    mpz_class nn(static_cast<unsigned long>(n));
    mpz_class m = nn * p_;
    mpz_fdiv_r(m.get_mpz_t(), m.get_mpz_t(), two_q_.get_mpz_t());
    mpq_class f2(m, q_);  // in [0, 2)
    f2.canonicalize();
    if (kind == SeriesKind::Sin) {
      if (f2 == 0 || f2 == 1) return 0;
      return f2 < 1 ? +1 : -1;
    }
    mpq_class half(1, 2), three_half(3, 2);
    if (f2 == half || f2 == three_half) return 0;
    return (f2 < half || f2 > three_half) ? +1 : -1;
  }
  Scratch a(prec_), b(prec_);
  mpfr_mul_ui(a, th_lo_, static_cast<unsigned long>(n), MPFR_RNDD);
  mpfr_mul_ui(b, th_hi_, static_cast<unsigned long>(n), MPFR_RNDU);
  if (kind == SeriesKind::Cos) {
    mpfr_add_d(a, a, 0.5, MPFR_RNDD);
    mpfr_add_d(b, b, 0.5, MPFR_RNDU);
  }
  Scratch fa(prec_), fb(prec_);
  mpfr_floor(fa, a);
  mpfr_floor(fb, b);
  if (!mpfr_equal_p(fa, fb)) return std::nullopt;
  if (mpfr_equal_p(fa, a)) return std::nullopt;  // endpoint on a sign change
  mpz_class cell;
  mpfr_get_z(cell.get_mpz_t(), fa, MPFR_RNDN);
  return mpz_even_p(cell.get_mpz_t()) ? +1 : -1;
}

Ball AngleReducer::theta_ball() const {
  if (exact_) {
    mpq_class v(p_, q_);
    v.canonicalize();
    return Ball::from_rational(v, prec_);
  }
  return Ball::from_endpoints(th_lo_, th_hi_, prec_);
}

ReducedAngle AngleReducer::reduce(std::uint64_t n) const {
  ReducedAngle out;
  if (exact_) {
    mpz_class nn(static_cast<unsigned long>(n));
    mpz_class m2 = nn * p_;
    mpz_fdiv_r(m2.get_mpz_t(), m2.get_mpz_t(), two_q_.get_mpz_t());
    mpz_class m1;
    mpz_fdiv_r(m1.get_mpz_t(), m2.get_mpz_t(), q_.get_mpz_t());
    mpq_class frac2(m2, q_);
    frac2.canonicalize();
    mpq_class frac1(m1, q_);
    frac1.canonicalize();
    mpq_class dint(std::min(m1, mpz_class(q_ - m1)), q_);
    dint.canonicalize();
    mpz_class u = 2 * m1 - q_;
    mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), two_q_.get_mpz_t());
    mpq_class dhalf(std::min(u, mpz_class(two_q_ - u)), two_q_);
    dhalf.canonicalize();
    out.exact = true;
    out.frac_part_q = frac1;
    out.frac_mod2_q = frac2;
    out.dist_to_int_q = dint;
    out.dist_to_half_q = dhalf;
    out.frac_part = Ball::from_rational(frac1, prec_);
    out.frac_mod2 = Ball::from_rational(frac2, prec_);
    out.dist_to_int = Ball::from_rational(dint, prec_);
    out.dist_to_half = Ball::from_rational(dhalf, prec_);
    return out;
  }
  Ball x = theta_ball().mul_ui(static_cast<unsigned long>(n));
  out.exact = false;
  out.frac_part = frac_mod1(x);
  out.frac_mod2 = frac_mod2(x);
  Scratch lo(prec_), hi(prec_);
  interval_reduce(n, 0, lo, hi);
  out.dist_to_int = Ball::from_endpoints(lo, hi, prec_);
  interval_reduce(n, 1, lo, hi);
  out.dist_to_half = Ball::from_endpoints(lo, hi, prec_);
  return out;
}

// --- public operations -------------------------------------------------------

ReducedAngle reduce_angle(std::uint64_t n, const AngleForm& theta,
                          const PrecisionBudget& budget) {
  if (n < 1) throw DomainError("invalid_n", "index n must be >= 1");
  if (theta.form() == AngleForm::Form::Decimal ||
      theta.form() == AngleForm::Form::ContinuedFraction) {
    // exact big-rational interval arithmetic
    AngleReducer guard(theta, n, budget);  // validates the precision budget
    mpq_class lo, hi;
    theta.exact_interval(lo, hi);
    mpq_class a = lo * mpq_class(static_cast<unsigned long>(n));
    mpq_class b = hi * mpq_class(static_cast<unsigned long>(n));
    mpfr_prec_t prec = guard.precision();
    ReducedAngle out;
    out.exact = false;
    mpz_class fa;
    mpz_fdiv_q(fa.get_mpz_t(), a.get_num().get_mpz_t(),
               a.get_den().get_mpz_t());
    mpq_class f1a = a - fa;
    mpq_class f1b = f1a + (b - a);
    out.frac_part = Ball::from_rational_interval(f1a, f1b, prec);
    if (mpfr_cmp_ui(out.frac_part.mid(), 1) >= 0)
      out.frac_part = out.frac_part.add_q(mpq_class(-1));
    mpz_class ga;
    mpq_class ha = a / 2;
    mpz_fdiv_q(ga.get_mpz_t(), ha.get_num().get_mpz_t(),
               ha.get_den().get_mpz_t());
    mpq_class f2a = a - 2 * mpq_class(ga);
    mpq_class f2b = f2a + (b - a);
    out.frac_mod2 = Ball::from_rational_interval(f2a, f2b, prec);
    if (mpfr_cmp_ui(out.frac_mod2.mid(), 2) >= 0)
      out.frac_mod2 = out.frac_mod2.add_q(mpq_class(-2));
    mpq_class dlo, dhi;
    dist_interval_q(a, b, dlo, dhi);
    out.dist_to_int = Ball::from_rational_interval(dlo, dhi, prec);
    dist_interval_q(a - mpq_class(1, 2), b - mpq_class(1, 2), dlo, dhi);
    out.dist_to_half = Ball::from_rational_interval(dlo, dhi, prec);
    return out;
  }
  AngleReducer red(theta, n, budget);
  return red.reduce(n);
}

namespace {

// escalation ladder for named constants whose enclosure straddles the
// unit-magnitude point (irrational values never sit exactly on it)
constexpr int kEscalationSteps = 4;

Ball magnitude_from_reduction(std::uint64_t n, const ReducedAngle& ra,
                              SeriesKind kind, bool* straddles_unit) {
  *straddles_unit = false;
  const mpq_class half(1, 2);
  if (ra.exact) {
    const mpq_class& d = kind == SeriesKind::Sin ? *ra.dist_to_int_q
                                                 : *ra.dist_to_half_q;
    mpfr_prec_t p = ra.dist_to_int.precision();
    if (d == 0) return Ball::zero(p);
    if (d == half) return Ball::from_ui(1, p);
    return pow_ui_enc(sin_pi_dist(Ball::from_rational(d, p)), n);
  }
  const Ball& d = kind == SeriesKind::Sin ? ra.dist_to_int : ra.dist_to_half;
  if (d.contains(half) && !d.exact()) {
    *straddles_unit = true;
    return Ball::zero(d.precision());
  }
  return pow_ui_enc(sin_pi_dist(d), n);
}

}  // namespace

Ball term_magnitude(std::uint64_t n, const AngleForm& theta, SeriesKind kind,
                    const PrecisionBudget& budget) {
  if (n < 1) throw DomainError("invalid_n", "index n must be >= 1");
  PrecisionBudget b = budget;
  bool can_escalate = theta.form() == AngleForm::Form::Named;
  for (int step = 0;; ++step) {
    ReducedAngle ra = reduce_angle(n, theta, b);
    bool straddles = false;
    Ball mag = magnitude_from_reduction(n, ra, kind, &straddles);
    if (!straddles) return mag;
    if (!can_escalate || step >= kEscalationSteps)
      throw PrecisionError(
          "distance enclosure straddles the unit-magnitude point at index " +
          std::to_string(n));
    b.working_digits *= 2;
  }
}

Ball signed_term(std::uint64_t n, const AngleForm& theta, SeriesKind kind,
                 const mpq_class& alpha, const PrecisionBudget& budget) {
  if (alpha <= 0 || alpha > 1)
    throw DomainError("bad_alpha", "alpha must lie in (0, 1]");
  Ball mag = term_magnitude(n, theta, kind, budget);
  if (mag.exact() && mpfr_zero_p(mag.mid())) return mag;
  AngleReducer red(theta, n, budget);
  std::optional<int> s = red.base_sign(n, kind);
  Ball denom = pow_rational_of_ui(n, alpha, mag.precision());
  if (!s.has_value()) {
    // sign not certified: cover both signs
    mpfr_prec_t p = mag.precision();
    Scratch hi(p + 8), lo(p + 8);
    mag.hi(hi);
    mpfr_neg(lo, hi, MPFR_RNDD);
    return Ball::from_endpoints(lo, hi, p) / denom;
  }
  int term_sign = (*s < 0 && (n % 2 == 1)) ? -1 : +1;
  if (*s == 0) return Ball::zero(mag.precision());
  Ball res = mag / denom;
  return term_sign < 0 ? -res : res;
}

}  // namespace trigpow
