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

#include "trigpow/classifier.hpp"

#include <algorithm>

namespace trigpow {

namespace {

struct Reduced {
  mpz_class p, q;
  bool was_reduced;
};

Reduced reduce_pair(const mpz_class& p, const mpz_class& q) {
  if (q == 0) throw DomainError("zero_denominator", "q must be nonzero");
  mpz_class pp = p, qq = q;
  if (qq < 0) {
    pp = -pp;
    qq = -qq;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), pp.get_mpz_t(), qq.get_mpz_t());
  bool red = g > 1;
  if (red) {
    pp /= g;
    qq /= g;
  }
  return {pp, qq, red};
}

// p normalized into [0, 2q)
mpz_class norm_mod(const mpz_class& p, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), p.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool is_even(const mpz_class& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

// closed form of sin/cos(pi*m/d) for reduced m/d, m in [0, 2d),
// d in {1,2,3,4,6}
std::optional<ExactBaseValue> standard_angle(SeriesKind kind,
                                             unsigned long m,
                                             unsigned long d) {
  using M = ExactBaseValue::Magnitude;
  auto v = [](M mag, int s) { return ExactBaseValue{mag, s}; };
  if (kind == SeriesKind::Sin) {
    switch (d) {
      case 1: return v(M::Zero, 0);
      case 2: return v(M::One, m == 1 ? +1 : -1);
      case 3: return v(M::Sqrt3Over2, m < 3 ? +1 : -1);
      case 4: return v(M::Sqrt2Over2, m < 4 ? +1 : -1);
      case 6: return v(M::Half, m < 6 ? +1 : -1);
      default: return std::nullopt;
    }
  }
  switch (d) {
    case 1: return v(M::One, m == 0 ? +1 : -1);
    case 2: return v(M::Zero, 0);
    case 3: return v(M::Half, (m == 1 || m == 5) ? +1 : -1);
    case 4: return v(M::Sqrt2Over2, (m == 1 || m == 7) ? +1 : -1);
    case 6: return v(M::Sqrt3Over2, (m == 1 || m == 11) ? +1 : -1);
    default: return std::nullopt;
  }
}

Ball exact_base_ball(const ExactBaseValue& e, mpfr_prec_t prec) {
  using M = ExactBaseValue::Magnitude;
  Ball mag(prec);
  switch (e.magnitude) {
    case M::Zero: mag = Ball::zero(prec); break;
    case M::Half: mag = Ball::from_rational(mpq_class(1, 2), prec); break;
    case M::One: mag = Ball::from_ui(1, prec); break;
    case M::Sqrt2Over2:
      mag = sqrt_enc(Ball::from_ui(2, prec)).div_ui(2);
      break;
    case M::Sqrt3Over2:
      mag = sqrt_enc(Ball::from_ui(3, prec)).div_ui(2);
      break;
  }
  return e.sign < 0 ? -mag : mag;
}

}  // namespace

std::string to_string(ConvergenceClass c) {
  switch (c) {
    case ConvergenceClass::DivergesToPlusInfinity:
      return "diverges_to_plus_infinity";
    case ConvergenceClass::ConvergesConditionally:
      return "converges_conditionally";
    case ConvergenceClass::ConvergesAbsolutely:
      return "converges_absolutely";
  }
  return "?";
}

std::optional<unsigned long> find_a0(SeriesKind kind, const mpz_class& p_in,
                                     const mpz_class& q_in) {
  Reduced r = reduce_pair(p_in, q_in);
  mpz_class two_q = 2 * r.q;
  if (kind == SeriesKind::Cos) {
    // a*p = q (mod 2q); solvable iff p is odd
    if (is_even(r.p)) return std::nullopt;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), r.p.get_mpz_t(), two_q.get_mpz_t()) == 0)
      return std::nullopt;
    mpz_class a0 = norm_mod(r.q * inv, two_q);
    if (a0 == 0) a0 = two_q;
    return a0.get_ui();
  }
  // sin
  if (!is_even(r.q)) return std::nullopt;
  mpz_class q1 = r.q / 2;
  if (!is_even(q1)) {
    // q = 2*q1 with q1 odd: a*p = q1 (mod 4*q1)
    mpz_class mod = 4 * q1;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), r.p.get_mpz_t(), mod.get_mpz_t());
    mpz_class a0 = norm_mod(q1 * inv, mod);
    if (a0 == 0) a0 = mod;
    return a0.get_ui();
  }
  // q = 4*q1: a*p = 2*q1 (mod 4*q1), solution lies in [1, q)
  mpz_class q41 = r.q / 2;          // 2*q1
  mpz_class mod = r.q;              // 4*q1
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), r.p.get_mpz_t(), mod.get_mpz_t());
  mpz_class a0 = norm_mod(q41 * inv, mod);
  if (a0 == 0) a0 = mod;
  return a0.get_ui();
}

std::vector<ResidueBase> residue_bases(SeriesKind kind, const mpz_class& p_in,
                                       const mpz_class& q_in,
                                       mpfr_prec_t prec) {
  Reduced r = reduce_pair(p_in, q_in);
  mpz_class two_q = 2 * r.q;
  mpz_class pp = norm_mod(r.p, two_q);
  unsigned long tq = two_q.get_ui();
  std::vector<ResidueBase> out;
  out.reserve(tq);
  for (unsigned long a = 1; a <= tq; ++a) {
    ResidueBase rb;
    rb.a = a;
    mpz_class m = norm_mod(mpz_class(a) * pp, two_q);  // a*p mod 2q
    // t = m/q in [0,2); base = f(pi*t)
    mpq_class t(m, r.q);
    t.canonicalize();
    unsigned long d = t.get_den().get_ui();
    unsigned long mm = t.get_num().get_ui();
    std::optional<ExactBaseValue> ex = standard_angle(kind, mm, d);
    // unit-ness by congruence, never by floating comparison
    if (kind == SeriesKind::Cos) {
      rb.unit = (m == 0 || m == r.q);
    } else {
      rb.unit = (2 * m == r.q) || (2 * m == 3 * r.q);
    }
    if (ex.has_value()) {
      rb.exact_form = ex;
      rb.base = exact_base_ball(*ex, prec);
      rb.progression_sign =
          ex->sign == 0 ? 0 : (ex->sign > 0 ? +1 : (a % 2 == 0 ? +1 : -1));
    } else {
      // sign and distance from the exact quadrant, magnitude as an enclosure
      mpq_class dist_q;
      int sign;
      if (kind == SeriesKind::Sin) {
        mpz_class m1 = norm_mod(m, r.q);
        dist_q = mpq_class(std::min(m1, mpz_class(r.q - m1)), r.q);
        sign = (m < r.q) ? +1 : -1;  // t in (0,1) -> +, (1,2) -> -
      } else {
        mpz_class u = norm_mod(2 * m - r.q, two_q);
        dist_q = mpq_class(std::min(u, mpz_class(two_q - u)), two_q);
        mpq_class tq_(m, r.q);
        tq_.canonicalize();
        sign = (tq_ < mpq_class(1, 2) || tq_ > mpq_class(3, 2)) ? +1 : -1;
      }
      dist_q.canonicalize();
      Ball mag = sin_pi_dist(Ball::from_rational(dist_q, prec));
      rb.base = sign < 0 ? -mag : mag;
      rb.progression_sign = sign > 0 ? +1 : (a % 2 == 0 ? +1 : -1);
    }
    out.push_back(std::move(rb));
  }
  return out;
}

ClassificationReport classify(SeriesKind kind, const mpz_class& p_in,
                              const mpz_class& q_in) {
  Reduced r = reduce_pair(p_in, q_in);
  ClassificationReport rep;
  rep.kind = kind;
  rep.p = r.p;
  rep.q = r.q;
  rep.was_reduced = r.was_reduced;

  const bool p_even = is_even(r.p);
  const bool q_even = is_even(r.q);
  if (kind == SeriesKind::Cos) {
    rep.cls = (p_even || q_even) ? ConvergenceClass::DivergesToPlusInfinity
                                 : ConvergenceClass::ConvergesConditionally;
  } else {
    if (!q_even) {
      rep.cls = ConvergenceClass::ConvergesAbsolutely;
    } else if (!is_even(mpz_class(r.q / 2))) {
      rep.cls = ConvergenceClass::ConvergesConditionally;
    } else {
      rep.cls = ConvergenceClass::DivergesToPlusInfinity;
    }
  }
  rep.a0 = find_a0(kind, r.p, r.q);

  // witnesses: the unit residues and their constant signs
  mpz_class two_q = 2 * r.q;
  mpz_class pp = norm_mod(r.p, two_q);
  unsigned long tq = two_q.get_ui();
  for (unsigned long a = 1; a <= tq; ++a) {
    mpz_class m = norm_mod(mpz_class(a) * pp, two_q);
    bool unit, positive = false;
    if (kind == SeriesKind::Cos) {
      unit = (m == 0 || m == r.q);
      if (unit) positive = (m == 0);
    } else {
      unit = (2 * m == r.q) || (2 * m == 3 * r.q);
      if (unit) positive = (2 * m == r.q);
    }
    if (unit) {
      int sign = positive ? +1 : (a % 2 == 0 ? +1 : -1);
      rep.unit_residues.emplace_back(a, sign);
    }
  }
  return rep;
}

}  // namespace trigpow
