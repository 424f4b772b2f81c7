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

#include "trigpow/contfrac.hpp"

#include <algorithm>
#include <cmath>

namespace trigpow {

namespace {

mpz_class floor_q(const mpq_class& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return f;
}

// interval continued fraction: emit quotients while [lo, hi] pins them down
void expand_interval(mpq_class lo, mpq_class hi, int max_quotients,
                     ContinuedFractionExpansion& out) {
  bool first = true;
  int emitted = 0;
  while (emitted < max_quotients + 1) {
    mpz_class flo = floor_q(lo);
    mpz_class fhi = floor_q(hi);
    if (flo != fhi) {
      out.truncated_by_interval = true;
      return;
    }
    if (first) {
      out.a0 = flo;
      first = false;
    } else {
      out.quotients.push_back(flo);
    }
    ++emitted;
    mpq_class rlo = lo - flo;
    mpq_class rhi = hi - flo;
    if (rlo == 0) {
      // lower endpoint hits an integer: the next quotient is unbounded
      out.truncated_by_interval = true;
      return;
    }
    // reciprocal flips the interval
    mpq_class nlo = 1 / rhi;
    mpq_class nhi = 1 / rlo;
    lo = nlo;
    hi = nhi;
  }
}

void expand_exact(mpq_class x, int max_quotients,
                  ContinuedFractionExpansion& out) {
  out.input_rational = true;
  mpz_class a = floor_q(x);
  out.a0 = a;
  mpq_class r = x - a;
  int emitted = 0;
  while (r != 0 && emitted < max_quotients) {
    mpq_class inv = 1 / r;
    a = floor_q(inv);
    out.quotients.push_back(a);
    r = inv - a;
    ++emitted;
  }
  if (r != 0) out.truncated_by_interval = true;  // ran out of the budget
}

}  // namespace

ContinuedFractionExpansion expand(const AngleForm& theta, int max_quotients) {
  if (max_quotients < 0) max_quotients = 0;
  ContinuedFractionExpansion out;
  switch (theta.form()) {
    case AngleForm::Form::Rational:
      expand_exact(theta.rational_value(), max_quotients, out);
      return out;
    case AngleForm::Form::Decimal: {
      out.source_precision_digits = theta.decimal_stated_precision();
      mpq_class lo, hi;
      theta.exact_interval(lo, hi);
      expand_interval(lo, hi, max_quotients, out);
      return out;
    }
    case AngleForm::Form::ContinuedFraction: {
      out.a0 = theta.cf_integer_part();
      const auto& qs = theta.cf_quotients();
      int take = std::min<int>(max_quotients, static_cast<int>(qs.size()));
      out.quotients.assign(qs.begin(), qs.begin() + take);
      if (take < static_cast<int>(qs.size())) out.truncated_by_interval = false;
      return out;
    }
    case AngleForm::Form::Named: {
      // rematerialize until the interval supports the requested depth
      mpfr_prec_t prec = 256;
      for (int attempt = 0; attempt < 12; ++attempt) {
        out = ContinuedFractionExpansion{};
        Ball enc = theta.enclosure(prec);
        mpq_class lo, hi;
        {
          mpfr_t t;
          mpfr_init2(t, prec + 8);
          enc.lo(t);
          mpq_class l;
          mpfr_get_q(l.get_mpq_t(), t);
          enc.hi(t);
          mpq_class h;
          mpfr_get_q(h.get_mpq_t(), t);
          mpfr_clear(t);
          lo = l;
          hi = h;
        }
        expand_interval(lo, hi, max_quotients, out);
        if (static_cast<int>(out.quotients.size()) >= max_quotients) {
          out.truncated_by_interval = false;
          return out;
        }
        prec *= 2;
      }
      return out;  // as deep as materialization reached
    }
  }
  return out;
}

std::vector<Convergent> convergents(const ContinuedFractionExpansion& e) {
  std::vector<Convergent> out;
  mpz_class pk1 = 1, pk = e.a0;  // p_{-1}, p_0
  mpz_class qk1 = 0, qk = 1;
  out.push_back({pk, qk, 0});
  int k = 1;
  for (const auto& a : e.quotients) {
    mpz_class pn = a * pk + pk1;
    mpz_class qn = a * qk + qk1;
    pk1 = pk;
    qk1 = qk;
    pk = pn;
    qk = qn;
    out.push_back({pk, qk, k});
    ++k;
  }
  return out;
}

MuEstimate estimate_mu(const AngleForm& theta, int max_quotients) {
  ContinuedFractionExpansion e = expand(theta, max_quotients);
  if (static_cast<int>(e.quotients.size()) < 3)
    throw DomainError("insufficient_expansion",
                      "estimate_mu needs at least 3 partial quotients");
  std::vector<Convergent> cv = convergents(e);
  MuEstimate m;
  m.rational = e.input_rational && !e.truncated_by_interval;
  int last = static_cast<int>(cv.size()) - 1;
  m.window_lo = 3;
  m.window_hi = last - 1;
  if (m.window_hi < m.window_lo)
    throw DomainError("insufficient_expansion",
                      "estimate_mu window is empty at this depth");
  double best = 0;
  for (int k = m.window_lo; k <= m.window_hi; ++k) {
    double lq = mpz_sizeinbase(cv[k].q.get_mpz_t(), 2) < 900
                    ? std::log(cv[k].q.get_d())
                    : static_cast<double>(
                          mpz_sizeinbase(cv[k].q.get_mpz_t(), 2)) *
                          0.6931471805599453;
    double lq1 = mpz_sizeinbase(cv[k + 1].q.get_mpz_t(), 2) < 900
                     ? std::log(cv[k + 1].q.get_d())
                     : static_cast<double>(
                           mpz_sizeinbase(cv[k + 1].q.get_mpz_t(), 2)) *
                           0.6931471805599453;
    double ratio = lq1 / lq;
    m.ratios.push_back(ratio);
    best = std::max(best, ratio);
  }
  m.mu_hat = 1.0 + best;
  return m;
}

}  // namespace trigpow
