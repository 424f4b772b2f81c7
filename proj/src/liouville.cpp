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

#include "trigpow/liouville.hpp"

#include <algorithm>
#include <cmath>

#include "trigpow/series.hpp"

namespace trigpow {

namespace {

// nu values bigger than this cannot be used as exponents of materialized
// integers (2^nu would not fit in memory)
const unsigned long kMaxMaterializedExponent = 4000000;

// exact enumeration is worthwhile only for small q = 2^nu
const unsigned long kExactAqExponentLimit = 12;

mpz_class ceil_q(const mpq_class& x) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return c;
}

mpz_class floor_q(const mpq_class& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return f;
}

mpq_class pow2_q(long e) {
  if (e >= 0) return mpq_class(mpz_class(1) << e);
  return mpq_class(1) / mpq_class(mpz_class(1) << (-e));
}

// A_{2^nu} for the schedule: exact residue enumeration while 2^nu is small,
// the certified closed-form bound otherwise. Must cover both series, so the
// exact value is the max over kinds.
mpz_class schedule_aq(const mpz_class& nu, const mpq_class& xi,
                      std::string& method) {
  if (nu.fits_ulong_p() && nu.get_ui() <= kExactAqExponentLimit) {
    mpz_class q = mpz_class(1) << nu.get_ui();
    const mpz_class& p = xi.get_num();
    mpz_class a_sin = compute_Aq(SeriesKind::Sin, p, q);
    mpz_class a_cos = compute_Aq(SeriesKind::Cos, p, q);
    method = "exact";
    return std::max(a_sin, a_cos);
  }
  if (!nu.fits_ulong_p() || nu.get_ui() > kMaxMaterializedExponent)
    throw DomainError("depth_infeasible",
                      "nu exceeds the representable exponent range; certificates "
                      "beyond this depth are out of desk scale");
  mpz_class q = mpz_class(1) << nu.get_ui();
  method = "bound";
  return aq_upper_bound_pow2(q);
}

}  // namespace

LiouvilleSchedule build_schedule(const mpq_class& x1, const mpq_class& x2,
                                 int depth) {
  if (!(x1 < x2)) throw DomainError("empty_interval", "need x1 < x2");
  if (depth < 1) throw DomainError("bad_depth", "depth must be >= 1");

  LiouvilleSchedule s;
  s.x1 = x1;
  s.x2 = x2;

  // smallest dyadic scale admitting xi_0 in [x1, x2) with room for the tail
  long m = 0;
  mpq_class xi0;
  bool found = false;
  for (; m <= 4096; ++m) {
    mpz_class t = ceil_q(x1 * pow2_q(m));
    xi0 = mpq_class(t) * pow2_q(-m);
    if (xi0 < x2) {
      found = true;
      break;
    }
  }
  if (!found)
    throw DomainError("empty_interval", "interval is too narrow to anchor");
  s.xi0 = xi0;
  s.u = floor_q(xi0);
  // fractional bits of xi_0: positions b with xi_0 - u = sum 2^-b
  mpq_class frac = xi0 - s.u;
  mpz_class num = frac.get_num();
  mpz_class den = frac.get_den();  // a power of two, 2^j
  if (frac != 0) {
    unsigned long j = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
    for (unsigned long bit = 0; bit < mpz_sizeinbase(num.get_mpz_t(), 2);
         ++bit) {
      if (mpz_tstbit(num.get_mpz_t(), bit))
        s.b.push_back(j - bit);
    }
    std::sort(s.b.begin(), s.b.end());
  }

  // smallest nu_1 >= max(2, m+1) with xi_0 + 2^(1-nu_1) <= x2
  long nu1 = std::max<long>(2, m + 1);
  while (xi0 + pow2_q(1 - nu1) > x2) {
    ++nu1;
    if (nu1 > 1000000)
      throw DomainError("empty_interval", "interval is too narrow to anchor");
  }
  s.nu.emplace_back(nu1);
  s.xi1 = xi0 + pow2_q(-nu1);

  for (int k = 1; k < depth; ++k) {
    std::string method;
    mpz_class a = schedule_aq(s.nu.back(), s.xi1, method);
    s.a_values.push_back(a);
    s.a_method.push_back(method);
    const mpz_class& nuk = s.nu.back();
    if (!nuk.fits_ulong_p() || nuk.get_ui() > kMaxMaterializedExponent)
      throw DomainError("depth_infeasible",
                        "nu exceeds the representable exponent range");
    mpz_class pw = mpz_class(1) << (nuk.get_ui() + 2);
    mpz_class next = pw * (a + k + 4) + 2 * nuk + 3;
    s.nu.push_back(next);
  }
  return s;
}

DivergenceCertificate certify(const LiouvilleSchedule& schedule, int k) {
  if (k < 1 || static_cast<std::size_t>(k) + 1 > schedule.nu.size())
    throw DomainError("bad_depth",
                      "certify(k) needs schedule entries nu_k and nu_{k+1}");
  DivergenceCertificate cert;
  cert.k = k;
  cert.nu_k = schedule.nu[static_cast<std::size_t>(k) - 1];
  cert.nu_k1 = schedule.nu[static_cast<std::size_t>(k)];
  cert.a_q = schedule.a_values[static_cast<std::size_t>(k) - 1];

  // the schedule must be strictly increasing for the binary tail bound
  // |xi - xi_k| <= 2 * 2^-nu_{k+1}
  for (std::size_t i = 1; i < schedule.nu.size(); ++i) {
    if (!(schedule.nu[i - 1] < schedule.nu[i]))
      throw InternalError("identity_violated", "nu must increase strictly");
  }

  if (!cert.nu_k.fits_ulong_p() ||
      cert.nu_k.get_ui() > kMaxMaterializedExponent)
    throw DomainError("depth_infeasible",
                      "certificate exponents exceed desk scale at this k");

  // L = 2^(2q(A+k+4)) with q = 2^nu_k: l_exponent = 2^(nu_k+1) (A+k+4)
  mpz_class m = cert.a_q + k + 4;
  cert.l_exponent = (mpz_class(1) << (cert.nu_k.get_ui() + 1)) * m;
  cert.n_exponent = cert.nu_k + 1 + cert.l_exponent;

  // exponent identity: 2 (1 + nu_k + l_exponent) + 1 == nu_{k+1},
  // equivalently N_k^2 * 2 * 2^-nu_{k+1} == 1 exactly
  mpz_class lhs = 2 * (1 + cert.nu_k + cert.l_exponent) + 1;
  cert.identity_ok = (lhs == cert.nu_k1);
  if (!cert.identity_ok)
    throw InternalError("identity_violated",
                        "exponent identity failed: the schedule is corrupt");
  cert.slack = 1;
  cert.lower_bound = static_cast<double>(k) + 4.0 - 3.14159265358979323846;
  return cert;
}

DivergenceDemo demo_divergence(unsigned long q, double k_target,
                               std::uint64_t n_budget) {
  if (q == 0 || q % 4 != 0)
    throw DomainError("q_not_divisible_by_4", "demo requires 4 | q");
  if (n_budget > 100000000)
    throw DomainError("invalid_n", "budget capped at 1e8 indices");
  std::uint64_t l_max = n_budget / (2 * q);
  if (l_max < 1)
    throw DomainError("budget_too_small", "budget below one period");

  DivergenceDemo demo;
  demo.q = q;
  demo.k_target = k_target;
  demo.n_budget = n_budget;
  mpz_class a_sin = compute_Aq(SeriesKind::Sin, 1, q);
  mpz_class a_cos = compute_Aq(SeriesKind::Cos, 1, q);
  demo.a_q = std::max(a_sin, a_cos);

  double bound_max = std::log(static_cast<double>(l_max)) / q -
                     demo.a_q.get_d();
  if (bound_max <= k_target)
    throw DomainError("budget_too_small",
                      "certified bound (1/q) ln L - A_q does not clear the "
                      "target within the budget");

  std::vector<std::uint64_t> ls;
  if (l_max / 100 >= 1) ls.push_back(l_max / 100);
  if (l_max / 10 >= 1 && l_max / 10 != l_max / 100) ls.push_back(l_max / 10);
  ls.push_back(l_max);

  demo.exceeded = true;
  for (SeriesKind kind : {SeriesKind::Sin, SeriesKind::Cos}) {
    for (std::uint64_t L : ls) {
      RateCertificate cert =
          rate_certificate(kind, 1, q, mpq_class(1), L);
      DivergenceDemo::Point pt;
      pt.kind = kind;
      pt.big_l = L;
      pt.observed = cert.observed.mid_double();
      pt.bound = cert.lower_bound.mid_double();
      demo.points.push_back(pt);
      if (L == l_max && !(pt.observed > k_target)) demo.exceeded = false;
    }
  }
  return demo;
}

}  // namespace trigpow
