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

#include "trigpow/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

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

void check_alpha(const mpq_class& alpha) {
  if (alpha <= 0 || alpha > 1)
    throw DomainError("bad_alpha", "alpha must lie in (0, 1]");
}

// Bits below which a term may be absorbed into the radius unevaluated.
int guard_bits(const PrecisionBudget& budget, std::uint64_t n) {
  int tr = static_cast<int>(std::ceil(-std::log2(budget.target_radius)));
  int ln = 1;
  while ((n >> ln) != 0 && ln < 63) ++ln;
  return std::max(40, tr) + ln + 8;
}

// Smallest index from which |base|^n <= 2^-G (conservative).
std::uint64_t skip_cutoff(double base_hi, int g_bits) {
  if (!(base_hi < 1.0) || base_hi <= 0.0)
    return std::numeric_limits<std::uint64_t>::max();
  double n = g_bits * kLn2 / -std::log(base_hi);
  if (n >= 9e18) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(n) + 2;
}

struct ResidueTable {
  // indexed by n mod 2q (entry 0 holds residue a = 2q)
  struct Entry {
    enum class Type { Zero, Unit, Generic };
    Type type = Type::Zero;
    int sign = 0;  // constant sign of base^n along the progression
    std::uint64_t cutoff = 0;
    Ball abs_base;
  };
  std::vector<Entry> entries;
};

ResidueTable build_residue_table(SeriesKind kind, const mpz_class& p,
                                 const mpz_class& q, mpfr_prec_t prec,
                                 int g_bits) {
  auto bases = residue_bases(kind, p, q, prec);
  ResidueTable t;
  t.entries.resize(bases.size());
  for (const auto& rb : bases) {
    auto& e = t.entries[rb.a % bases.size()];
    e.sign = rb.progression_sign;
    if (rb.progression_sign == 0) {
      e.type = ResidueTable::Entry::Type::Zero;
    } else if (rb.unit) {
      e.type = ResidueTable::Entry::Type::Unit;
    } else {
      e.type = ResidueTable::Entry::Type::Generic;
      e.abs_base = abs_enc(rb.base);
      e.cutoff = skip_cutoff(e.abs_base.hi_double(), g_bits);
    }
  }
  return t;
}

// certified |f(pi n theta)|^n <= 2^-G test from the distance upper bound
bool certainly_small(double dist_hi, std::uint64_t n, int g_bits) {
  double u = 0.5 - dist_hi - 1e-15;
  if (u <= 0) return false;
  // |f| = cos(pi (1/2 - d)) <= exp(-(pi u)^2 / 2)
  return static_cast<double>(n) * (9.8696044 * u * u) * 0.5 * 0.98 >
         g_bits * kLn2;
}

}  // namespace

PartialSumResult partial_sum(SeriesKind kind, const AngleForm& theta,
                             const mpq_class& alpha, std::uint64_t n_max,
                             const PrecisionBudget& budget) {
  if (n_max < 1) throw DomainError("invalid_n", "partial sum needs N >= 1");
  check_alpha(alpha);
  const mpfr_prec_t prec = budget.bits();
  const int g = guard_bits(budget, n_max);
  const bool alpha_is_one = alpha == 1;

  PartialSumResult res;
  res.kind = kind;
  res.theta = theta.to_string();
  res.alpha = alpha;
  res.n = n_max;
  res.method = "direct";

  Ball acc(prec);
  Ball one = Ball::from_ui(1, prec);
  std::uint64_t evaluated = 0, skipped = 0;

  bool table_path = false;
  ResidueTable table;
  unsigned long tq = 0;
  if (theta.exact_rational()) {
    const mpq_class& v = theta.rational_value();
    if (v.get_den() <= 2000000) {
      tq = 2 * v.get_den().get_ui();
      table = build_residue_table(kind, v.get_num(), v.get_den(), prec, g);
      table_path = true;
    }
  }

  if (table_path) {
    unsigned long r = 1 % tq;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const auto& e = table.entries[r];
      if (++r == tq) r = 0;
      using T = ResidueTable::Entry::Type;
      if (e.type == T::Zero) continue;
      if (e.type == T::Unit) {
        Ball term = alpha_is_one
                        ? one.div_ui(static_cast<unsigned long>(n))
                        : one / pow_rational_of_ui(n, alpha, prec);
        if (e.sign < 0) term = -term;
        acc += term;
        ++evaluated;
        continue;
      }
      if (n >= e.cutoff) {
        ++skipped;
        continue;
      }
      Ball mag = pow_ui_enc(e.abs_base, static_cast<unsigned long>(n));
      Ball term = alpha_is_one ? mag.div_ui(static_cast<unsigned long>(n))
                               : mag / pow_rational_of_ui(n, alpha, prec);
      if (e.sign < 0) term = -term;
      acc += term;
      ++evaluated;
    }
  } else {
    AngleReducer red(theta, n_max, budget);
    Scratch dlo(red.precision()), dhi(red.precision());
    const mpq_class half(1, 2);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (kind == SeriesKind::Sin)
        red.dist_to_int(n, dlo, dhi);
      else
        red.dist_to_half(n, dlo, dhi);
      double dh = mpfr_get_d(dhi, MPFR_RNDU);
      if (certainly_small(dh, n, g)) {
        ++skipped;
        continue;
      }
      Ball d = Ball::from_endpoints(dlo, dhi, red.precision());
      Ball mag(prec);
      if (d.contains(half) && !d.exact()) {
        // per-index escalation (named constants only; errors otherwise)
        mag = term_magnitude(n, theta, kind, budget);
      } else {
        mag = pow_ui_enc(sin_pi_dist(d), static_cast<unsigned long>(n));
      }
      Ball den = pow_rational_of_ui(n, alpha, prec);
      std::optional<int> s = red.base_sign(n, kind);
      Ball term(prec);
      if (!s.has_value()) {
        Scratch hi(prec + 8), lo(prec + 8);
        mag.hi(hi);
        mpfr_neg(lo, hi, MPFR_RNDD);
        term = Ball::from_endpoints(lo, hi, prec) / den;
      } else if (*s == 0) {
        ++evaluated;
        continue;
      } else {
        term = mag / den;
        if (*s < 0 && n % 2 == 1) term = -term;
      }
      acc += term;
      ++evaluated;
    }
  }

  if (skipped > 0) {
    // every skipped term is certified below 2^-g in absolute value
    Ball err = Ball::from_ui(1, 64);
    Scratch sc(64);
    mpfr_set_ui(sc, static_cast<unsigned long>(skipped), MPFR_RNDU);
    mpfr_mul_2si(sc, sc, -g, MPFR_RNDU);
    acc.add_error(sc);
  }
  res.value = acc;
  res.terms_evaluated = evaluated;
  return res;
}

mpz_class compute_Aq(SeriesKind kind, const mpz_class& p, const mpz_class& q) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_class rp = p / g, rq = abs(q / g);
  if (rq == 0) throw DomainError("zero_denominator", "q must be nonzero");
  if (rq > 1048576)
    throw DomainError("q_too_large",
                      "compute_Aq enumerates 2q residues; q must be <= 2^20");
  const mpfr_prec_t prec = 128;
  auto bases = residue_bases(kind, rp, rq, prec);
  unsigned long tq = 2 * rq.get_ui();
  Ball total(prec);
  Ball one = Ball::from_ui(1, prec);
  for (const auto& rb : bases) {
    if (rb.unit || rb.progression_sign == 0) continue;
    Ball ab = abs_enc(rb.base);
    Ball num = pow_ui_enc(ab, rb.a);
    Ball den = one - pow_ui_enc(ab, tq);
    total += num / den;
  }
  Scratch hi(prec + 8);
  total.hi(hi);
  mpfr_ceil(hi, hi);
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), hi, MPFR_RNDN);
  if (out < 1) out = 1;  // the Lemma asks for a positive integer
  return out;
}

mpz_class aq_upper_bound_pow2(const mpz_class& q) {
  if (q < 4 || mpz_scan1(q.get_mpz_t(), 0) !=
                   mpz_sizeinbase(q.get_mpz_t(), 2) - 1)
    throw DomainError("bad_q", "closed-form bound requires q a power of two >= 4");
  // sum over non-unit residues <= q*(2 + pi^2/6) < 3.645 q
  mpz_class num = 3645 * q;
  mpz_class out;
  mpz_cdiv_q_ui(out.get_mpz_t(), num.get_mpz_t(), 1000);
  return out;
}

Ball accelerated_value(SeriesKind kind, const mpz_class& p, const mpz_class& q,
                       const mpq_class& alpha, double tolerance) {
  check_alpha(alpha);
  if (!(tolerance > 0))
    throw DomainError("bad_tolerance", "tolerance must be positive");
  ClassificationReport rep = classify(kind, p, q);
  if (rep.cls == ConvergenceClass::DivergesToPlusInfinity)
    throw DomainError("divergent_input",
                      "accelerated_value requires a convergent series");
  int digits = static_cast<int>(std::ceil(-std::log10(tolerance))) + 12;
  const mpfr_prec_t prec = digits_to_bits(std::max(digits, 18));
  auto bases = residue_bases(kind, rep.p, rep.q, prec);
  unsigned long tq = 2 * rep.q.get_ui();
  Ball acc(prec);
  Ball one = Ball::from_ui(1, prec);
  const double tol_share = tolerance / (4.0 * static_cast<double>(tq));

  std::vector<std::pair<unsigned long, int>> units;
  for (const auto& rb : bases) {
    if (rb.progression_sign == 0) continue;
    if (rb.unit) {
      units.emplace_back(rb.a, rb.progression_sign);
      continue;
    }
    Ball ab = abs_enc(rb.base);
    Ball ratio = pow_ui_enc(ab, tq);
    Ball denom_geo = one - ratio;
    for (std::uint64_t l = 0;; ++l) {
      std::uint64_t n = 2 * static_cast<std::uint64_t>(rep.q.get_ui()) * l +
                        rb.a;
      Ball mag = pow_ui_enc(ab, static_cast<unsigned long>(n));
      Ball term = mag / pow_rational_of_ui(n, alpha, prec);
      if (rb.progression_sign < 0) term = -term;
      acc += term;
      // geometric tail from the next index of this progression
      Ball tail = pow_ui_enc(ab, static_cast<unsigned long>(n + tq)) /
                  (pow_rational_of_ui(n + tq, alpha, prec) * denom_geo);
      double th = tail.hi_double();
      if (th <= tol_share) {
        acc.add_error_double(th);
        break;
      }
      if (l > 10000000)
        throw PrecisionError("geometric residue did not reach tolerance");
    }
  }

  if (!units.empty()) {
    if (units.size() != 2 || units[0].second + units[1].second != 0)
      throw InternalError("identity_violated",
                          "unexpected unit-residue structure");
    unsigned long u1 = units[0].first, u2 = units[1].first;
    int s1 = units[0].second;
    if (u1 > u2) {
      std::swap(u1, u2);
      s1 = units[1].second;
    }
    if (alpha == 1) {
      // sum_l [ s1/(2lq+u1) - s1/(2lq+u2) ]
      //   = (s1/2q) (digamma(u2/2q) - digamma(u1/2q))
      Ball x1 = Ball::from_rational(mpq_class(u1, tq), prec);
      Ball x2 = Ball::from_rational(mpq_class(u2, tq), prec);
      Ball val = (digamma_enc(x2) - digamma_enc(x1)).div_ui(tq);
      if (s1 < 0) val = -val;
      acc += val;
    } else {
      // paired loop; tail after L pairs bounded by the integral estimate
      // (u2-u1) (2q)^(-alpha-1) L^(-alpha)
      double a_d = alpha.get_d();
      double coef = static_cast<double>(u2 - u1) *
                    std::pow(static_cast<double>(tq), -a_d - 1.0);
      double L_d = std::pow(coef * 4.0 / tolerance, 1.0 / a_d);
      if (!(L_d < 2.0e7))
        throw PrecisionError(
            "paired-tail tolerance unattainable at this alpha; use a looser "
            "tolerance or alpha = 1");
      std::uint64_t L = static_cast<std::uint64_t>(L_d) + 1;
      for (std::uint64_t l = 0; l <= L; ++l) {
        std::uint64_t n1 = static_cast<std::uint64_t>(tq) * l + u1;
        std::uint64_t n2 = static_cast<std::uint64_t>(tq) * l + u2;
        Ball term = one / pow_rational_of_ui(n1, alpha, prec) -
                    one / pow_rational_of_ui(n2, alpha, prec);
        if (s1 < 0) term = -term;
        acc += term;
      }
      double tail = coef * std::pow(static_cast<double>(L + 1), -a_d) * 1.001;
      acc.add_error_double(tail);
    }
  }
  return acc;
}

RateCertificate rate_certificate(SeriesKind kind, const mpz_class& p,
                                 const mpz_class& q, const mpq_class& alpha,
                                 std::uint64_t big_l) {
  check_alpha(alpha);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_class rp = p / g, rq = abs(q / g);
  if (rq % 4 != 0)
    throw DomainError("q_not_divisible_by_4",
                      "the divergence-rate certificate needs 4 | q");
  if (big_l < 1) throw DomainError("invalid_n", "L must be >= 1");
  unsigned long qu = rq.get_ui();
  if (big_l > 1000000000ull / (2 * qu))
    throw DomainError("invalid_n", "certificate partial sum capped at 1e9 terms");
  std::uint64_t n = 2 * static_cast<std::uint64_t>(qu) * big_l;
  PrecisionBudget budget = PrecisionBudget::for_index_range(n, 12);
  PartialSumResult s =
      partial_sum(kind, AngleForm::rational(rp, rq), alpha, n, budget);

  RateCertificate cert;
  cert.kind = kind;
  cert.p = rp;
  cert.q = rq;
  cert.alpha = alpha;
  cert.big_l = big_l;
  cert.a_q = compute_Aq(kind, rp, rq);
  const mpfr_prec_t prec = budget.bits();
  Ball lower = log_ui_enc(static_cast<unsigned long>(big_l), prec).div_ui(qu) -
               Ball::from_mpz(cert.a_q, prec);
  cert.lower_bound = lower;
  cert.observed = abs_enc(s.value);
  Scratch olo(prec + 8), lhi(prec + 8);
  cert.observed.lo(olo);
  lower.hi(lhi);
  cert.valid = mpfr_cmp(olo, lhi) >= 0;
  if (!cert.valid) {
    // the bound is a theorem: failing it means an implementation bug
    throw InternalError("certificate_failed",
                        "partial sum fell below the certified lower bound");
  }
  return cert;
}

ResidueDecomposition residue_decomposition(SeriesKind kind, const mpz_class& p,
                                           const mpz_class& q,
                                           const mpq_class& alpha,
                                           std::uint64_t n_max,
                                           const PrecisionBudget& budget) {
  check_alpha(alpha);
  if (n_max < 1) throw DomainError("invalid_n", "cutoff must be >= 1");
  if (n_max > 2000000)
    throw DomainError("invalid_n",
                      "residue decomposition evaluates every term; N <= 2e6");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_class rp = p / g, rq = abs(q / g);
  const mpfr_prec_t prec = budget.bits();
  auto bases = residue_bases(kind, rp, rq, prec);
  unsigned long tq = 2 * rq.get_ui();

  ResidueDecomposition out;
  out.kind = kind;
  out.p = rp;
  out.q = rq;
  out.alpha = alpha;
  out.n = n_max;
  for (const auto& rb : bases) {
    ResidueSubSeries sub;
    sub.a = rb.a;
    sub.base = rb.base;
    sub.ratio = pow_ui_enc(abs_enc(rb.base), tq);
    sub.unit = rb.unit;
    sub.progression_sign = rb.progression_sign;
    Ball partial(prec);
    if (rb.progression_sign != 0) {
      Ball ab = abs_enc(rb.base);
      for (std::uint64_t n = rb.a; n <= n_max; n += tq) {
        Ball mag = rb.unit
                       ? Ball::from_ui(1, prec)
                       : pow_ui_enc(ab, static_cast<unsigned long>(n));
        Ball term = mag / pow_rational_of_ui(n, alpha, prec);
        if (rb.progression_sign < 0) term = -term;
        partial += term;
      }
    }
    sub.partial = partial;
    if (rb.unit) out.divergent_residues.push_back(rb.a);
    out.residues.push_back(std::move(sub));
  }
  return out;
}

double convergent_tail_bound(SeriesKind kind, const mpz_class& p,
                             const mpz_class& q, const mpq_class& alpha,
                             std::uint64_t n_max) {
  check_alpha(alpha);
  ClassificationReport rep = classify(kind, p, q);
  if (rep.cls == ConvergenceClass::DivergesToPlusInfinity)
    throw DomainError("divergent_input", "tail bound needs a convergent series");
  auto bases = residue_bases(kind, rep.p, rep.q, 128);
  unsigned long tq = 2 * rep.q.get_ui();
  double a_d = alpha.get_d();
  double bound = 0;
  std::vector<unsigned long> units;
  for (const auto& rb : bases) {
    if (rb.progression_sign == 0) continue;
    if (rb.unit) {
      units.push_back(rb.a);
      continue;
    }
    double bh = abs_enc(rb.base).hi_double();
    // first index of this progression beyond n_max
    std::uint64_t k = (n_max >= rb.a) ? (n_max - rb.a) / tq + 1 : 0;
    std::uint64_t n0 = static_cast<std::uint64_t>(tq) * k + rb.a;
    double log_term = static_cast<double>(n0) * std::log(bh) -
                      a_d * std::log(static_cast<double>(n0));
    double denom = 1.0 - std::pow(bh, static_cast<double>(tq));
    if (log_term < -700.0) continue;
    bound += std::exp(log_term) / denom * 1.0000001;
  }
  if (!units.empty()) {
    unsigned long u1 = std::min(units[0], units[1]);
    unsigned long u2 = std::max(units[0], units[1]);
    // fragments: unit terms in (N, 2q*(l0-1)+u2], each <= (N+1)^-alpha
    std::uint64_t l0 = n_max / tq + 2;
    bound += 4.0 * std::pow(static_cast<double>(n_max + 1), -a_d);
    // complete pairs from l0 on
    double coef = static_cast<double>(u2 - u1) *
                  std::pow(static_cast<double>(tq), -a_d - 1.0);
    bound += coef * std::pow(static_cast<double>(l0 - 1), -a_d) * 1.0000001;
  }
  return bound;
}

Ball polylog_sum(const mpq_class& z, const mpq_class& alpha, double tolerance) {
  if (!(z > 0 && z < 1))
    throw DomainError("bad_z", "polylog_sum requires 0 < z < 1");
  if (alpha > 1) throw DomainError("bad_alpha", "alpha must be <= 1");
  if (!(tolerance > 0))
    throw DomainError("bad_tolerance", "tolerance must be positive");
  int digits = static_cast<int>(std::ceil(-std::log10(tolerance))) + 10;
  const mpfr_prec_t prec = digits_to_bits(std::max(digits, 18));
  Ball zb = Ball::from_rational(z, prec);
  Ball zk = Ball::from_ui(1, prec);
  Ball one = Ball::from_ui(1, prec);
  Ball acc(prec);
  const double z_d = z.get_d();
  const double a_d = alpha.get_d();
  const double beta = a_d < 0 ? -a_d : 0.0;  // k^|alpha| growth when alpha < 0
  const std::uint64_t check_stride = 64;
  for (std::uint64_t k = 1;; ++k) {
    zk = zk * zb;
    Ball term = zk / pow_rational_of_ui(k, alpha, prec);
    acc += term;
    if (k % check_stride == 0 || z_d < 0.5) {
      double rho = z_d;
      if (beta > 0)
        rho = z_d * std::pow((static_cast<double>(k) + 1.0) /
                                 static_cast<double>(k),
                             beta);
      if (rho < 1.0) {
        double t_next = term.hi_double() * rho;
        double tail = t_next / (1.0 - rho) * 1.0000001;
        if (tail <= tolerance / 2) {
          acc.add_error_double(tail);
          break;
        }
      }
    }
    if (k > 500000000)
      throw PrecisionError("polylog tolerance unattainable at this z");
  }
  return acc;
}

Ball gelfond_asymptotic(const mpq_class& z, const mpq_class& alpha,
                        mpfr_prec_t prec) {
  if (!(z > 0 && z < 1))
    throw DomainError("bad_z", "asymptotic requires 0 < z < 1");
  if (!(alpha < 1)) throw DomainError("bad_alpha", "asymptotic needs alpha < 1");
  mpq_class one_minus = 1 - alpha;
  Ball g = gamma_enc(Ball::from_rational(one_minus, prec));
  Ball u = -log_enc(Ball::from_rational(z, prec));  // ln(1/z) > 0
  mpq_class expo = alpha - 1;
  Ball upow = exp_enc(log_enc(u).mul_q(expo));
  return g * upow;
}

}  // namespace trigpow
