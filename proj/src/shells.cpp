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

#include "trigpow/shells.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "trigpow/contfrac.hpp"

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

// fixed-size array of initialized mpfr values
class MpfrVec {
 public:
  MpfrVec(std::size_t n, mpfr_prec_t p) : n_(n), v_(new mpfr_t[n]) {
    for (std::size_t i = 0; i < n_; ++i) mpfr_init2(v_[i], p);
  }
  ~MpfrVec() {
    for (std::size_t i = 0; i < n_; ++i) mpfr_clear(v_[i]);
    delete[] v_;
  }
  MpfrVec(const MpfrVec&) = delete;
  MpfrVec& operator=(const MpfrVec&) = delete;
  mpfr_ptr operator[](std::size_t i) { return v_[i]; }
  mpfr_srcptr operator[](std::size_t i) const { return v_[i]; }

 private:
  std::size_t n_;
  mpfr_t* v_;
};

// membership boundaries t_s = asin(1 - 2^-s)/pi as certified endpoints;
// shell s is t_s <= d < t_{s+1} on the relevant distance d
struct Boundaries {
  mpfr_prec_t prec;
  MpfrVec lo, hi;  // lo[s] <= t_s <= hi[s]
  std::vector<double> approx;

  Boundaries(int s_max, mpfr_prec_t p)
      : prec(p), lo(s_max + 2, p), hi(s_max + 2, p) {
    approx.resize(s_max + 2);
    Ball pi = pi_enc(p);
    for (int s = 0; s <= s_max + 1; ++s) {
      if (s == 0) {
        mpfr_set_zero(lo[s], 1);
        mpfr_set_zero(hi[s], 1);
        approx[s] = 0.0;
        continue;
      }
      mpq_class level = 1 - mpq_class(1, mpz_class(1) << s);
      Ball t = asin_enc(Ball::from_rational(level, p)) / pi;
      t.lo(lo[s]);
      t.hi(hi[s]);
      approx[s] = t.mid_double();
    }
  }
  Boundaries(const Boundaries&) = delete;
  Boundaries& operator=(const Boundaries&) = delete;
};

// tail of a shell sum beyond n_max: members have |f| < 1 - 2^-(s+1), so
// sum_{n>N} |f|^n / n^alpha <= (1-e2)^(N+1) / (e2 (N+1)^alpha), e2 = 2^-(s+1)
double shell_tail_bound(int s, std::uint64_t n_max, double alpha_d) {
  double e2 = std::ldexp(1.0, -(s + 1));
  double log_tail = (static_cast<double>(n_max) + 1.0) * std::log1p(-e2) -
                    std::log(e2) - alpha_d * std::log(static_cast<double>(n_max) + 1.0);
  if (log_tail < -700.0) return 0.0;
  return std::exp(log_tail) * 1.000001;
}

int locate_shell_approx(const Boundaries& b, double d, int s_max) {
  // largest s with t_s <= d
  int lo = 0, hi = s_max + 1;
  while (lo < hi) {
    int mid = (lo + hi + 1) / 2;
    if (b.approx[mid] <= d)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace

ShellScanResult shell_scan(const AngleForm& theta, SeriesKind kind,
                           const std::vector<mpq_class>& alphas, int s_max,
                           std::uint64_t n_max, const PrecisionBudget& budget,
                           bool collect_members) {
  if (theta.exact_rational())
    throw DomainError("rational_input",
                      "shells are degenerate for rational angles; use the "
                      "classifier instead");
  if (s_max < 0 || s_max > 60)
    throw DomainError("bad_shell_index", "s_max must lie in [0, 60]");
  if (n_max < 1) throw DomainError("invalid_n", "n_max must be >= 1");
  for (const auto& a : alphas)
    if (a <= 0 || a > 1)
      throw DomainError("bad_alpha", "alpha must lie in (0, 1]");

  AngleReducer red(theta, n_max, budget);
  const mpfr_prec_t prec = red.precision();
  Boundaries bounds(s_max, prec);

  // guard bits for absorbing negligible member terms into the radius
  int g = static_cast<int>(std::ceil(-std::log2(budget.target_radius)));
  int ln = 1;
  while ((n_max >> ln) != 0 && ln < 63) ++ln;
  g = std::max(40, g) + ln + 8;
  // per-shell index beyond which |f|^n <= 2^-g for shell members
  std::vector<std::uint64_t> eval_limit(s_max + 1);
  for (int s = 0; s <= s_max; ++s) {
    double e2 = std::ldexp(1.0, -(s + 1));
    double cut = g * kLn2 / -std::log1p(-e2);
    eval_limit[s] = cut >= 9e18 ? std::numeric_limits<std::uint64_t>::max()
                                : static_cast<std::uint64_t>(cut) + 2;
  }

  ShellScanResult res;
  res.alphas = alphas;
  res.shells.resize(s_max + 1);
  res.sums.assign(alphas.size(), {});
  for (auto& v : res.sums) {
    v.reserve(s_max + 1);
    for (int s = 0; s <= s_max; ++s) v.emplace_back(budget.bits());
  }
  std::vector<std::uint64_t> skipped(s_max + 1, 0);
  std::vector<std::uint64_t> prev_member(s_max + 1, 0);
  const mpfr_prec_t term_prec = budget.bits();

  for (int s = 0; s <= s_max; ++s) {
    auto& rec = res.shells[s];
    rec.s = s;
    rec.kind = kind;
    rec.theta = theta.to_string();
    rec.n_max = n_max;
    rec.alpha = alphas.empty() ? mpq_class(1) : alphas[0];
  }

  Scratch dlo(prec), dhi(prec);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (kind == SeriesKind::Sin)
      red.dist_to_int(n, dlo, dhi);
    else
      red.dist_to_half(n, dlo, dhi);
    double d_apx = mpfr_get_d(dlo, MPFR_RNDN);
    int s = locate_shell_approx(bounds, d_apx, s_max);
    // certify: t_s <= d < t_{s+1}
    bool ok = mpfr_cmp(dlo, bounds.hi[s]) >= 0 &&
              (s == s_max + 1 || mpfr_cmp(dhi, bounds.lo[s + 1]) < 0);
    if (!ok) {
      // try the neighbors, then escalate this single index
      bool placed = false;
      for (int cand = std::max(0, s - 1); cand <= std::min(s_max + 1, s + 1);
           ++cand) {
        bool inside =
            (cand == 0 || mpfr_cmp(dlo, bounds.hi[cand]) >= 0) &&
            (cand == s_max + 1 || mpfr_cmp(dhi, bounds.lo[cand + 1]) < 0);
        if (inside) {
          s = cand;
          placed = true;
          break;
        }
      }
      if (!placed) {
        ++res.escalations;
        PrecisionBudget esc = budget;
        esc.working_digits *= 4;
        ReducedAngle ra = reduce_angle(n, theta, esc);
        const Ball& d =
            kind == SeriesKind::Sin ? ra.dist_to_int : ra.dist_to_half;
        Boundaries hb(s_max, d.precision());
        Scratch xlo(d.precision()), xhi(d.precision());
        d.lo(xlo);
        d.hi(xhi);
        placed = false;
        for (int cand = 0; cand <= s_max + 1; ++cand) {
          bool inside =
              (cand == 0 || mpfr_cmp(xlo, hb.hi[cand]) >= 0) &&
              (cand == s_max + 1 || mpfr_cmp(xhi, hb.lo[cand + 1]) < 0);
          if (inside) {
            s = cand;
            placed = true;
            break;
          }
        }
        if (!placed)
          throw PrecisionError(
              "shell boundary unresolved at index " + std::to_string(n));
      }
    }
    if (s > s_max) {
      ++res.beyond_count;
      continue;
    }
    auto& rec = res.shells[s];
    ++rec.count;
    if (rec.first_member == 0) rec.first_member = n;
    if (prev_member[s] != 0) {
      std::uint64_t gap = n - prev_member[s];
      if (rec.min_gap == 0 || gap < rec.min_gap) rec.min_gap = gap;
    }
    prev_member[s] = n;
    double norm = static_cast<double>(n) / static_cast<double>(rec.count);
    if (rec.min_norm_gap == 0 || norm < rec.min_norm_gap)
      rec.min_norm_gap = norm;
    if (collect_members) rec.members.push_back(n);

    if (!alphas.empty()) {
      if (n >= eval_limit[s]) {
        ++skipped[s];
      } else {
        Ball d = Ball::from_endpoints(dlo, dhi, term_prec);
        Ball mag = pow_ui_enc(sin_pi_dist(d), static_cast<unsigned long>(n));
        for (std::size_t i = 0; i < alphas.size(); ++i) {
          Ball term = mag / pow_rational_of_ui(n, alphas[i], term_prec);
          res.sums[i][s] += term;
        }
      }
    }
  }

  for (int s = 0; s <= s_max; ++s) {
    auto& rec = res.shells[s];
    double a0 = alphas.empty() ? 1.0 : alphas[0].get_d();
    rec.tail_bound = shell_tail_bound(s, n_max, a0);
    rec.truncated = rec.tail_bound > budget.target_radius;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      if (skipped[s] > 0) {
        Scratch sc(64);
        mpfr_set_ui(sc, static_cast<unsigned long>(skipped[s]), MPFR_RNDU);
        mpfr_mul_2si(sc, sc, -g, MPFR_RNDU);
        res.sums[i][s].add_error(sc);
      }
    }
    if (!alphas.empty()) rec.shell_sum = res.sums[0][s];
  }
  return res;
}

ShellRecord enumerate_shell(const AngleForm& theta, SeriesKind kind, int s,
                            const mpq_class& alpha, std::uint64_t n_max,
                            const PrecisionBudget& budget,
                            bool collect_members) {
  if (s < 0) throw DomainError("bad_shell_index", "shell index must be >= 0");
  ShellScanResult scan =
      shell_scan(theta, kind, {alpha}, s, n_max, budget, collect_members);
  ShellRecord rec = std::move(scan.shells[static_cast<std::size_t>(s)]);
  rec.alpha = alpha;
  return rec;
}

std::vector<ShellRecord> shell_sums(const AngleForm& theta, SeriesKind kind,
                                    const mpq_class& alpha, int s_max,
                                    std::uint64_t n_max,
                                    const PrecisionBudget& budget) {
  ShellScanResult scan =
      shell_scan(theta, kind, {alpha}, s_max, n_max, budget, false);
  for (auto& rec : scan.shells) rec.alpha = alpha;
  return std::move(scan.shells);
}

GapFit fit_gap_exponent(const AngleForm& theta, SeriesKind kind, int s_lo,
                        int s_hi, std::uint64_t n_max,
                        const PrecisionBudget& budget,
                        std::optional<double> mu_override) {
  if (s_lo > s_hi) std::swap(s_lo, s_hi);
  ShellScanResult scan = shell_scan(theta, kind, {}, s_hi, n_max, budget, false);
  GapFit fit;
  fit.theta = theta.to_string();
  fit.kind = kind;
  fit.s_lo = s_lo;
  fit.s_hi = s_hi;
  for (int s = s_lo; s <= s_hi; ++s) {
    const auto& rec = scan.shells[s];
    if (rec.count < 5 || rec.min_norm_gap <= 0) continue;
    fit.shells_used.push_back(s);
    fit.log_eps.push_back(-s * kLn2);
    fit.log_min_norm_gap.push_back(std::log(rec.min_norm_gap));
  }
  if (fit.shells_used.size() < 2)
    throw DomainError("insufficient_data",
                      "need at least two shells with 5 or more members");
  double n = static_cast<double>(fit.log_eps.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < fit.log_eps.size(); ++i) {
    sx += fit.log_eps[i];
    sy += fit.log_min_norm_gap[i];
    sxx += fit.log_eps[i] * fit.log_eps[i];
    sxy += fit.log_eps[i] * fit.log_min_norm_gap[i];
  }
  fit.fitted_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);

  if (mu_override.has_value()) {
    fit.mu_used = *mu_override;
    fit.mu_defaulted = false;
  } else if (theta.form() == AngleForm::Form::Named &&
             (theta.named_constant() == NamedConstant::Sqrt2 ||
              theta.named_constant() == NamedConstant::GoldenRatio)) {
    fit.mu_used = 2.0;  // algebraic irrational
    fit.mu_defaulted = true;
  } else {
    MuEstimate mu = estimate_mu(theta, 30);
    fit.mu_used = mu.mu_hat;
    fit.mu_defaulted = false;
  }
  fit.nu_expected = 1.0 / (2.0 * fit.mu_used - 2.0);
  return fit;
}

}  // namespace trigpow
