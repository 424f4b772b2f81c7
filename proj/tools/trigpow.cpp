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

// Command-line front end. One binary, subcommand style; every subcommand
// emits a machine-readable report (JSON, or CSV for shell tables).
// Exit codes: 0 success, 1 input/precondition failure, 2 internal invariant
// violation.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "trigpow/report.hpp"

namespace {

using namespace trigpow;

int default_digits_override() {
  if (const char* env = std::getenv("TRIGPOW_DIGITS")) {
    int v = std::atoi(env);
    if (v >= 10) return v;
  }
  return 0;
}

PrecisionBudget make_budget(std::uint64_t n_scale, int digits_flag) {
  PrecisionBudget b = PrecisionBudget::for_index_range(n_scale, 12);
  int env = default_digits_override();
  if (env > 0) b.working_digits = env;
  if (digits_flag > 0) b.working_digits = digits_flag;
  return b;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power-trigonometric series toolkit"};
  app.require_subcommand(1);

  std::string theta_str = "1/2";
  std::string kind_str = "sin";
  std::string alpha_str = "1";
  int digits_flag = 0;

  // classify
  auto* cmd_classify = app.add_subcommand(
      "classify", "convergence class of the series for a rational angle");
  cmd_classify->add_option("--theta", theta_str, "angle p/q")->required();
  cmd_classify->add_option("--kind", kind_str, "sin|cos");

  // sum
  std::uint64_t opt_n = 1000;
  bool accelerated = false;
  double tolerance = 1e-10;
  auto* cmd_sum = app.add_subcommand("sum", "partial sum or accelerated value");
  cmd_sum->add_option("--theta", theta_str)->required();
  cmd_sum->add_option("--kind", kind_str);
  cmd_sum->add_option("--alpha", alpha_str);
  cmd_sum->add_option("--N", opt_n, "upper index");
  cmd_sum->add_flag("--accelerated", accelerated,
                    "sum the full series via the residue decomposition");
  cmd_sum->add_option("--tolerance", tolerance,
                      "enclosure width target for --accelerated");
  cmd_sum->add_option("--digits", digits_flag, "working precision override");

  // rate-cert
  std::uint64_t opt_l = 1000;
  auto* cmd_rate = app.add_subcommand(
      "rate-cert", "divergence-rate certificate |S| >= (1/q) ln L - A_q");
  cmd_rate->add_option("--theta", theta_str)->required();
  cmd_rate->add_option("--kind", kind_str);
  cmd_rate->add_option("--alpha", alpha_str);
  cmd_rate->add_option("--L", opt_l, "number of periods");

  // shells
  int opt_smax = 10;
  std::uint64_t opt_nmax = 1000000;
  bool with_fit = false;
  auto* cmd_shells = app.add_subcommand(
      "shells", "dyadic shell decomposition of the absolute series");
  cmd_shells->add_option("--theta", theta_str)->required();
  cmd_shells->add_option("--kind", kind_str);
  cmd_shells->add_option("--alpha", alpha_str);
  cmd_shells->add_option("--smax", opt_smax);
  cmd_shells->add_option("--nmax", opt_nmax);
  std::string shells_format = "csv";
  cmd_shells->add_option("--format", shells_format, "csv|json");
  cmd_shells->add_flag("--fit", with_fit,
                       "emit the min-gap exponent fit (JSON) instead of rows");
  cmd_shells->add_option("--digits", digits_flag);

  // cf
  int opt_k = 30;
  auto* cmd_cf = app.add_subcommand(
      "cf", "continued fraction, convergents, irrationality estimate");
  cmd_cf->add_option("--theta", theta_str)->required();
  cmd_cf->add_option("--K", opt_k, "maximum partial quotients");

  // liouville
  std::string interval = "0,1";
  int opt_depth = 2;
  auto* cmd_liou = app.add_subcommand(
      "liouville", "divergence-schedule construction and certificates");
  cmd_liou->add_option("--interval", interval, "x1,x2 (rationals or decimals)");
  cmd_liou->add_option("--depth", opt_depth);

  // measure
  int opt_samples = 200;
  std::uint64_t opt_seed = 42;
  auto* cmd_measure = app.add_subcommand(
      "measure", "seeded mean of the absolute series against its integral");
  cmd_measure->add_option("--alpha", alpha_str);
  cmd_measure->add_option("--N", opt_n);
  cmd_measure->add_option("--samples", opt_samples);
  cmd_measure->add_option("--seed", opt_seed);

  // gelfond
  std::string z_str = "0.999";
  auto* cmd_gelfond = app.add_subcommand(
      "gelfond", "polylog sum against its z->1 asymptotic");
  cmd_gelfond->add_option("--z", z_str)->required();
  cmd_gelfond->add_option("--alpha", alpha_str);
  cmd_gelfond->add_option("--tolerance", tolerance);

  // demo-divergence
  unsigned long opt_q = 4;
  double opt_ktarget = 0;
  auto* cmd_demo = app.add_subcommand(
      "demo-divergence", "partial sums clearing a target at feasible scale");
  cmd_demo->add_option("--q", opt_q, "denominator, divisible by 4");
  cmd_demo->add_option("--k-target", opt_ktarget);
  cmd_demo->add_option("--N-budget", opt_n);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_classify->parsed()) {
      AngleForm theta = AngleForm::parse(theta_str);
      if (!theta.exact_rational())
        throw DomainError("bad_form", "classify needs a rational angle p/q");
      const mpq_class& v = theta.rational_value();
      auto rep =
          classify(series_kind_from_string(kind_str), v.get_num(), v.get_den());
      emit(json_of(rep));
    } else if (cmd_sum->parsed()) {
      AngleForm theta = AngleForm::parse(theta_str);
      SeriesKind kind = series_kind_from_string(kind_str);
      mpq_class alpha = parse_decimal_rational(alpha_str);
      if (accelerated) {
        if (!theta.exact_rational())
          throw DomainError("bad_form",
                            "--accelerated needs a rational angle p/q");
        const mpq_class& v = theta.rational_value();
        Ball value =
            accelerated_value(kind, v.get_num(), v.get_den(), alpha, tolerance);
        PartialSumResult r;
        r.kind = kind;
        r.theta = theta.to_string();
        r.alpha = alpha;
        r.n = 0;
        r.value = value;
        r.method = "residue_accelerated";
        emit(json_of(r, 0));
      } else {
        PrecisionBudget budget = make_budget(opt_n, digits_flag);
        auto r = partial_sum(kind, theta, alpha, opt_n, budget);
        emit(json_of(r, budget.working_digits));
      }
    } else if (cmd_rate->parsed()) {
      AngleForm theta = AngleForm::parse(theta_str);
      if (!theta.exact_rational())
        throw DomainError("bad_form", "rate-cert needs a rational angle p/q");
      const mpq_class& v = theta.rational_value();
      auto cert = rate_certificate(series_kind_from_string(kind_str),
                                   v.get_num(), v.get_den(),
                                   parse_decimal_rational(alpha_str), opt_l);
      emit(json_of(cert));
    } else if (cmd_shells->parsed()) {
      AngleForm theta = AngleForm::parse(theta_str);
      SeriesKind kind = series_kind_from_string(kind_str);
      mpq_class alpha = parse_decimal_rational(alpha_str);
      PrecisionBudget budget = make_budget(opt_nmax, digits_flag);
      if (with_fit) {
        auto fit =
            fit_gap_exponent(theta, kind, 4, opt_smax, opt_nmax, budget);
        emit(json_of(fit));
      } else {
        auto records =
            shell_sums(theta, kind, alpha, opt_smax, opt_nmax, budget);
        if (shells_format == "csv") {
          std::cout << shell_csv_header() << "\n";
          for (auto& rec : records) std::cout << shell_csv_row(rec) << "\n";
        } else {
          nlohmann::json arr = nlohmann::json::array();
          for (auto& rec : records) arr.push_back(json_of(rec));
          nlohmann::json j{{"schema", kSchemaVersion},
                           {"tool_version", kToolVersion},
                           {"shells", arr}};
          emit(j);
        }
      }
    } else if (cmd_cf->parsed()) {
      AngleForm theta = AngleForm::parse(theta_str);
      auto e = expand(theta, opt_k);
      auto cv = convergents(e);
      nlohmann::json j;
      if (static_cast<int>(e.quotients.size()) >= 3) {
        MuEstimate mu = estimate_mu(theta, opt_k);
        j = json_of(e, cv, &mu);
      } else {
        j = json_of(e, cv, nullptr);
      }
      emit(j);
    } else if (cmd_liou->parsed()) {
      auto comma = interval.find(',');
      if (comma == std::string::npos)
        throw DomainError("bad_interval", "expected --interval x1,x2");
      auto parse_endpoint = [](const std::string& s) {
        auto slash = s.find('/');
        if (slash != std::string::npos)
          return mpq_class(mpz_class(s.substr(0, slash), 10),
                           mpz_class(s.substr(slash + 1), 10));
        return parse_decimal_rational(s);
      };
      mpq_class x1 = parse_endpoint(interval.substr(0, comma));
      mpq_class x2 = parse_endpoint(interval.substr(comma + 1));
      auto schedule = build_schedule(x1, x2, opt_depth);
      std::vector<DivergenceCertificate> certs;
      for (int k = 1; k + 1 <= static_cast<int>(schedule.nu.size()); ++k)
        certs.push_back(certify(schedule, k));
      emit(json_of(schedule, certs));
    } else if (cmd_measure->parsed()) {
      auto rep = mc_estimate(parse_decimal_rational(alpha_str), opt_n,
                             opt_samples, opt_seed);
      emit(json_of(rep));
    } else if (cmd_gelfond->parsed()) {
      mpq_class z = parse_decimal_rational(z_str);
      mpq_class alpha = parse_decimal_rational(alpha_str);
      Ball sum = polylog_sum(z, alpha, tolerance);
      Ball asym = gelfond_asymptotic(z, alpha);
      Ball ratio = sum / asym;
      nlohmann::json j{{"schema", kSchemaVersion},
                       {"tool_version", kToolVersion},
                       {"z", z_str},
                       {"alpha", alpha_str},
                       {"polylog_sum", json_of(sum)},
                       {"gelfond_asymptotic", json_of(asym)},
                       {"ratio", json_of(ratio)}};
      emit(j);
    } else if (cmd_demo->parsed()) {
      auto demo = demo_divergence(opt_q, opt_ktarget, opt_n);
      emit(json_of(demo));
    }
  } catch (const InternalError& e) {
    nlohmann::json j{{"schema", kSchemaVersion},
                     {"error", e.code()},
                     {"message", e.what()}};
    std::cerr << j.dump(2) << "\n";
    return 2;
  } catch (const Error& e) {
    nlohmann::json j{{"schema", kSchemaVersion},
                     {"error", e.code()},
                     {"message", e.what()}};
    std::cerr << j.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
