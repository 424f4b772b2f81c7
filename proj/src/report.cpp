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

#include "trigpow/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace trigpow {

using nlohmann::json;

namespace {

std::string q_str(const mpq_class& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string dbl17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json base_report() {
  return json{{"schema", kSchemaVersion}, {"tool_version", kToolVersion}};
}

}  // namespace

json json_of(const Ball& b) {
  return json{{"mid", b.mid_string(25)},
              {"rad", b.rad_string()},
              {"mid_double", b.mid_double()},
              {"rad_double", b.rad_double()}};
}

json json_of(const ClassificationReport& r) {
  json units = json::array();
  for (auto& [a, sign] : r.unit_residues)
    units.push_back(json{{"a", a}, {"sign", sign}});
  json j = base_report();
  j["kind"] = to_string(r.kind);
  j["p"] = r.p.get_str();
  j["q"] = r.q.get_str();
  j["was_reduced"] = r.was_reduced;
  j["class"] = to_string(r.cls);
  j["unit_residues"] = units;
  if (r.a0.has_value())
    j["a0"] = *r.a0;
  else
    j["a0"] = nullptr;
  j["alpha_range"] = r.alpha_range;
  return j;
}

json json_of(const PartialSumResult& r, int working_digits) {
  json j = base_report();
  j["kind"] = to_string(r.kind);
  j["theta"] = r.theta;
  j["alpha"] = q_str(r.alpha);
  j["alpha_double"] = r.alpha.get_d();
  j["N"] = r.n;
  j["value"] = json_of(r.value);
  j["terms_evaluated"] = r.terms_evaluated;
  j["method"] = r.method;
  j["working_digits"] = working_digits;
  return j;
}

json json_of(const RateCertificate& r) {
  json j = base_report();
  j["kind"] = to_string(r.kind);
  j["p"] = r.p.get_str();
  j["q"] = r.q.get_str();
  j["A_q"] = r.a_q.get_str();
  j["L"] = r.big_l;
  j["alpha"] = q_str(r.alpha);
  j["lower_bound"] = json_of(r.lower_bound);
  j["observed"] = json_of(r.observed);
  j["valid"] = r.valid;
  return j;
}

json json_of(const ContinuedFractionExpansion& e,
             const std::vector<Convergent>& cv, const MuEstimate* mu) {
  json j = base_report();
  j["a0"] = e.a0.get_str();
  json qs = json::array();
  for (auto& a : e.quotients) qs.push_back(a.get_str());
  j["quotients"] = qs;
  j["input_rational"] = e.input_rational;
  j["truncated_by_interval"] = e.truncated_by_interval;
  if (e.source_precision_digits)
    j["source_precision_digits"] = e.source_precision_digits;
  json conv = json::array();
  for (auto& c : cv)
    conv.push_back(
        json{{"k", c.k}, {"p", c.p.get_str()}, {"q", c.q.get_str()}});
  j["convergents"] = conv;
  if (mu != nullptr) {
    j["mu_estimate"] = json{{"mu_hat", mu->mu_hat},
                            {"rational", mu->rational},
                            {"window", {mu->window_lo, mu->window_hi}},
                            {"ratios", mu->ratios}};
  }
  return j;
}

json json_of(const GapFit& fit) {
  json j = base_report();
  j["theta"] = fit.theta;
  j["kind"] = to_string(fit.kind);
  j["s_range"] = {fit.s_lo, fit.s_hi};
  j["shells_used"] = fit.shells_used;
  j["log_eps"] = fit.log_eps;
  j["log_min_norm_gap"] = fit.log_min_norm_gap;
  j["fitted_exponent"] = fit.fitted_exponent;
  j["mu_used"] = fit.mu_used;
  j["mu_defaulted"] = fit.mu_defaulted;
  j["nu_expected"] = fit.nu_expected;
  return j;
}

json json_of(const LiouvilleSchedule& s,
             const std::vector<DivergenceCertificate>& certs) {
  json j = base_report();
  j["x1"] = q_str(s.x1);
  j["x2"] = q_str(s.x2);
  j["u"] = s.u.get_str();
  j["b"] = s.b;
  json nus = json::array();
  for (auto& nu : s.nu) nus.push_back(nu.get_str());
  j["nu"] = nus;
  json as = json::array();
  for (std::size_t i = 0; i < s.a_values.size(); ++i)
    as.push_back(
        json{{"A", s.a_values[i].get_str()}, {"method", s.a_method[i]}});
  j["A_values"] = as;
  j["xi0"] = q_str(s.xi0);
  j["xi1"] = q_str(s.xi1);
  json cj = json::array();
  for (auto& c : certs) {
    cj.push_back(json{{"k", c.k},
                      {"nu_k", c.nu_k.get_str()},
                      {"nu_k1", c.nu_k1.get_str()},
                      {"A_q", c.a_q.get_str()},
                      {"log2_L", c.l_exponent.get_str()},
                      {"log2_N", c.n_exponent.get_str()},
                      {"slack", q_str(c.slack)},
                      {"lower_bound", c.lower_bound},
                      {"identity_ok", c.identity_ok}});
  }
  j["certificates"] = cj;
  return j;
}

json json_of(const MonteCarloReport& r) {
  json j = base_report();
  j["alpha"] = q_str(r.alpha);
  j["alpha_double"] = r.alpha.get_d();
  j["N"] = r.n;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["rng"] = r.rng;
  j["theta_digits"] = r.theta_digits;
  j["sample_mean"] = r.sample_mean;
  j["sample_stddev"] = r.sample_stddev;
  j["standard_error"] = r.standard_error;
  j["expected"] = r.expected;
  j["z_score"] = r.z_score;
  return j;
}

json json_of(const DivergenceDemo& d) {
  json j = base_report();
  j["q"] = d.q;
  j["k_target"] = d.k_target;
  j["n_budget"] = d.n_budget;
  j["A_q"] = d.a_q.get_str();
  json pts = json::array();
  for (auto& p : d.points)
    pts.push_back(json{{"kind", to_string(p.kind)},
                       {"L", p.big_l},
                       {"observed", p.observed},
                       {"bound", p.bound}});
  j["points"] = pts;
  j["exceeded"] = d.exceeded;
  return j;
}

json json_of(const ShellRecord& rec) {
  json j = base_report();
  j["s"] = rec.s;
  j["kind"] = to_string(rec.kind);
  j["theta"] = rec.theta;
  j["alpha"] = q_str(rec.alpha);
  j["n_max"] = rec.n_max;
  j["count"] = rec.count;
  j["first_member"] = rec.first_member;
  j["min_gap"] = rec.min_gap;
  j["min_norm_gap"] = rec.min_norm_gap;
  j["shell_sum"] = json_of(rec.shell_sum);
  j["tail_bound"] = rec.tail_bound;
  j["truncated"] = rec.truncated;
  if (!rec.members.empty()) j["members"] = rec.members;
  return j;
}

std::string shell_csv_header() {
  return "s,epsilon,count,min_gap,shell_sum_mid,shell_sum_rad,truncated";
}

std::string shell_csv_row(const ShellRecord& rec) {
  CsvShellRow row;
  row.s = rec.s;
  row.epsilon = std::ldexp(1.0, -rec.s);
  row.count = rec.count;
  row.min_gap = rec.min_gap;
  row.shell_sum_mid = rec.shell_sum.mid_double();
  row.shell_sum_rad = rec.shell_sum.rad_double();
  row.truncated = rec.truncated;
  return shell_csv_row(row);
}

std::string shell_csv_row(const CsvShellRow& row) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%d,%s,%" PRIu64 ",%" PRIu64 ",%s,%s,%d",
                row.s, dbl17(row.epsilon).c_str(), row.count, row.min_gap,
                dbl17(row.shell_sum_mid).c_str(),
                dbl17(row.shell_sum_rad).c_str(), row.truncated ? 1 : 0);
  return buf;
}

CsvShellRow parse_shell_csv_row(const std::string& line) {
  CsvShellRow row;
  std::istringstream in(line);
  std::string tok;
  auto next = [&]() {
    if (!std::getline(in, tok, ','))
      throw DomainError("bad_csv", "short shell CSV row: " + line);
    return tok;
  };
  row.s = std::stoi(next());
  row.epsilon = std::stod(next());
  row.count = std::stoull(next());
  row.min_gap = std::stoull(next());
  row.shell_sum_mid = std::stod(next());
  row.shell_sum_rad = std::stod(next());
  row.truncated = std::stoi(next()) != 0;
  return row;
}

}  // namespace trigpow
