/*
 * Copyright (C) 2026 The kernint Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "kernint/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace kernint {
namespace {

using ojson = nlohmann::ordered_json;

ojson to_json(const DiagValue& v) {
  return std::visit([](const auto& x) { return ojson(x); }, v);
}

ojson config_json(const VerifyConfig& cfg) {
  ojson j;
  j["case"] = cfg.case_name.empty() ? ojson(nullptr) : ojson(cfg.case_name);
  j["tol_a"] = cfg.tol_a;
  j["tol_series"] = cfg.tol_series;
  j["tol_2d"] = cfg.tol_2d;
  j["tol_b"] = cfg.tol_b;
  j["tol_partial"] = cfg.tol_partial;
  j["quad_tol"] = cfg.quad_tol;
  j["quad_tol_2d"] = cfg.quad_tol_2d;
  j["level"] = cfg.level;
  j["level_2d"] = cfg.level_2d;
  j["terms"] = cfg.terms;
  j["terms_max"] = cfg.terms_max;
  j["partial_n"] = cfg.partial_n;
  return j;
}

ojson record_json(const VerificationRecord& r) {
  ojson j;
  j["case"] = r.case_name;
  ojson params = ojson::object();
  for (const auto& p : r.params) params[p.name] = p.value;
  j["params"] = params;
  ojson values = ojson::object();
  for (const auto& [k, v] : r.values) values[k] = v;
  j["values"] = values;
  ojson errs = ojson::object();
  for (const auto& [k, v] : r.errs) errs[k] = v;
  j["errs"] = errs;
  j["status"] = std::string(to_string(r.status));
  ojson diag = ojson::object();
  diag["category"] = std::string(to_string(r.category));
  diag["inapplicable"] = r.inapplicable;
  for (const auto& [k, v] : r.diagnostics) diag[k] = to_json(v);
  j["diagnostics"] = diag;
  if (r.discrepancy) {
    j["discrepancy"] = {{"lhs", r.discrepancy->lhs},
                        {"rhs", r.discrepancy->rhs},
                        {"rel_err", r.discrepancy->rel_err}};
  }
  return j;
}

std::string cell(double v) {
  if (std::isnan(v)) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string err_cell(double v) {
  if (std::isnan(v)) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

void pad(std::ostringstream& out, const std::string& s, std::size_t width) {
  out << s;
  for (std::size_t i = s.size(); i < width; ++i) out << ' ';
}

}  // namespace

std::string render(std::span<const VerificationRecord> records, const VerifyConfig& cfg,
                   Format format) {
  if (format == Format::json) {
    ojson root;
    root["config"] = config_json(cfg);
    root["records"] = ojson::array();
    for (const auto& r : records) root["records"].push_back(record_json(r));
    return root.dump(2) + "\n";
  }

  std::ostringstream out;
  if (records.empty()) return "";
  const char* paths[] = {"lhs_reduced", "lhs_2d", "c_series", "rhs_closed", "partial_limit"};
  pad(out, "case", 18);
  pad(out, "cat", 4);
  for (const char* p : paths) pad(out, p, 20);
  pad(out, "err(2d)", 10);
  pad(out, "err(rhs)", 10);
  out << "status\n";
  for (const auto& r : records) {
    pad(out, r.case_name, 18);
    pad(out, std::string(to_string(r.category)), 4);
    for (const char* p : paths) {
      const bool gated =
          std::find(r.inapplicable.begin(), r.inapplicable.end(), p) != r.inapplicable.end();
      pad(out, gated ? "n/a" : cell(r.value(p)), 20);
    }
    pad(out, err_cell(r.err("lhs_reduced:lhs_2d")), 10);
    pad(out, err_cell(r.err("lhs_reduced:rhs_closed")), 10);
    out << to_string(r.status) << "\n";
  }
  return out.str();
}

std::string render(const RateRecord& r, Format format) {
  if (format == Format::json) {
    ojson root;
    ojson cfg;
    cfg["case"] = r.case_name;
    cfg["n_start"] = r.points.empty() ? 0 : r.points.front().n;
    cfg["n_doublings"] = r.points.empty() ? 0 : static_cast<long>(r.points.size()) - 1;
    root["config"] = cfg;
    ojson rate;
    rate["case"] = r.case_name;
    rate["v"] = r.v;
    rate["reference"] = r.reference;
    rate["reference_source"] = r.reference_source;
    rate["points"] = ojson::array();
    for (const auto& p : r.points) rate["points"].push_back({{"n", p.n}, {"s_n", p.s_n}, {"err", p.err}});
    rate["slope"] = r.fit.slope;
    rate["r2"] = r.fit.r2;
    rate["slope_tolerance"] = r.slope_tolerance;
    rate["status"] = std::string(to_string(r.status));
    root["rate"] = rate;
    return root.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "case " << r.case_name << "  v = " << r.v << "  reference (" << r.reference_source
      << ") = " << cell(r.reference) << "\n";
  pad(out, "N", 10);
  pad(out, "S(N)", 22);
  out << "|S(N) - ref|\n";
  for (const auto& p : r.points) {
    pad(out, std::to_string(p.n), 10);
    pad(out, cell(p.s_n), 22);
    out << err_cell(p.err) << "\n";
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "slope %.4f (expected %d +/- %.2f), r^2 %.6f  %s\n", r.fit.slope,
                -r.v, r.slope_tolerance, r.fit.r2, std::string(to_string(r.status)).c_str());
  out << buf;
  return out.str();
}

std::string render(std::span<const SelfTestItem> items, Format format) {
  if (format == Format::json) {
    ojson root = ojson::array();
    for (const auto& it : items) {
      root.push_back({{"name", it.name},
                      {"got", it.got},
                      {"expected", it.expected},
                      {"tol", it.tol},
                      {"ok", it.ok}});
    }
    return root.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& it : items) {
    pad(out, it.ok ? "PASS" : "FAIL", 6);
    pad(out, it.name, 38);
    out << cell(it.got) << "  (expected " << cell(it.expected) << ", tol " << err_cell(it.tol)
        << ")\n";
  }
  return out.str();
}

}  // namespace kernint
