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

#include "kernint/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

namespace kernint {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Series tail target before escalating the truncation order.
constexpr double kSeriesTailTarget = 1e-12;

struct PairRule {
  const char* a;
  const char* b;
  double tol;
  bool closed_form;  // comparison against the stated closed form
};

double lookup(const std::vector<std::pair<std::string, double>>& items, std::string_view key) {
  for (const auto& [k, v] : items) {
    if (k == key) return v;
  }
  return kNaN;
}

void add_quad_diag(VerificationRecord& rec, const std::string& prefix, const QuadResult& q) {
  rec.diagnostics.emplace_back(prefix + ".levels", std::int64_t{q.levels_used});
  rec.diagnostics.emplace_back(prefix + ".evaluations", std::int64_t{q.evaluations});
  rec.diagnostics.emplace_back(prefix + ".err_est", q.err_est);
  rec.diagnostics.emplace_back(prefix + ".converged", q.converged);
}

void series_path(const KernelCase& kc, const VerifyConfig& cfg, VerificationRecord& rec) {
  if (!kc.analytic()) {
    rec.inapplicable.emplace_back("c_series");
    rec.diagnostics.emplace_back("c_series.gate", std::string("non-analytic G"));
    return;
  }
  int order = cfg.terms;
  std::optional<CSeriesValue> cs;
  for (;;) {
    cs = c_series(std::get<TaylorCoeffs>(kc.g_series(order)));
    if (!cs) break;
    const double target = kSeriesTailTarget * std::max(1.0, std::abs(cs->value));
    if (cs->tail_bound <= target || order >= cfg.terms_max) break;
    order = cfg.terms_max;
  }
  if (!cs) {
    rec.inapplicable.emplace_back("c_series");
    rec.diagnostics.emplace_back("c_series.gate", std::string("F not summable at 1"));
    return;
  }
  rec.values.emplace_back("c_series", kc.lhs_scale * cs->value);
  rec.diagnostics.emplace_back("c_series.truncation", std::int64_t{order});
  rec.diagnostics.emplace_back("c_series.terms", std::int64_t{cs->terms});
  rec.diagnostics.emplace_back("c_series.tail_bound", cs->tail_bound);
}

}  // namespace

void validate(const VerifyConfig& cfg) {
  for (double tol : {cfg.tol_a, cfg.tol_series, cfg.tol_2d, cfg.tol_b, cfg.tol_partial,
                     cfg.quad_tol, cfg.quad_tol_2d}) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw ConfigError("tolerances must be positive");
  }
  if (cfg.level < 1 || cfg.level > kMaxLevel) throw ConfigError("level must be in [1, 12]");
  if (cfg.level_2d < 1 || cfg.level_2d > kMaxLevel) throw ConfigError("level_2d must be in [1, 12]");
  if (cfg.terms < 2 || cfg.terms > 160) throw ConfigError("terms must be in [2, 160]");
  if (cfg.terms_max < cfg.terms || cfg.terms_max > 160) {
    throw ConfigError("terms_max must be in [terms, 160]");
  }
  if (cfg.partial_n < 2) throw ConfigError("partial_n must be >= 2");
  if (cfg.jobs < 1) throw ConfigError("jobs must be >= 1");
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::flag: return "FLAG";
    case Status::fail: return "FAIL";
  }
  return "?";
}

std::string_view to_string(Category c) { return c == Category::A ? "A" : "B"; }

double VerificationRecord::value(std::string_view path) const { return lookup(values, path); }
double VerificationRecord::err(std::string_view pair) const { return lookup(errs, pair); }

double relative_error(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

VerificationRecord verify_case(const KernelCase& kc, const VerifyConfig& cfg, unsigned paths) {
  VerificationRecord rec;
  rec.case_name = kc.name;
  rec.params = kc.params;
  rec.category = kc.category;
  bool errored = false;

  auto guarded = [&](const char* path, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      errored = true;
      rec.diagnostics.emplace_back(std::string(path) + ".error", std::string(e.what()));
    }
  };

  if (paths & kPathReduced) {
    guarded("lhs_reduced", [&] {
      QuadOptions o;
      o.tol = cfg.quad_tol;
      o.max_level = cfg.level;
      const QuadResult q = lhs_reduced(kc.phi, o);
      rec.values.emplace_back("lhs_reduced", kc.lhs_scale * q.value);
      add_quad_diag(rec, "lhs_reduced", q);
    });
  }
  if (paths & kPathDirect2D) {
    guarded("lhs_2d", [&] {
      QuadOptions o;
      o.tol = cfg.quad_tol_2d;
      o.max_level = cfg.level_2d;
      const QuadResult q = lhs_direct_2d(kc.phi, o);
      rec.values.emplace_back("lhs_2d", kc.lhs_scale * q.value);
      add_quad_diag(rec, "lhs_2d", q);
    });
  }
  if (paths & kPathSeries) {
    guarded("c_series", [&] { series_path(kc, cfg, rec); });
  }
  if (paths & kPathClosed) {
    guarded("rhs_closed", [&] { rec.values.emplace_back("rhs_closed", kc.rhs_closed()); });
  }
  if (paths & kPathPartial) {
    if (kc.f_closed) {
      guarded("partial_limit", [&] {
        // S(N) minus the endpoint correction F(1/N)/2.
        const double n = static_cast<double>(cfg.partial_n);
        const double s = partial_term(kc.f_closed, cfg.partial_n);
        rec.values.emplace_back("partial_limit", kc.lhs_scale * (s - 0.5 * kc.f_closed(1.0 / n)));
        rec.diagnostics.emplace_back("partial_limit.n", std::int64_t{cfg.partial_n});
      });
    } else {
      rec.inapplicable.emplace_back("partial_limit");
    }
  }

  const double tol_closed = kc.category == Category::A ? cfg.tol_a : cfg.tol_b;
  const PairRule rules[] = {
      {"lhs_reduced", "lhs_2d", cfg.tol_2d, false},
      {"lhs_reduced", "c_series", cfg.tol_series, false},
      {"lhs_reduced", "partial_limit", cfg.tol_partial, false},
      {"lhs_reduced", "rhs_closed", tol_closed, true},
      {"c_series", "rhs_closed", tol_closed, true},
  };
  bool self_ok = !errored;
  bool closed_ok = true;
  for (const auto& rule : rules) {
    const double a = rec.value(rule.a);
    const double b = rec.value(rule.b);
    if (std::isnan(a) || std::isnan(b)) continue;
    const double e = relative_error(a, b);
    rec.errs.emplace_back(std::string(rule.a) + ":" + rule.b, e);
    const bool ok = e <= rule.tol;
    if (rule.closed_form) {
      closed_ok = closed_ok && ok;
    } else {
      self_ok = self_ok && ok;
    }
  }

  if (!self_ok) {
    rec.status = Status::fail;
  } else if (closed_ok) {
    rec.status = Status::pass;
  } else if (kc.category == Category::A) {
    rec.status = Status::fail;
  } else {
    rec.status = Status::flag;
  }
  const double lhs = rec.value("lhs_reduced");
  const double rhs = rec.value("rhs_closed");
  if (rec.status == Status::flag && !std::isnan(lhs) && !std::isnan(rhs)) {
    rec.discrepancy = Discrepancy{lhs, rhs, relative_error(lhs, rhs)};
  }
  if (kc.lhs_scale != 1.0) rec.diagnostics.emplace_back("lhs_scale", kc.lhs_scale);
  return rec;
}

namespace {

std::vector<VerificationRecord> evaluate_all(const std::vector<KernelCase>& cases,
                                             const VerifyConfig& cfg,
                                             const std::vector<unsigned>& masks) {
  std::vector<VerificationRecord> out(cases.size());
  if (cfg.jobs <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) out[i] = verify_case(cases[i], cfg, masks[i]);
    return out;
  }
  // Cases are independent; results are placed by catalog index.
  std::size_t next = 0;
  while (next < cases.size()) {
    std::vector<std::future<VerificationRecord>> batch;
    const std::size_t end = std::min(cases.size(), next + static_cast<std::size_t>(cfg.jobs));
    for (std::size_t i = next; i < end; ++i) {
      batch.push_back(std::async(std::launch::async,
                                 [&, i] { return verify_case(cases[i], cfg, masks[i]); }));
    }
    for (std::size_t i = next; i < end; ++i) out[i] = batch[i - next].get();
    next = end;
  }
  return out;
}

}  // namespace

std::vector<VerificationRecord> run_verify(const VerifyConfig& cfg) {
  validate(cfg);
  std::vector<KernelCase> cases;
  if (cfg.case_name.empty()) {
    cases = list_cases();
  } else {
    cases.push_back(find_case(cfg.case_name));
  }
  return evaluate_all(cases, cfg, std::vector<unsigned>(cases.size(), kAllPaths));
}

std::vector<VerificationRecord> run_base_sweep(std::span<const double> s_values,
                                               const VerifyConfig& cfg) {
  validate(cfg);
  std::vector<KernelCase> cases;
  std::vector<unsigned> masks;
  for (double s : s_values) {
    if (!(s > -2.0)) throw std::invalid_argument("base sweep: every s must exceed -2");
    cases.push_back(case_monomial(s));
    masks.push_back(kPathReduced | kPathClosed | (s >= 0.0 ? kPathDirect2D : 0u));
  }
  return evaluate_all(cases, cfg, masks);
}

RateRecord run_asymptotic(std::string_view case_name, long n_start, int doublings) {
  const KernelCase kc = find_case(case_name);
  if (!kc.f_closed || kc.v < 1) {
    throw std::invalid_argument("case '" + kc.name + "' has no closed-form F");
  }
  if (doublings < 4) throw std::invalid_argument("asymptotic: need at least 5 N values");
  RateRecord rec;
  rec.case_name = kc.name;
  rec.v = kc.v;
  if (kc.category == Category::A) {
    rec.reference = kc.rhs_closed();
    rec.reference_source = "rhs_closed";
  } else {
    rec.reference = lhs_reduced(kc.phi).value;
    rec.reference_source = "lhs_reduced";
  }
  rec.points = rate_points(kc.f_closed, rec.reference, n_start, doublings);
  rec.fit = rate_fit(rec.points);
  rec.status = std::abs(rec.fit.slope + rec.v) <= rec.slope_tolerance ? Status::pass : Status::fail;
  return rec;
}

int exit_code(std::span<const VerificationRecord> records) {
  for (const auto& r : records) {
    if (r.category == Category::A && r.status == Status::fail) return 1;
  }
  return 0;
}

}  // namespace kernint
