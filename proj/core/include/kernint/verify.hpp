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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "kernint/catalog.hpp"
#include "kernint/kernel.hpp"

namespace kernint {

/// Tolerances are relative: |a - b| / max(|a|, |b|).
struct VerifyConfig {
  /// Empty selects the whole catalog.
  std::string case_name;
  double tol_a = 1e-8;        // category-A closed-form match
  double tol_series = 1e-8;   // reduced path vs c-series
  double tol_2d = 1e-4;       // reduced path vs direct 2-D
  double tol_b = 1e-6;        // category-B closed form; above this the record is flagged
  double tol_partial = 1e-6;  // reduced path vs corrected partial term
  double quad_tol = 1e-13;
  double quad_tol_2d = 1e-9;
  int level = 12;
  int level_2d = 9;
  int terms = 40;
  int terms_max = 80;
  long partial_n = 10000;
  int jobs = 1;
  bool json = false;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ConfigError on non-positive tolerances or out-of-range caps.
void validate(const VerifyConfig& cfg);

/// Applies `key = value` lines (with `#` comments) on top of `base`.
VerifyConfig parse_config(std::string_view text, VerifyConfig base = {});
VerifyConfig load_config_file(const std::string& path, VerifyConfig base = {});

enum class Status { pass, flag, fail };
std::string_view to_string(Status s);
std::string_view to_string(Category c);

using DiagValue = std::variant<double, std::int64_t, std::string, bool>;

struct Discrepancy {
  double lhs;
  double rhs;
  double rel_err;
};

struct VerificationRecord {
  std::string case_name;
  std::vector<CaseParam> params;
  Category category = Category::A;
  /// path -> value, in computation order: lhs_reduced, lhs_2d, c_series,
  /// rhs_closed, partial_limit.
  std::vector<std::pair<std::string, double>> values;
  /// "pathA:pathB" -> relative error.
  std::vector<std::pair<std::string, double>> errs;
  Status status = Status::pass;
  std::vector<std::pair<std::string, DiagValue>> diagnostics;
  /// Paths gated out for this case.
  std::vector<std::string> inapplicable;
  std::optional<Discrepancy> discrepancy;

  /// NaN when the path or pair is absent.
  double value(std::string_view path) const;
  double err(std::string_view pair) const;
};

enum PathMask : unsigned {
  kPathReduced = 1u << 0,
  kPathDirect2D = 1u << 1,
  kPathSeries = 1u << 2,
  kPathClosed = 1u << 3,
  kPathPartial = 1u << 4,
  kAllPaths = 0x1fu,
};

double relative_error(double a, double b);

VerificationRecord verify_case(const KernelCase& kc, const VerifyConfig& cfg,
                               unsigned paths = kAllPaths);

/// One record per catalog case in canonical order, or the single named case.
std::vector<VerificationRecord> run_verify(const VerifyConfig& cfg);

/// Reduced path (and 2-D for s >= 0) against the monomial closed form.
std::vector<VerificationRecord> run_base_sweep(std::span<const double> s_values,
                                               const VerifyConfig& cfg);

struct RateRecord {
  std::string case_name;
  int v = 0;
  double reference = 0.0;
  /// "rhs_closed" or "lhs_reduced".
  std::string reference_source;
  std::vector<RatePoint> points;
  RateFit fit{};
  double slope_tolerance = 0.2;
  Status status = Status::fail;
};

/// Partial terms at N = n_start * 2^i and the fitted log-log slope; passes
/// when |slope + v| <= 0.2. Throws std::invalid_argument if the case has no
/// closed-form F.
RateRecord run_asymptotic(std::string_view case_name, long n_start = 10, int doublings = 9);

/// 0 unless a category-A record failed (then 1).
int exit_code(std::span<const VerificationRecord> records);

}  // namespace kernint
