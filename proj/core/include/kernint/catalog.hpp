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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kernint/kernel.hpp"
#include "kernint/series.hpp"

namespace kernint {

enum class Category {
  A,  // closed form must match
  B,  // closed form is compared and reported; mismatch is flagged
};

struct CaseParam {
  std::string name;
  double value;
};

/// One kernel-integral identity.
struct KernelCase {
  /// Stable public identifier, e.g. "ex2@a=0.5".
  std::string name;
  /// The function G, for display.
  std::string label;
  std::vector<CaseParam> params;
  StableIntegrand phi;
  /// G as a product of series factors; may contain a non-analytic marker.
  std::vector<SeriesKind> g_factors;
  /// Closed form of F on (0, 1]; empty when not known.
  std::function<double(double)> f_closed;
  /// Leading order of G (0 when G is not analytic at the origin).
  int v = 0;
  /// The identity's left side is lhs_scale times the kernel integral of phi.
  double lhs_scale = 1.0;
  std::function<double()> rhs_closed;
  Category category = Category::A;

  /// G's coefficients to order M, or NonAnalytic.
  GSeries g_series(int order) const { return build_product(g_factors, order); }
  bool analytic() const;
};

/// Every identity in canonical order: ex1, ex2 (a = 0.25, 0.5, 0.9), ex3, ex4,
/// catalan, fam1 grid, fam2 grid, glaisher, then monomials over the sweep set.
std::vector<KernelCase> list_cases();

/// Resolves a public name such as "ex2@a=0.3" or "fam1@c=1,m=3", including
/// parameter values off the default grid. Throws std::invalid_argument for
/// unknown names or out-of-range parameters.
KernelCase find_case(std::string_view name);

KernelCase case_ex1();
KernelCase case_ex2(double a);
KernelCase case_ex3();
KernelCase case_ex4();
KernelCase case_catalan();
KernelCase case_family_exp_sech(double c, int m);
KernelCase case_family_sech(double c, int m);
KernelCase case_glaisher();
KernelCase case_monomial(double s);

/// The s values of the base sweep.
std::vector<double> monomial_sweep();

double rhs_ex2(double a);
double rhs_ex3();
double rhs_ex4();
double rhs_catalan();
double rhs_family_exp_sech(double c, int m);
double rhs_family_sech(double c, int m);
double rhs_glaisher();

/// Shortest round-trip decimal for a parameter value, as used in case names.
std::string format_param(double v);

}  // namespace kernint
