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

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace kernint {

/// Truncated power series c_0 + c_1 x + ... + c_M x^M about the origin.
///
/// leading_order() is the index of the first nonzero coefficient, or M + 1
/// for the zero series. Coefficients below the leading order are stored as
/// exact zeros.
class TaylorCoeffs {
 public:
  /// Detects the leading order with the relative threshold
  /// |c_j| > 1e-14 * max|c| and clears the roundoff ghosts below it.
  explicit TaylorCoeffs(std::vector<double> coeffs);
  /// Takes the leading order as given; used where it is known structurally.
  TaylorCoeffs(std::vector<double> coeffs, int leading_order);
  /// As above, plus the exact rounding residual of each coefficient, so that
  /// coeffs[j] + residual[j] is the unrounded value.
  TaylorCoeffs(std::vector<double> coeffs, std::vector<double> residual, int leading_order);

  static TaylorCoeffs zero(int order);

  int truncation_order() const { return static_cast<int>(c_.size()) - 1; }
  int leading_order() const { return leading_; }
  bool is_zero() const { return leading_ > truncation_order(); }
  double operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
  std::span<const double> coeffs() const { return c_; }
  /// Zero unless the series came out of an error-free transform (g_to_f).
  double residual(int j) const {
    return r_.empty() ? 0.0 : r_[static_cast<std::size_t>(j)];
  }

 private:
  std::vector<double> c_;
  std::vector<double> r_;
  int leading_ = 0;
};

/// Named building blocks for G. `log_marker` stands for a factor that is not
/// analytic at the origin (e.g. log x) and never yields coefficients.
struct SeriesKind {
  enum class Tag { monomial, cos, cosh, sech, j0, exp_neg, log_marker };
  Tag tag;
  double param = 0.0;

  static SeriesKind monomial(double p) { return {Tag::monomial, p}; }
  static SeriesKind cos(double a) { return {Tag::cos, a}; }
  static SeriesKind cosh(double b) { return {Tag::cosh, b}; }
  static SeriesKind sech(double b) { return {Tag::sech, b}; }
  static SeriesKind j0() { return {Tag::j0, 0.0}; }
  static SeriesKind exp_neg(double c) { return {Tag::exp_neg, c}; }
  static SeriesKind log_marker() { return {Tag::log_marker, 0.0}; }
};

struct NonAnalytic {
  std::string reason;
};

using GSeries = std::variant<TaylorCoeffs, NonAnalytic>;

/// Coefficients of the named function to order M (M >= 2). A log marker or a
/// non-integer monomial power yields NonAnalytic.
GSeries build(SeriesKind kind, int order);
/// Product of the factors, formed with mul().
GSeries build_product(std::span<const SeriesKind> factors, int order);
/// Like build() but throws std::invalid_argument for non-analytic kinds.
TaylorCoeffs build_coeffs(SeriesKind kind, int order);

/// Cauchy product truncated to min(M_A, M_B).
TaylorCoeffs mul(const TaylorCoeffs& a, const TaylorCoeffs& b);
/// B with mul(A, B) = 1 to truncation order. Requires c_0 != 0.
TaylorCoeffs reciprocal(const TaylorCoeffs& a);
/// alpha * A + beta * B, truncated to the shorter order.
TaylorCoeffs linear_combination(double alpha, const TaylorCoeffs& a, double beta,
                                const TaylorCoeffs& b);

/// f_m = (m - 1)! g_m for m >= 1, f_0 = 0. Requires g_0 == 0.
TaylorCoeffs g_to_f(const TaylorCoeffs& g);
/// The Laplace-transform pipeline on coefficients: g_m x^m -> g_m m!/p^{m+1},
/// p = 1/s, times 1/s^2, then termwise integration with F(0) = 0.
TaylorCoeffs laplace_g_to_f(const TaylorCoeffs& g);
/// g_m = f_m / (m - 1)!; inverse of g_to_f.
TaylorCoeffs f_to_g(const TaylorCoeffs& f);

struct SeriesValue {
  double value;
  /// Geometric bound on the omitted tail; +inf signals divergence evidence.
  double tail_bound;
};

/// Horner evaluation for |x| <= 1 plus a tail estimate from the decay ratio
/// of the trailing coefficients.
SeriesValue evaluate(const TaylorCoeffs& a, double x);

enum class Summability { summable_at_1, divergent };

Summability summability_check(const TaylorCoeffs& f);

struct DecayEstimate {
  /// True when the highest nonzero coefficient sits in the lower half, i.e.
  /// the truncation looks like an exact polynomial.
  bool polynomial = false;
  /// Largest per-index ratio |c_{j+d}/c_j|^{1/d} over the trailing window.
  double ratio = 0.0;
  /// Ratios increase across the window (factorial-type growth).
  bool growing = false;
  int last_index = -1;
};

DecayEstimate decay_estimate(const TaylorCoeffs& a);

}  // namespace kernint
