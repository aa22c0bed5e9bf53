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
#include <span>
#include <vector>

#include "kernint/quadrature.hpp"
#include "kernint/series.hpp"

namespace kernint {

/// phi(t) = G(t)/t^2 on (0, inf), with t = -log(xy) in the kernel integral.
struct StableIntegrand {
  std::function<double(double)> phi;
  /// p with phi(t) ~ const * t^{-p} as t -> 0 (p < 2; p <= 0 means phi
  /// vanishes or is bounded there).
  double sing_order = 0.0;
  /// t^p * phi(t); required when p >= 1 so the singular factor can be paired
  /// with the weight instead of being evaluated on its own.
  std::function<double(double)> scaled;
  /// Optional bound on |phi| for large t.
  std::function<double(double)> envelope;

  /// phi(t), routed through `scaled` when present.
  double operator()(double t) const;
};

/// W(t) = e^{-t} (t - 1 + e^{-t}) / (1 - e^{-t}); the kernel integral equals
/// int_0^inf phi(t) W(t) dt.
double weight_W(double t);
/// W(t) / t, finite as t -> 0 (limit 1/2).
double weight_W_over_t(double t);

/// int_0^inf phi(t) W(t) dt by exp-sinh.
QuadResult lhs_reduced(const StableIntegrand& phi, const QuadOptions& opts = {});

/// int_0^1 int_0^1 (1 - x)/(1 - xy) phi(-log xy) dx dy by iterated tanh-sinh.
QuadResult lhs_direct_2d(const StableIntegrand& phi, const QuadOptions& opts = {});

/// Gamma(s + 2) (zeta(s + 2) - 1/(s + 1)) for s > -2, equal to the Euler
/// constant at s = -1.
double rhs_monomial(double s);

/// phi(t) = t^s, s > -2.
StableIntegrand monomial_integrand(double s);

struct CSeriesValue {
  double value;
  double tail_bound;
  /// Number of nonzero terms summed.
  int terms;
  /// Plain partial sum before extrapolation.
  double raw_sum;
};

/// sum_{s>=1} (s - 1)! g_s zeta_reg(s), i.e. g_1 gamma + sum_{s>=2} f_s
/// (zeta(s) - 1/(s - 1)). Returns nullopt when F = g_to_f(G) fails the
/// summability check. The truncated tail is extrapolated with Wynn's epsilon
/// algorithm (iterated Aitken) over the partial sums.
std::optional<CSeriesValue> c_series(const TaylorCoeffs& g);

/// sum_{k=1}^N F(1/k) - int_1^N F(1/t) dt.
double partial_term(const std::function<double(double)>& f, long n);

struct RatePoint {
  long n;
  double s_n;
  double err;
};

struct RateFit {
  double slope;
  double r2;
};

/// Least-squares fit of log err against log N.
RateFit rate_fit(std::span<const RatePoint> points);

/// Partial terms at N = n_start * 2^i, i = 0..doublings, against `reference`.
std::vector<RatePoint> rate_points(const std::function<double(double)>& f, double reference,
                                   long n_start, int doublings);

}  // namespace kernint
