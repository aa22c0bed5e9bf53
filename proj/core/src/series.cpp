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

#include "kernint/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kernint {
namespace {

constexpr double kGhostThreshold = 1e-14;

void require_order(int order) {
  if (order < 2) throw std::invalid_argument("series: truncation order must be >= 2");
}

int detect_leading(std::vector<double>& c) {
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  const int size = static_cast<int>(c.size());
  if (scale == 0.0) return size;
  for (int j = 0; j < size; ++j) {
    if (std::abs(c[static_cast<std::size_t>(j)]) > kGhostThreshold * scale) return j;
    c[static_cast<std::size_t>(j)] = 0.0;
  }
  return size;
}

// Coefficients of sum_j sign^j (param^2)^j / (2j)! x^{2j}.
std::vector<double> even_trig(double param, double sign, int order) {
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  double term = 1.0;
  c[0] = 1.0;
  for (int j = 1; 2 * j <= order; ++j) {
    term *= sign * param * param / ((2.0 * j - 1.0) * (2.0 * j));
    c[static_cast<std::size_t>(2 * j)] = term;
  }
  return c;
}

}  // namespace

TaylorCoeffs::TaylorCoeffs(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("TaylorCoeffs: empty coefficient list");
  leading_ = detect_leading(c_);
}

TaylorCoeffs::TaylorCoeffs(std::vector<double> coeffs, int leading_order)
    : c_(std::move(coeffs)), leading_(leading_order) {
  if (c_.empty()) throw std::invalid_argument("TaylorCoeffs: empty coefficient list");
  const int size = static_cast<int>(c_.size());
  leading_ = std::clamp(leading_, 0, size);
  for (int j = 0; j < leading_; ++j) c_[static_cast<std::size_t>(j)] = 0.0;
}

TaylorCoeffs::TaylorCoeffs(std::vector<double> coeffs, std::vector<double> residual,
                           int leading_order)
    : TaylorCoeffs(std::move(coeffs), leading_order) {
  if (residual.size() != c_.size()) {
    throw std::invalid_argument("TaylorCoeffs: residual length mismatch");
  }
  r_ = std::move(residual);
  for (int j = 0; j < leading_; ++j) r_[static_cast<std::size_t>(j)] = 0.0;
}

TaylorCoeffs TaylorCoeffs::zero(int order) {
  return TaylorCoeffs(std::vector<double>(static_cast<std::size_t>(order) + 1, 0.0),
                      order + 1);
}

GSeries build(SeriesKind kind, int order) {
  require_order(order);
  if (!std::isfinite(kind.param)) throw std::invalid_argument("series: non-finite parameter");
  using Tag = SeriesKind::Tag;
  const auto size = static_cast<std::size_t>(order) + 1;
  switch (kind.tag) {
    case Tag::monomial: {
      const double p = kind.param;
      if (p < 0.0 || p != std::floor(p)) {
        return NonAnalytic{"x^" + std::to_string(p) + " is not analytic at 0"};
      }
      if (p > order) return TaylorCoeffs::zero(order);
      std::vector<double> c(size, 0.0);
      c[static_cast<std::size_t>(p)] = 1.0;
      return TaylorCoeffs(std::move(c), static_cast<int>(p));
    }
    case Tag::cos:
      return TaylorCoeffs(even_trig(kind.param, -1.0, order));
    case Tag::cosh:
      return TaylorCoeffs(even_trig(kind.param, 1.0, order));
    case Tag::sech:
      return reciprocal(TaylorCoeffs(even_trig(kind.param, 1.0, order)));
    case Tag::j0: {
      std::vector<double> c(size, 0.0);
      double term = 1.0;
      c[0] = 1.0;
      for (int j = 1; 2 * j <= order; ++j) {
        term *= -0.25 / (static_cast<double>(j) * j);
        c[static_cast<std::size_t>(2 * j)] = term;
      }
      return TaylorCoeffs(std::move(c), 0);
    }
    case Tag::exp_neg: {
      if (kind.param < 0.0) throw std::invalid_argument("series: exp(-c x) needs c >= 0");
      std::vector<double> c(size, 0.0);
      double term = 1.0;
      c[0] = 1.0;
      for (int j = 1; j <= order; ++j) {
        term *= -kind.param / j;
        c[static_cast<std::size_t>(j)] = term;
      }
      return TaylorCoeffs(std::move(c), 0);
    }
    case Tag::log_marker:
      return NonAnalytic{"logarithmic factor"};
  }
  throw std::invalid_argument("series: unsupported kind");
}

GSeries build_product(std::span<const SeriesKind> factors, int order) {
  require_order(order);
  std::vector<double> one(static_cast<std::size_t>(order) + 1, 0.0);
  one[0] = 1.0;
  TaylorCoeffs acc(std::move(one), 0);
  for (const auto& kind : factors) {
    GSeries part = build(kind, order);
    if (auto* flag = std::get_if<NonAnalytic>(&part)) return *flag;
    acc = mul(acc, std::get<TaylorCoeffs>(part));
  }
  return acc;
}

TaylorCoeffs build_coeffs(SeriesKind kind, int order) {
  GSeries s = build(kind, order);
  if (auto* flag = std::get_if<NonAnalytic>(&s)) {
    throw std::invalid_argument("series: no coefficients for non-analytic kind (" +
                                flag->reason + ")");
  }
  return std::get<TaylorCoeffs>(std::move(s));
}

TaylorCoeffs mul(const TaylorCoeffs& a, const TaylorCoeffs& b) {
  const int order = std::min(a.truncation_order(), b.truncation_order());
  const int lead = a.leading_order() + b.leading_order();
  if (lead > order) return TaylorCoeffs::zero(order);
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  for (int n = lead; n <= order; ++n) {
    double sum = 0.0;
    for (int k = a.leading_order(); k <= n - b.leading_order(); ++k) sum += a[k] * b[n - k];
    c[static_cast<std::size_t>(n)] = sum;
  }
  return TaylorCoeffs(std::move(c), lead);
}

TaylorCoeffs reciprocal(const TaylorCoeffs& a) {
  if (a[0] == 0.0) throw std::invalid_argument("reciprocal: zero constant term");
  const int order = a.truncation_order();
  std::vector<double> b(static_cast<std::size_t>(order) + 1, 0.0);
  b[0] = 1.0 / a[0];
  for (int n = 1; n <= order; ++n) {
    double sum = 0.0;
    for (int k = 1; k <= n; ++k) sum += a[k] * b[static_cast<std::size_t>(n - k)];
    b[static_cast<std::size_t>(n)] = -sum * b[0];
  }
  return TaylorCoeffs(std::move(b), 0);
}

TaylorCoeffs linear_combination(double alpha, const TaylorCoeffs& a, double beta,
                                const TaylorCoeffs& b) {
  const int order = std::min(a.truncation_order(), b.truncation_order());
  std::vector<double> c(static_cast<std::size_t>(order) + 1);
  // A coefficient is a roundoff ghost only if it cancelled against its own
  // inputs; a global max-based threshold would wipe out the low orders of a
  // factorially growing F.
  int leading = order + 1;
  for (int j = 0; j <= order; ++j) {
    const double v = alpha * a[j] + beta * b[j];
    c[static_cast<std::size_t>(j)] = v;
    if (leading > order && std::abs(v) > 1e-14 * (std::abs(alpha * a[j]) + std::abs(beta * b[j]))) {
      leading = j;
    }
  }
  return TaylorCoeffs(std::move(c), leading);
}

TaylorCoeffs g_to_f(const TaylorCoeffs& g) {
  if (g.leading_order() < 1) throw std::invalid_argument("g_to_f: G has a nonzero constant term");
  const int order = g.truncation_order();
  std::vector<double> f(static_cast<std::size_t>(order) + 1, 0.0);
  std::vector<double> lo(f.size(), 0.0);
  double factorial = 1.0;  // (m - 1)!, rounded the same way in f_to_g
  for (int m = 1; m <= order; ++m) {
    if (m > 1) factorial *= (m - 1);
    const auto i = static_cast<std::size_t>(m);
    // TwoProduct: f + lo == factorial * g exactly. Scaling by a factorial is
    // not injective in binary64, so without lo the inverse loses bits.
    f[i] = factorial * g[m];
    lo[i] = std::fma(factorial, g[m], -f[i]);
  }
  return TaylorCoeffs(std::move(f), std::move(lo), g.leading_order());
}

TaylorCoeffs laplace_g_to_f(const TaylorCoeffs& g) {
  if (g.leading_order() < 1) {
    throw std::invalid_argument("laplace_g_to_f: G has a nonzero constant term");
  }
  const int order = g.truncation_order();
  const auto size = static_cast<std::size_t>(order) + 1;

  // Laplace image: coefficient of p^{-(m+1)} is g_m m!.
  std::vector<double> image(size + 1, 0.0);
  double factorial = 1.0;
  for (int m = 1; m <= order; ++m) {
    factorial *= m;
    image[static_cast<std::size_t>(m) + 1] = g[m] * factorial;
  }
  // p = 1/s turns p^{-(m+1)} into s^{m+1}; dividing by s^2 leaves s^{m-1}.
  std::vector<double> integrand(size, 0.0);
  for (int m = 1; m <= order; ++m) {
    integrand[static_cast<std::size_t>(m) - 1] = image[static_cast<std::size_t>(m) + 1];
  }
  // Termwise antiderivative; the constant is fixed by F(0) = 0.
  std::vector<double> f(size, 0.0);
  for (int m = 1; m <= order; ++m) {
    f[static_cast<std::size_t>(m)] = integrand[static_cast<std::size_t>(m) - 1] / m;
  }
  return TaylorCoeffs(std::move(f), g.leading_order());
}

TaylorCoeffs f_to_g(const TaylorCoeffs& f) {
  if (f.leading_order() < 1) throw std::invalid_argument("f_to_g: F(0) must vanish");
  const int order = f.truncation_order();
  std::vector<double> g(static_cast<std::size_t>(order) + 1, 0.0);
  double factorial = 1.0;
  for (int m = 1; m <= order; ++m) {
    if (m > 1) factorial *= (m - 1);
    double q = f[m] / factorial;
    if (std::isfinite(q) && q != 0.0) {
      // One Newton step against the exact product recovers g bit for bit.
      const double rem = std::fma(-q, factorial, f[m]) + f.residual(m);
      q += rem / factorial;
    }
    g[static_cast<std::size_t>(m)] = q;
  }
  return TaylorCoeffs(std::move(g), f.leading_order());
}

DecayEstimate decay_estimate(const TaylorCoeffs& a) {
  DecayEstimate est;
  const int order = a.truncation_order();
  std::vector<int> nonzero;
  for (int j = a.leading_order(); j <= order; ++j) {
    if (a[j] != 0.0) nonzero.push_back(j);
  }
  if (nonzero.empty()) {
    est.polynomial = true;
    return est;
  }
  est.last_index = nonzero.back();
  if (nonzero.back() <= order / 2 || nonzero.size() < 2) {
    est.polynomial = true;
    return est;
  }

  const std::size_t window = std::min<std::size_t>(nonzero.size(), 8);
  std::vector<double> ratios;
  for (std::size_t i = nonzero.size() - window; i + 1 < nonzero.size(); ++i) {
    const int j0 = nonzero[i];
    const int j1 = nonzero[i + 1];
    ratios.push_back(std::pow(std::abs(a[j1] / a[j0]), 1.0 / (j1 - j0)));
  }
  est.ratio = *std::max_element(ratios.begin(), ratios.end());
  est.growing = ratios.size() >= 2 && ratios.back() > 1.02 * ratios.front();
  return est;
}

SeriesValue evaluate(const TaylorCoeffs& a, double x) {
  const int order = a.truncation_order();
  double value = 0.0;
  for (int j = order; j >= 0; --j) value = value * x + a[j];
  if (x == 0.0) return {value, 0.0};

  const DecayEstimate est = decay_estimate(a);
  if (est.polynomial) return {value, 0.0};
  const double q = est.ratio * std::abs(x);
  if (est.growing || q >= 1.0) return {value, std::numeric_limits<double>::infinity()};
  const double last = std::abs(a[est.last_index]) * std::pow(std::abs(x), est.last_index);
  return {value, last * q / (1.0 - q)};
}

Summability summability_check(const TaylorCoeffs& f) {
  const DecayEstimate est = decay_estimate(f);
  if (est.polynomial) return Summability::summable_at_1;
  if (est.growing || est.ratio >= 0.99) return Summability::divergent;
  return Summability::summable_at_1;
}

}  // namespace kernint
