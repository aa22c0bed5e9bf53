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

#include "kernint/kernel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "kernint/specfun.hpp"

namespace kernint {
namespace {

// (t - 1 + e^{-t}) / t^2, Taylor form below 0.1.
double weight_core(double t) {
  if (t < 0.1) {
    // sum_{k>=2} (-t)^{k-2} / k!
    double term = 0.5;
    double sum = 0.5;
    for (int k = 3; k < 20; ++k) {
      term *= -t / k;
      sum += term;
    }
    return sum;
  }
  return (t - 1.0 + std::exp(-t)) / (t * t);
}

struct Estimate {
  double value;
  double err;
};

// Wynn's epsilon algorithm; keeps the even-column entry whose change from the
// previous even column is smallest.
Estimate wynn_epsilon(std::span<const double> sums) {
  std::vector<double> prev(sums.size() + 1, 0.0);
  std::vector<double> cur(sums.begin(), sums.end());
  Estimate best{sums.back(), std::abs(sums.back() - sums[sums.size() - 2])};
  double last_even = sums.back();
  for (int k = 1; cur.size() > 1; ++k) {
    std::vector<double> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0.0) return best;
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 0) {
      const double est = cur.back();
      const double err = std::abs(est - last_even);
      if (std::isfinite(est) && err < best.err) best = {est, err};
      last_even = est;
    }
  }
  return best;
}

}  // namespace

double StableIntegrand::operator()(double t) const {
  if (scaled) return scaled(t) * std::pow(t, -sing_order);
  return phi(t);
}

double weight_W_over_t(double t) {
  if (!(t > 0.0)) throw std::domain_error("weight_W: t must be positive");
  // e^{-t} * (t - 1 + e^{-t})/t^2 * t/(1 - e^{-t})
  return std::exp(-t) * weight_core(t) * (t / -std::expm1(-t));
}

double weight_W(double t) { return t * weight_W_over_t(t); }

QuadResult lhs_reduced(const StableIntegrand& phi, const QuadOptions& opts) {
  QuadOptions o = opts;
  if (phi.envelope) {
    o.envelope = [&phi](double t) { return phi.envelope(t) * weight_W(t); };
  }
  if (phi.sing_order >= 1.0) {
    if (!phi.scaled) {
      throw std::invalid_argument("lhs_reduced: p >= 1 requires the scaled form t^p phi(t)");
    }
    const double p = phi.sing_order;
    return exp_sinh_0inf(
        [&phi, p](double t) { return phi.scaled(t) * weight_W_over_t(t) * std::pow(t, 1.0 - p); },
        o);
  }
  return exp_sinh_0inf([&phi](double t) { return phi(t) * weight_W(t); }, o);
}

QuadResult lhs_direct_2d(const StableIntegrand& phi, const QuadOptions& opts) {
  auto f = [&phi](double x, double xc, double y, double yc) {
    const double one_minus = xc + x * yc;  // 1 - xy
    double t;
    if (one_minus < 1e-12) {
      t = one_minus;  // -log(1 - d) = d to first order
    } else if (x * y < 0.5) {
      t = -(std::log(x) + std::log(y));
    } else {
      t = -std::log1p(-one_minus);
    }
    return xc / one_minus * phi(t);
  };
  return tensor_2d_01(f, opts);
}

double rhs_monomial(double s) {
  if (!(s > -2.0)) throw std::domain_error("rhs_monomial: s must exceed -2");
  return gamma_fn(s + 2.0) * zeta_reg(s + 2.0);
}

StableIntegrand monomial_integrand(double s) {
  if (!(s > -2.0)) throw std::domain_error("monomial_integrand: s must exceed -2");
  StableIntegrand si;
  si.phi = [s](double t) { return std::pow(t, s); };
  si.envelope = si.phi;
  if (s < 0.0) {
    si.sing_order = -s;
    if (s <= -1.0) si.scaled = [](double) { return 1.0; };
  }
  return si;
}

std::optional<CSeriesValue> c_series(const TaylorCoeffs& g) {
  const TaylorCoeffs f = g_to_f(g);
  if (summability_check(f) == Summability::divergent) return std::nullopt;

  std::vector<double> sums;
  double sum = 0.0;
  double last_term = 0.0;
  for (int s = f.leading_order(); s <= f.truncation_order(); ++s) {
    if (f[s] == 0.0) continue;
    last_term = f[s] * zeta_reg(s);
    sum += last_term;
    sums.push_back(sum);
  }
  const int terms = static_cast<int>(sums.size());
  if (terms == 0) return CSeriesValue{0.0, 0.0, 0, 0.0};

  const DecayEstimate decay = decay_estimate(f);
  if (decay.polynomial) return CSeriesValue{sum, 0.0, terms, sum};

  const double geometric = std::abs(last_term) * decay.ratio / (1.0 - decay.ratio);
  if (geometric <= 1e-16 * std::abs(sum) || sums.size() < 3) {
    return CSeriesValue{sum, geometric, terms, sum};
  }
  const Estimate acc = wynn_epsilon(sums);
  return CSeriesValue{acc.value, acc.err, terms, sum};
}

double partial_term(const std::function<double(double)>& f, long n) {
  if (n < 2) throw std::invalid_argument("partial_term: N must be >= 2");
  // Neumaier summation, smallest terms first.
  double sum = 0.0;
  double comp = 0.0;
  for (long k = n; k >= 1; --k) {
    const double term = f(1.0 / static_cast<double>(k));
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  sum += comp;

  // int_1^N F(1/t) dt with t = e^w, w in (0, log N), mapped onto (0, 1).
  const double span = std::log(static_cast<double>(n));
  QuadOptions o;
  o.tol = 1e-15;
  const QuadResult integral = tanh_sinh_01(
      [&f, span](double x) {
        const double w = span * x;
        return f(std::exp(-w)) * std::exp(w);
      },
      o);
  return sum - span * integral.value;
}

RateFit rate_fit(std::span<const RatePoint> points) {
  if (points.size() < 5) throw std::invalid_argument("rate_fit: need at least 5 points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  long prev_n = 0;
  for (const auto& p : points) {
    if (!(p.err > 0.0) || !std::isfinite(p.err)) {
      throw std::invalid_argument("rate_fit: errors must be positive and finite");
    }
    if (p.n <= prev_n) throw std::invalid_argument("rate_fit: N must be strictly increasing");
    prev_n = p.n;
    const double x = std::log(static_cast<double>(p.n));
    const double y = std::log(p.err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double m = static_cast<double>(points.size());
  const double vx = sxx - sx * sx / m;
  const double vy = syy - sy * sy / m;
  const double cxy = sxy - sx * sy / m;
  // Relative test: constant data leaves only roundoff in the variances.
  if (vx <= 1e-12 * sxx || vy <= 1e-12 * syy) throw std::invalid_argument("rate_fit: degenerate data");
  return {cxy / vx, cxy * cxy / (vx * vy)};
}

std::vector<RatePoint> rate_points(const std::function<double(double)>& f, double reference,
                                   long n_start, int doublings) {
  if (n_start < 2 || doublings < 0) throw std::invalid_argument("rate_points: bad N grid");
  std::vector<RatePoint> out;
  for (int i = 0; i <= doublings; ++i) {
    const long n = n_start << i;
    const double s = partial_term(f, n);
    out.push_back({n, s, std::abs(s - reference)});
  }
  return out;
}

}  // namespace kernint
