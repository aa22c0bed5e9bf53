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

#include "kernint/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kernint {
namespace detail {
namespace {

constexpr double kHalfPi = 1.57079632679489661923;
constexpr long double kHalfPiL = 1.570796326794896619231321691639751442L;
constexpr double kTiny = 1e-300;
constexpr double kExpSinhUpper = 745.0;

std::vector<double> level_abscissae(int level, double limit) {
  // Ascending |u|: 0 (level 0 only), then +u, -u pairs.
  std::vector<double> u;
  if (level == 0) {
    u.push_back(0.0);
    for (int k = 1; k <= limit; ++k) {
      u.push_back(k);
      u.push_back(-k);
    }
    return u;
  }
  const double h = std::ldexp(1.0, -level);
  for (long k = 0;; ++k) {
    const double v = (2.0 * k + 1.0) * h;
    if (v > limit) break;
    u.push_back(v);
    u.push_back(-v);
  }
  return u;
}

std::vector<std::vector<Node>> make_tanh_sinh() {
  // |u| beyond asinh(345 * 2/pi) puts the smaller of x, 1-x below ~1e-300.
  const double limit = std::asinh(345.0 / kHalfPi);
  std::vector<std::vector<Node>> table;
  for (int level = 0; level <= kMaxLevel; ++level) {
    std::vector<Node> nodes;
    for (double u : level_abscissae(level, limit)) {
      // Extended precision: exp(-2|v|) amplifies the rounding of v by 2|v|.
      const long double v = kHalfPiL * std::sinh(static_cast<long double>(u));
      const long double e = std::exp(-2.0L * std::fabs(v));
      const auto small = static_cast<double>(e / (1.0L + e));
      const auto large = static_cast<double>(1.0L / (1.0L + e));
      const auto w = static_cast<double>(kHalfPiL * std::cosh(static_cast<long double>(u)) * 2.0L *
                                         e / ((1.0L + e) * (1.0L + e)));
      if (small < kTiny) continue;
      nodes.push_back(u >= 0 ? Node{u, large, small, w} : Node{u, small, large, w});
    }
    table.push_back(std::move(nodes));
  }
  return table;
}

std::vector<std::vector<Node>> make_exp_sinh() {
  const double limit = std::asinh(-std::log(kTiny) / kHalfPi);
  std::vector<std::vector<Node>> table;
  for (int level = 0; level <= kMaxLevel; ++level) {
    std::vector<Node> nodes;
    for (double u : level_abscissae(level, limit)) {
      const long double tl = std::exp(kHalfPiL * std::sinh(static_cast<long double>(u)));
      const auto t = static_cast<double>(tl);
      if (t < kTiny || t > kExpSinhUpper) continue;
      const auto w = static_cast<double>(tl * kHalfPiL * std::cosh(static_cast<long double>(u)));
      nodes.push_back(Node{u, t, 0.0, w});
    }
    table.push_back(std::move(nodes));
  }
  return table;
}

}  // namespace

// Built once on first use (thread-safe local statics), immutable afterwards.
const std::vector<std::vector<Node>>& tanh_sinh_nodes() {
  static const auto table = make_tanh_sinh();
  return table;
}

const std::vector<std::vector<Node>>& exp_sinh_nodes() {
  static const auto table = make_exp_sinh();
  return table;
}

}  // namespace detail

namespace {

template <typename Eval>
QuadResult run_levels(const std::vector<std::vector<detail::Node>>& table, Eval&& eval,
                      const QuadOptions& opts) {
  const int cap = std::clamp(opts.max_level, 1, kMaxLevel);
  QuadResult r;
  double sum = 0.0;
  double prev = 0.0;
  for (int level = 0; level <= cap; ++level) {
    for (const auto& node : table[static_cast<std::size_t>(level)]) {
      if (opts.endpoint_floor > 0.0 && node.xc != 0.0 &&
          std::min(node.x, node.xc) < opts.endpoint_floor) {
        continue;
      }
      double fx = eval(node);
      ++r.evaluations;
      if (!std::isfinite(fx)) {
        const double env = opts.envelope ? opts.envelope(node.x) : 1.0;
        if (node.w * env < 1e-300) {
          fx = 0.0;
        } else {
          std::ostringstream msg;
          msg.precision(17);
          msg << "non-finite integrand at x = " << node.x << " (level " << level << ")";
          throw QuadratureError(msg.str());
        }
      }
      sum += node.w * fx;
    }
    const double estimate = sum * std::ldexp(1.0, -level);
    r.value = estimate;
    r.levels_used = level;
    if (level > 0) {
      r.err_est = std::abs(estimate - prev);
      r.level_errors.push_back(r.err_est);
      if (level >= opts.min_level && r.err_est <= opts.tol * std::max(1.0, std::abs(estimate))) {
        r.converged = true;
        break;
      }
    }
    prev = estimate;
  }
  return r;
}

}  // namespace

QuadResult tanh_sinh_01(const Integrand& f, const QuadOptions& opts) {
  return run_levels(
      detail::tanh_sinh_nodes(), [&](const detail::Node& n) { return f(n.x); }, opts);
}

QuadResult tanh_sinh_01(const SplitIntegrand& f, const QuadOptions& opts) {
  return run_levels(
      detail::tanh_sinh_nodes(), [&](const detail::Node& n) { return f(n.x, n.xc); }, opts);
}

QuadResult exp_sinh_0inf(const Integrand& f, const QuadOptions& opts) {
  return run_levels(
      detail::exp_sinh_nodes(), [&](const detail::Node& n) { return f(n.x); }, opts);
}

QuadResult tensor_2d_01(const SplitIntegrand2D& f, const QuadOptions& opts) {
  QuadOptions axis = opts;
  if (axis.max_level >= kMaxLevel) axis.max_level = 9;
  if (axis.endpoint_floor <= 0.0) axis.endpoint_floor = 1e-100;
  axis.envelope = nullptr;

  long inner_evals = 0;
  double weighted_inner_err = 0.0;  // sum of w_x * inner err over outer nodes
  auto outer = [&](const detail::Node& nx) {
    const QuadResult inner = tanh_sinh_01(
        SplitIntegrand([&](double y, double yc) { return f(nx.x, nx.xc, y, yc); }), axis);
    inner_evals += inner.evaluations;
    weighted_inner_err += nx.w * inner.err_est;
    return inner.value;
  };
  QuadResult r = run_levels(detail::tanh_sinh_nodes(), outer, axis);
  const double inner_err = weighted_inner_err * std::ldexp(1.0, -r.levels_used);
  r.evaluations = inner_evals;
  r.err_est += inner_err;
  r.converged = r.converged && inner_err <= axis.tol * std::max(1.0, std::abs(r.value));
  return r;
}

}  // namespace kernint
