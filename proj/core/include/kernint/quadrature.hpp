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
#include <stdexcept>
#include <string>
#include <vector>

namespace kernint {

struct QuadResult {
  double value = 0.0;
  /// |I_L - I_{L-1}| at the final level L.
  double err_est = 0.0;
  int levels_used = 0;
  long evaluations = 0;
  /// False when the tolerance was not met by the level cap.
  bool converged = false;
  /// err_est after each level >= 1, in order.
  std::vector<double> level_errors;
};

struct QuadOptions {
  /// Target on err_est, absolute for |I| <= 1 and relative above.
  double tol = 1e-12;
  int max_level = 12;
  int min_level = 3;
  /// Optional bound on |f| used to excuse non-finite values at extreme nodes.
  std::function<double(double)> envelope;
  /// tanh-sinh only: skip nodes closer than this to either endpoint. Zero keeps
  /// the full table (down to ~1e-300); tensor_2d_01 defaults to 1e-100.
  double endpoint_floor = 0.0;
};

/// Thrown for a non-finite integrand value at a node that carries weight.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Integrand = std::function<double(double)>;
/// f(x, 1 - x): both arguments are accurate near their endpoint.
using SplitIntegrand = std::function<double(double, double)>;
/// f(x, 1 - x, y, 1 - y)
using SplitIntegrand2D = std::function<double(double, double, double, double)>;

inline constexpr int kMaxLevel = 12;

/// tanh-sinh on (0, 1): x = (1 + tanh(pi/2 sinh u)) / 2, step 1 halved per level.
QuadResult tanh_sinh_01(const Integrand& f, const QuadOptions& opts = {});
QuadResult tanh_sinh_01(const SplitIntegrand& f, const QuadOptions& opts = {});

/// exp-sinh on (0, inf): t = exp(pi/2 sinh u). Nodes are confined to
/// [1e-300, 745], beyond which an e^{-t}-weighted integrand is negligible.
QuadResult exp_sinh_0inf(const Integrand& f, const QuadOptions& opts = {});

/// Iterated tanh-sinh on the open unit square, inner in y, outer in x, each
/// axis capped at opts.max_level (default 9 when left at kMaxLevel).
QuadResult tensor_2d_01(const SplitIntegrand2D& f, const QuadOptions& opts = {});

namespace detail {

struct Node {
  double u;
  double x;   // abscissa
  double xc;  // 1 - x for tanh-sinh, unused (0) for exp-sinh
  double w;   // dx/du
};

/// Nodes new at each level, each level sorted by ascending |u|.
const std::vector<std::vector<Node>>& tanh_sinh_nodes();
const std::vector<std::vector<Node>>& exp_sinh_nodes();

}  // namespace detail

}  // namespace kernint
