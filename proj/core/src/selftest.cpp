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

#include <cmath>

#include "kernint/quadrature.hpp"
#include "kernint/report.hpp"
#include "kernint/specfun.hpp"

namespace kernint {
namespace {

using constants::euler_gamma;
using constants::pi;

SelfTestItem relative(std::string name, double got, double expected, double tol) {
  const bool ok = std::abs(got - expected) <= tol * std::abs(expected);
  return {std::move(name), got, expected, tol, ok};
}

SelfTestItem absolute(std::string name, double got, double expected, double tol) {
  return {std::move(name), got, expected, tol, std::abs(got - expected) <= tol};
}

}  // namespace

std::vector<SelfTestItem> run_selftest() {
  std::vector<SelfTestItem> out;
  out.push_back(relative("gamma_fn(1)", gamma_fn(1.0), 1.0, 1e-13));
  out.push_back(relative("gamma_fn(5)", gamma_fn(5.0), 24.0, 1e-13));
  out.push_back(relative("gamma_fn(0.5)", gamma_fn(0.5), std::sqrt(pi), 1e-13));
  out.push_back(relative("zeta(2)", zeta(2.0), pi * pi / 6.0, 1e-13));
  out.push_back(relative("zeta(4)", zeta(4.0), std::pow(pi, 4) / 90.0, 1e-13));
  out.push_back(relative("zeta_reg(1)", zeta_reg(1.0), euler_gamma, 1e-13));
  out.push_back(relative("zeta_reg(2)", zeta_reg(2.0), pi * pi / 6.0 - 1.0, 1e-13));
  out.push_back(relative("digamma(1)", digamma(1.0), -euler_gamma, 1e-12));
  out.push_back(relative("digamma(2)", digamma(2.0), 1.0 - euler_gamma, 1e-12));
  out.push_back(relative("polygamma(1, 1)", polygamma(1, 1.0), pi * pi / 6.0, 1e-12));
  out.push_back(relative("polygamma(1, 1/2)", polygamma(1, 0.5), pi * pi / 2.0, 1e-12));
  out.push_back(absolute("bessel_j0(0)", bessel_j0(0.0), 1.0, 1e-12));

  QuadOptions q;
  q.tol = 1e-11;
  out.push_back(absolute("tanh_sinh_01 1", tanh_sinh_01([](double) { return 1.0; }, q).value, 1.0, 1e-11));
  out.push_back(absolute("tanh_sinh_01 -log x",
                         tanh_sinh_01([](double x) { return -std::log(x); }, q).value, 1.0, 1e-11));
  out.push_back(absolute("tanh_sinh_01 1/sqrt(x)",
                         tanh_sinh_01([](double x) { return 1.0 / std::sqrt(x); }, q).value, 2.0,
                         1e-11));
  out.push_back(absolute("exp_sinh_0inf e^-t",
                         exp_sinh_0inf([](double t) { return std::exp(-t); }, q).value, 1.0, 1e-11));
  out.push_back(absolute("exp_sinh_0inf t e^-t",
                         exp_sinh_0inf([](double t) { return t * std::exp(-t); }, q).value, 1.0,
                         1e-11));
  out.push_back(absolute("exp_sinh_0inf e^-t^2",
                         exp_sinh_0inf([](double t) { return std::exp(-t * t); }, q).value,
                         std::sqrt(pi) / 2.0, 1e-11));
  out.push_back(absolute("tensor_2d_01 1",
                         tensor_2d_01([](double, double, double, double) { return 1.0; }, q).value,
                         1.0, 1e-11));
  QuadOptions q2;
  q2.tol = 1e-8;
  out.push_back(absolute(
      "tensor_2d_01 (1-x)/(1-xy)",
      tensor_2d_01([](double x, double xc, double, double yc) { return xc / (xc + x * yc); }, q2)
          .value,
      pi * pi / 6.0 - 1.0, 1e-6));
  out.push_back(absolute("tensor_2d_01 (1-x)(-log xy)/(1-xy)",
                         tensor_2d_01(
                             [](double x, double xc, double y, double yc) {
                               const double t = -(std::log(x) + std::log(y));
                               return xc * t / (xc + x * yc);
                             },
                             q2)
                             .value,
                         2.0 * zeta(3.0) - 1.0, 1e-6));
  return out;
}

}  // namespace kernint
