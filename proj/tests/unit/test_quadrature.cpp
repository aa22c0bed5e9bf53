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

#include <atomic>
#include <cmath>
#include <future>
#include <limits>
#include <vector>

#include "doctest.h"
#include "kernint/quadrature.hpp"
#include "kernint/specfun.hpp"
#include "oracles.hpp"

using namespace kernint;
using oracle::ld;

namespace {

QuadOptions at(double tol) {
  QuadOptions o;
  o.tol = tol;
  return o;
}

}  // namespace

TEST_CASE("tanh_sinh_01 exactness battery") {
  const auto o = at(1e-11);
  CHECK(std::abs(tanh_sinh_01([](double) { return 1.0; }, o).value - 1.0) <= 1e-11);
  CHECK(std::abs(tanh_sinh_01([](double x) { return -std::log(x); }, o).value - 1.0) <= 1e-11);
  CHECK(std::abs(tanh_sinh_01([](double x) { return 1.0 / std::sqrt(x); }, o).value - 2.0) <=
        1e-11);
  // Split form sees 1 - x exactly near the right end.
  const auto r = tanh_sinh_01(SplitIntegrand([](double, double xc) { return -std::log(xc); }), o);
  CHECK(std::abs(r.value - 1.0) <= 1e-11);
  CHECK(r.converged);
}

TEST_CASE("exp_sinh_0inf exactness battery") {
  const auto o = at(1e-11);
  CHECK(std::abs(exp_sinh_0inf([](double t) { return std::exp(-t); }, o).value - 1.0) <= 1e-11);
  CHECK(std::abs(exp_sinh_0inf([](double t) { return t * std::exp(-t); }, o).value - 1.0) <=
        1e-11);
  CHECK(std::abs(exp_sinh_0inf([](double t) { return std::exp(-t * t); }, o).value -
                 std::sqrt(constants::pi) / 2.0) <= 1e-11);
  // Algebraic singularity at the origin: Gamma(1/2).
  CHECK(std::abs(exp_sinh_0inf([](double t) { return std::exp(-t) / std::sqrt(t); }, o).value -
                 std::sqrt(constants::pi)) <= 1e-11);
}

TEST_CASE("tensor_2d_01 battery") {
  const auto one = tensor_2d_01([](double, double, double, double) { return 1.0; }, at(1e-11));
  CHECK(std::abs(one.value - 1.0) <= 1e-11);

  const auto o = at(1e-8);
  const auto s0 = tensor_2d_01(
      [](double x, double xc, double, double yc) { return xc / (xc + x * yc); }, o);
  CHECK(std::abs(s0.value - (zeta(2.0) - 1.0)) <= 1e-6);

  const auto s1 = tensor_2d_01(
      [](double x, double xc, double y, double yc) {
        return xc * -(std::log(x) + std::log(y)) / (xc + x * yc);
      },
      o);
  CHECK(std::abs(s1.value - 1.4041138063) <= 1e-6);
  CHECK(std::abs(s1.value - (2.0 * zeta(3.0) - 1.0)) <= 1e-6);
}

TEST_CASE("node tables satisfy the transform identities") {
  const auto& ts = detail::tanh_sinh_nodes();
  REQUIRE(ts.size() == static_cast<std::size_t>(kMaxLevel) + 1);
  int checked = 0;
  for (std::size_t level = 0; level < ts.size() && checked < 100; level += 3) {
    const auto& nodes = ts[level];
    for (std::size_t i = 0; i < nodes.size() && checked < 100; i += 7, ++checked) {
      const auto& n = nodes[i];
      const ld v = oracle::kPi / 2 * std::sinh(ld(n.u));
      const ld x = (1 + std::tanh(v)) / 2;
      const ld c = std::cosh(v);
      const ld w = oracle::kPi / 4 * std::cosh(ld(n.u)) / (c * c);
      CAPTURE(n.u);
      const double small = std::min(n.x, n.xc);
      const ld small_want = std::exp(-2 * std::fabs(v)) / (1 + std::exp(-2 * std::fabs(v)));
      CHECK(std::abs(small - static_cast<double>(small_want)) <= 1e-15 * small);
      CHECK(std::abs(n.x - static_cast<double>(x)) <= 1e-15);
      CHECK(n.x + n.xc == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(std::abs(n.w - static_cast<double>(w)) <= 1e-15 * n.w);
    }
  }
  CHECK(checked == 100);

  const auto& es = detail::exp_sinh_nodes();
  for (std::size_t level = 0; level < es.size(); level += 4) {
    for (std::size_t i = 0; i < es[level].size(); i += 11) {
      const auto& n = es[level][i];
      const ld t = std::exp(oracle::kPi / 2 * std::sinh(ld(n.u)));
      CHECK(std::abs(n.x - static_cast<double>(t)) <= 1e-15 * n.x);
      CHECK(std::abs(n.w - static_cast<double>(t * oracle::kPi / 2 * std::cosh(ld(n.u)))) <=
            1e-15 * n.w);
      CHECK(n.x >= 1e-300);
      CHECK(n.x <= 745.0);
    }
  }
}

TEST_CASE("nodes within a level are ordered by ascending |u|") {
  for (const auto* table : {&detail::tanh_sinh_nodes(), &detail::exp_sinh_nodes()}) {
    for (const auto& level : *table) {
      for (std::size_t i = 1; i < level.size(); ++i) {
        CHECK(std::abs(level[i - 1].u) <= std::abs(level[i].u));
      }
    }
  }
}

TEST_CASE("error estimate shrinks with level on smooth integrands") {
  QuadOptions o = at(1e-300);  // never converge early: walk every level
  o.max_level = 6;
  const std::vector<std::function<double(double)>> smooth01 = {
      [](double x) { return std::exp(x); },
      [](double x) { return 1.0 / (1.0 + x * x); },
      [](double x) { return std::cos(3.0 * x); },
  };
  for (const auto& f : smooth01) {
    const auto r = tanh_sinh_01(f, o);
    REQUIRE(r.level_errors.size() >= 3u);  // may stop early on an exact zero difference
    for (std::size_t i = 1; i < r.level_errors.size(); ++i) {
      CHECK(r.level_errors[i] <= std::max(r.level_errors[i - 1], 1e-15));
    }
  }
  const auto r = exp_sinh_0inf([](double t) { return std::exp(-t) * std::cos(t); }, o);
  for (std::size_t i = 1; i < r.level_errors.size(); ++i) {
    CHECK(r.level_errors[i] <= std::max(r.level_errors[i - 1], 1e-15));
  }
}

TEST_CASE("err_est is the last level difference and evaluations are counted") {
  long calls = 0;
  const auto r = tanh_sinh_01(
      [&](double x) {
        ++calls;
        return std::exp(x);
      },
      at(1e-12));
  CHECK(r.evaluations == calls);
  CHECK(r.converged);
  REQUIRE(!r.level_errors.empty());
  CHECK(r.err_est == r.level_errors.back());
  CHECK(r.levels_used >= 3);
  CHECK(std::abs(r.value - (std::exp(1.0) - 1.0)) <= 1e-12);

  std::atomic<long> calls2d{0};
  const auto r2 = tensor_2d_01(
      [&](double x, double, double y, double) {
        ++calls2d;
        return x * y;
      },
      at(1e-10));
  CHECK(r2.evaluations == calls2d.load());
}

TEST_CASE("non-finite values") {
  // Interior blow-up is an error.
  CHECK_THROWS_AS(tanh_sinh_01([](double x) { return x > 0.4 && x < 0.6 ? NAN : 1.0; }),
                  QuadratureError);
  // Tail underflow regions are forgiven when the envelope says they are negligible.
  QuadOptions o;
  o.envelope = [](double t) { return std::exp(-t); };
  const auto r = exp_sinh_0inf(
      [](double t) { return t > 700.0 ? std::numeric_limits<double>::infinity() : std::exp(-t); },
      o);
  CHECK(std::abs(r.value - 1.0) <= 1e-12);
}

TEST_CASE("level cap reached without convergence is reported, not thrown") {
  QuadOptions o = at(1e-14);
  o.max_level = 3;
  const auto r = tanh_sinh_01([](double x) { return std::sin(200.0 * x); }, o);
  CHECK_FALSE(r.converged);
  CHECK(r.levels_used == 3);
}

TEST_CASE("results are bit-identical across threads") {
  auto job = [] {
    return exp_sinh_0inf([](double t) { return std::exp(-t) * std::log1p(t); }).value;
  };
  const double ref = job();
  std::vector<std::future<double>> fs;
  for (int i = 0; i < 8; ++i) fs.push_back(std::async(std::launch::async, job));
  for (auto& f : fs) CHECK(f.get() == ref);
}
