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

#include <benchmark/benchmark.h>

#include <cmath>

#include "kernint/catalog.hpp"
#include "kernint/kernel.hpp"
#include "kernint/quadrature.hpp"
#include "kernint/series.hpp"
#include "kernint/specfun.hpp"
#include "kernint/verify.hpp"

using namespace kernint;

static void BM_TanhSinhLog(benchmark::State& state) {
  QuadOptions o;
  o.tol = 1e-12;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tanh_sinh_01([](double x) { return -std::log(x); }, o).value);
  }
}
BENCHMARK(BM_TanhSinhLog);

static void BM_ExpSinhGauss(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(exp_sinh_0inf([](double t) { return std::exp(-t * t); }).value);
  }
}
BENCHMARK(BM_ExpSinhGauss);

static void BM_Zeta(benchmark::State& state) {
  double s = 1.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta(s));
    s = s < 30.0 ? s + 0.37 : 1.5;
  }
}
BENCHMARK(BM_Zeta);

static void BM_ZetaReg(benchmark::State& state) {
  double s = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta_reg(s));
    s = s < 5.0 ? s + 0.013 : 0.1;
  }
}
BENCHMARK(BM_ZetaReg);

static void BM_BesselJ0(benchmark::State& state) {
  const double x0 = static_cast<double>(state.range(0));
  double x = x0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j0(x));
    x = x < x0 + 5.0 ? x + 0.01 : x0;
  }
}
BENCHMARK(BM_BesselJ0)->Arg(0)->Arg(12)->Arg(40);

static void BM_LhsReduced(benchmark::State& state) {
  const auto kc = case_ex3();
  QuadOptions o;
  o.tol = 1e-13;
  for (auto _ : state) benchmark::DoNotOptimize(lhs_reduced(kc.phi, o).value);
}
BENCHMARK(BM_LhsReduced);

static void BM_LhsDirect2D(benchmark::State& state) {
  const auto phi = monomial_integrand(1.0);
  QuadOptions o;
  o.tol = 1e-9;
  for (auto _ : state) benchmark::DoNotOptimize(lhs_direct_2d(phi, o).value);
}
BENCHMARK(BM_LhsDirect2D)->Unit(benchmark::kMillisecond);

static void BM_CSeries(benchmark::State& state) {
  const auto g = std::get<TaylorCoeffs>(case_ex2(0.9).g_series(80));
  for (auto _ : state) benchmark::DoNotOptimize(c_series(g));
}
BENCHMARK(BM_CSeries);

static void BM_DefaultSuite(benchmark::State& state) {
  VerifyConfig cfg;
  cfg.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_verify(cfg).size());
}
BENCHMARK(BM_DefaultSuite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
