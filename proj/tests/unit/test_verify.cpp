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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "kernint/specfun.hpp"
#include "kernint/verify.hpp"

using namespace kernint;

namespace {

VerifyConfig only(std::string name) {
  VerifyConfig c;
  c.case_name = std::move(name);
  return c;
}

int computed_paths(const VerificationRecord& r) {
  int n = 0;
  for (const auto& [k, v] : r.values) n += std::isfinite(v) ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("default sweep") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto records = run_verify(VerifyConfig{});
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 10.0);
  REQUIRE(records.size() == list_cases().size());
  CHECK(exit_code(records) == 0);

  for (const auto& r : records) {
    CAPTURE(r.case_name);
    CHECK(computed_paths(r) >= 2);
    CHECK(std::isfinite(r.value("lhs_reduced")));
    CHECK(std::isfinite(r.value("lhs_2d")));
    CHECK(r.err("lhs_reduced:lhs_2d") <= 1e-4);
    if (r.category == Category::A) {
      CHECK(r.status == Status::pass);
      CHECK(std::isfinite(r.value("rhs_closed")));
    } else {
      CHECK(r.status != Status::fail);
      CHECK((r.status == Status::flag) == r.discrepancy.has_value());
    }
    // Gated paths are never also reported as values.
    for (const auto& p : r.inapplicable) CHECK(std::isnan(r.value(p)));
  }

  const auto& ex1 = records.front();
  CHECK(ex1.case_name == "ex1");
  CHECK(std::abs(ex1.value("lhs_reduced") - constants::euler_gamma) <= 1e-9);
}

TEST_CASE("single cases") {
  const auto m1 = run_verify(only("monomial@s=1"));
  REQUIRE(m1.size() == 1u);
  CHECK(m1[0].status == Status::pass);
  CHECK(std::abs(m1[0].value("rhs_closed") - (2.0 * zeta(3.0) - 1.0)) <= 1e-14);

  const auto e4 = run_verify(only("ex4"));
  REQUIRE(e4.size() == 1u);
  CHECK((e4[0].status == Status::pass || e4[0].status == Status::flag));
  CHECK(e4[0].err("lhs_reduced:lhs_2d") <= 1e-4);

  const auto cat = run_verify(only("catalan"));
  REQUIRE(cat[0].status == Status::flag);
  REQUIRE(cat[0].discrepancy);
  CHECK(cat[0].discrepancy->lhs == cat[0].value("lhs_reduced"));
  CHECK(cat[0].discrepancy->rhs == cat[0].value("rhs_closed"));

  // Off-grid parameters are accepted.
  CHECK(run_verify(only("ex2@a=0.3"))[0].status == Status::pass);
  CHECK_THROWS_AS(run_verify(only("bogus")), std::invalid_argument);
}

TEST_CASE("category-A tolerance is enforced") {
  // At a very shallow level cap the reduced path cannot reach 1e-8.
  VerifyConfig c = only("ex1");
  c.level = 2;
  const auto r = run_verify(c);
  CHECK(r[0].status == Status::fail);
  CHECK(exit_code(r) == 1);
}

TEST_CASE("a failing path is recorded, not thrown") {
  KernelCase kc = case_ex1();
  kc.phi.phi = [](double) { return std::nan(""); };
  kc.phi.scaled = kc.phi.phi;
  const auto r = verify_case(kc, VerifyConfig{});
  CHECK(r.status == Status::fail);
  const bool has_error = std::any_of(r.diagnostics.begin(), r.diagnostics.end(), [](const auto& d) {
    return d.first.find(".error") != std::string::npos;
  });
  CHECK(has_error);
}

TEST_CASE("exit codes") {
  VerificationRecord a, b;
  a.category = Category::A;
  b.category = Category::B;
  b.status = Status::flag;
  std::vector<VerificationRecord> rs = {a, b};
  CHECK(exit_code(rs) == 0);
  rs[1].status = Status::fail;  // a category-B failure does not change it either
  CHECK(exit_code(rs) == 0);
  rs[0].status = Status::fail;
  CHECK(exit_code(rs) == 1);
  CHECK(exit_code(std::vector<VerificationRecord>{}) == 0);
}

TEST_CASE("run_base_sweep") {
  const std::vector<double> s = {-1.5, -1.0, 0.0, 3.7};
  const auto r = run_base_sweep(s, VerifyConfig{});
  REQUIRE(r.size() == 4u);
  for (const auto& rec : r) CHECK(rec.status == Status::pass);
  CHECK(std::isnan(r[0].value("lhs_2d")));
  CHECK(std::abs(r[0].value("lhs_reduced") - rhs_monomial(-1.5)) <= 1e-8 * rhs_monomial(-1.5));
  CHECK(std::abs(r[1].value("lhs_reduced") - constants::euler_gamma) <= 1e-12);
  CHECK(std::isfinite(r[2].value("lhs_2d")));
  CHECK(r[3].err("lhs_reduced:rhs_closed") <= 1e-9);
  const std::vector<double> bad = {0.0, -2.0};
  CHECK_THROWS_AS(run_base_sweep(bad, VerifyConfig{}), std::invalid_argument);
}

TEST_CASE("run_asymptotic") {
  const auto r1 = run_asymptotic("ex1");
  CHECK(r1.points.size() == 10u);
  CHECK(r1.points.front().n == 10);
  CHECK(r1.points.back().n == 5120);
  CHECK(std::abs(r1.fit.slope + 1.0) <= 0.15);
  CHECK(r1.status == Status::pass);
  CHECK(r1.reference_source == "rhs_closed");

  const auto r2 = run_asymptotic("ex2@a=0.5");
  CHECK(std::abs(r2.fit.slope + 1.0) <= 0.15);

  const auto r3 = run_asymptotic("ex3");
  CHECK(std::abs(r3.fit.slope + 2.0) <= 0.2);
  CHECK(r3.v == 2);

  CHECK_THROWS_AS(run_asymptotic("ex4"), std::invalid_argument);
  CHECK_THROWS_AS(run_asymptotic("ex1", 10, 3), std::invalid_argument);
}

TEST_CASE("config parsing") {
  const auto c = parse_config(R"(
# comment
case = ex2@a=0.5
tol = 1e-9      # category A
terms = 60
json = true
jobs=3
)");
  CHECK(c.case_name == "ex2@a=0.5");
  CHECK(c.tol_a == 1e-9);
  CHECK(c.terms == 60);
  CHECK(c.json);
  CHECK(c.jobs == 3);
  CHECK(c.level == 12);  // untouched

  CHECK_THROWS_AS(parse_config("colour = red"), ConfigError);
  CHECK_THROWS_AS(parse_config("level = twelve"), ConfigError);
  CHECK_THROWS_AS(parse_config("level"), ConfigError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/kernint.conf"), ConfigError);

  VerifyConfig v;
  v.tol_2d = -1.0;
  CHECK_THROWS_AS(validate(v), ConfigError);
  v = VerifyConfig{};
  v.level = 13;
  CHECK_THROWS_AS(validate(v), ConfigError);
  v = VerifyConfig{};
  v.terms_max = 10;
  CHECK_THROWS_AS(validate(v), ConfigError);
  CHECK_NOTHROW(validate(VerifyConfig{}));
}

TEST_CASE("concurrent evaluation gives the same records") {
  VerifyConfig one, many;
  many.jobs = 6;
  const auto a = run_verify(one), b = run_verify(many);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].case_name == b[i].case_name);
    CHECK(a[i].values == b[i].values);
    CHECK(a[i].status == b[i].status);
  }
}
