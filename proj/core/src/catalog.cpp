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

#include "kernint/catalog.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <stdexcept>

#include "kernint/specfun.hpp"

namespace kernint {
namespace {

using constants::euler_gamma;
using constants::pi;

double sech(double t) {
  const double e = std::exp(-2.0 * std::abs(t));
  return 2.0 * std::exp(-std::abs(t)) / (1.0 + e);
}

double factorial(int n) { return std::tgamma(n + 1.0); }

std::string with_params(std::string base, const std::vector<CaseParam>& params) {
  if (params.empty()) return base;
  base += '@';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) base += ',';
    base += params[i].name + "=" + format_param(params[i].value);
  }
  return base;
}

StableIntegrand bounded(std::function<double(double)> phi) {
  StableIntegrand si;
  si.phi = std::move(phi);
  si.envelope = [](double) { return 1.0; };
  return si;
}

// phi(t) = t^{m-2} * rest(t) with |rest| <= 1.
StableIntegrand power_times(int m, std::function<double(double)> rest) {
  StableIntegrand si;
  const int k = m - 2;
  si.phi = [k, rest = std::move(rest)](double t) { return std::pow(t, k) * rest(t); };
  si.envelope = [k](double t) { return std::pow(t, k); };
  return si;
}

bool is_half_integer_multiple(double c) {
  const double twice = 2.0 * c;
  return twice >= 1.0 && twice == std::floor(twice);
}

}  // namespace

bool KernelCase::analytic() const {
  return std::holds_alternative<TaylorCoeffs>(build_product(g_factors, 2));
}

std::string format_param(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

KernelCase case_ex1() {
  KernelCase kc;
  kc.name = "ex1";
  kc.label = "G(x) = x";
  StableIntegrand si;
  si.phi = [](double t) { return 1.0 / t; };
  si.sing_order = 1.0;
  si.scaled = [](double) { return 1.0; };
  si.envelope = [](double) { return 1.0; };
  kc.phi = std::move(si);
  kc.g_factors = {SeriesKind::monomial(1)};
  kc.f_closed = [](double x) { return x; };
  kc.v = 1;
  kc.rhs_closed = [] { return euler_gamma; };
  kc.category = Category::A;
  return kc;
}

KernelCase case_ex2(double a) {
  if (!(std::abs(a) < 1.0)) throw std::invalid_argument("ex2: requires |a| < 1");
  KernelCase kc;
  kc.params = {{"a", a}};
  kc.name = with_params("ex2", kc.params);
  kc.label = "G(x) = x cos(a x)";
  StableIntegrand si;
  si.phi = [a](double t) { return std::cos(a * t) / t; };
  si.sing_order = 1.0;
  si.scaled = [a](double t) { return std::cos(a * t); };
  si.envelope = [](double) { return 1.0; };
  kc.phi = std::move(si);
  kc.g_factors = {SeriesKind::monomial(1), SeriesKind::cos(a)};
  kc.f_closed = [a](double x) { return x / (1.0 + a * a * x * x); };
  kc.v = 1;
  kc.rhs_closed = [a] { return rhs_ex2(a); };
  kc.category = Category::A;
  return kc;
}

KernelCase case_ex3() {
  KernelCase kc;
  kc.name = "ex3";
  kc.label = "G(x) = x^2 J0(x)";
  kc.phi = bounded([](double t) { return bessel_j0(t); });
  kc.g_factors = {SeriesKind::monomial(2), SeriesKind::j0()};
  kc.f_closed = [](double x) {
    const double r = 1.0 + x * x;
    return x * x / (r * std::sqrt(r));
  };
  kc.v = 2;
  kc.rhs_closed = [] { return rhs_ex3(); };
  kc.category = Category::A;
  return kc;
}

KernelCase case_ex4() {
  KernelCase kc;
  kc.name = "ex4";
  kc.label = "G(x) = x^2 sech(2x)";
  kc.phi = bounded([](double t) { return sech(2.0 * t); });
  kc.g_factors = {SeriesKind::monomial(2), SeriesKind::sech(2.0)};
  kc.v = 2;
  kc.rhs_closed = [] { return rhs_ex4(); };
  kc.category = Category::B;
  return kc;
}

KernelCase case_catalan() {
  KernelCase kc;
  kc.name = "catalan";
  kc.label = "G(x) = x^3 sech(x/2)";
  kc.phi = power_times(3, [](double t) { return sech(0.5 * t); });
  kc.g_factors = {SeriesKind::monomial(3), SeriesKind::sech(0.5)};
  kc.v = 3;
  kc.rhs_closed = [] { return rhs_catalan(); };
  kc.category = Category::B;
  return kc;
}

KernelCase case_family_exp_sech(double c, int m) {
  if (m < 2 || m > 9) throw std::invalid_argument("fam1: requires 2 <= m <= 9");
  if (!(c >= 0.0)) throw std::invalid_argument("fam1: requires c >= 0");
  KernelCase kc;
  kc.params = {{"c", c}, {"m", static_cast<double>(m)}};
  kc.name = with_params("fam1", kc.params);
  kc.label = "G(x) = x^m e^{-cx} sech(x/2)";
  kc.phi = power_times(m, [c](double t) { return std::exp(-c * t) * sech(0.5 * t); });
  kc.g_factors = {SeriesKind::monomial(m), SeriesKind::exp_neg(c), SeriesKind::sech(0.5)};
  kc.v = m;
  kc.lhs_scale = -1.0;
  kc.rhs_closed = [c, m] { return rhs_family_exp_sech(c, m); };
  kc.category = Category::B;
  return kc;
}

KernelCase case_family_sech(double c, int m) {
  if (m < 2 || m > 9) throw std::invalid_argument("fam2: requires 2 <= m <= 9");
  if (!is_half_integer_multiple(c)) {
    throw std::invalid_argument("fam2: requires 2c to be a positive integer");
  }
  KernelCase kc;
  kc.params = {{"c", c}, {"m", static_cast<double>(m)}};
  kc.name = with_params("fam2", kc.params);
  kc.label = "G(x) = x^m sech(cx)";
  kc.phi = power_times(m, [c](double t) { return sech(c * t); });
  kc.g_factors = {SeriesKind::monomial(m), SeriesKind::sech(c)};
  kc.v = m;
  kc.lhs_scale = std::pow(2.0, 2 * m - 1) * std::pow(c, m);
  kc.rhs_closed = [c, m] { return rhs_family_sech(c, m); };
  kc.category = Category::B;
  return kc;
}

KernelCase case_glaisher() {
  KernelCase kc;
  kc.name = "glaisher";
  kc.label = "G(x) = x^2 log x";
  StableIntegrand si;
  si.phi = [](double t) { return std::log(t); };
  si.envelope = [](double t) { return std::abs(std::log(t)); };
  kc.phi = std::move(si);
  kc.g_factors = {SeriesKind::monomial(2), SeriesKind::log_marker()};
  kc.v = 0;
  kc.rhs_closed = [] { return rhs_glaisher(); };
  kc.category = Category::A;
  return kc;
}

KernelCase case_monomial(double s) {
  if (!(s > -2.0)) throw std::invalid_argument("monomial: requires s > -2");
  KernelCase kc;
  kc.params = {{"s", s}};
  kc.name = with_params("monomial", kc.params);
  kc.label = "G(x) = x^(s+2)";
  kc.phi = monomial_integrand(s);
  kc.g_factors = {SeriesKind::monomial(s + 2.0)};
  const double order = s + 2.0;
  if (order == std::floor(order)) {
    const int n = static_cast<int>(order);
    kc.v = n;
    const double scale = factorial(n - 1);
    kc.f_closed = [n, scale](double x) { return scale * std::pow(x, n); };
  }
  kc.rhs_closed = [s] { return rhs_monomial(s); };
  kc.category = Category::A;
  return kc;
}

std::vector<double> monomial_sweep() { return {-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.7}; }

std::vector<KernelCase> list_cases() {
  std::vector<KernelCase> out;
  out.push_back(case_ex1());
  for (double a : {0.25, 0.5, 0.9}) out.push_back(case_ex2(a));
  out.push_back(case_ex3());
  out.push_back(case_ex4());
  out.push_back(case_catalan());
  for (auto [c, m] : {std::pair{0.0, 3}, {1.0, 3}, {1.0, 4}, {2.0, 4}}) {
    out.push_back(case_family_exp_sech(c, m));
  }
  for (auto [c, m] : {std::pair{1.0, 2}, {1.0, 3}, {2.0, 3}}) {
    out.push_back(case_family_sech(c, m));
  }
  out.push_back(case_glaisher());
  for (double s : monomial_sweep()) out.push_back(case_monomial(s));
  return out;
}

KernelCase find_case(std::string_view name) {
  const auto at = name.find('@');
  const std::string base(name.substr(0, at));
  std::map<std::string, double> params;
  if (at != std::string_view::npos) {
    std::string_view rest = name.substr(at + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw std::invalid_argument("malformed case parameter in '" + std::string(name) + "'");
      }
      double value = 0.0;
      const std::string_view text = item.substr(eq + 1);
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad numeric value in case '" + std::string(name) + "'");
      }
      params[std::string(item.substr(0, eq))] = value;
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  }
  auto need = [&](const char* key) {
    auto it = params.find(key);
    if (it == params.end()) {
      throw std::invalid_argument("case '" + std::string(name) + "' needs parameter " + key);
    }
    return it->second;
  };
  auto need_int = [&](const char* key) {
    const double v = need(key);
    if (v != std::floor(v)) throw std::invalid_argument(std::string(key) + " must be an integer");
    return static_cast<int>(v);
  };
  auto expect_count = [&](std::size_t n) {
    if (params.size() != n) {
      throw std::invalid_argument("case '" + std::string(name) + "': unexpected parameters");
    }
  };

  if (base == "ex1") return expect_count(0), case_ex1();
  if (base == "ex2") return expect_count(1), case_ex2(need("a"));
  if (base == "ex3") return expect_count(0), case_ex3();
  if (base == "ex4") return expect_count(0), case_ex4();
  if (base == "catalan") return expect_count(0), case_catalan();
  if (base == "glaisher") return expect_count(0), case_glaisher();
  if (base == "fam1") return expect_count(2), case_family_exp_sech(need("c"), need_int("m"));
  if (base == "fam2") return expect_count(2), case_family_sech(need("c"), need_int("m"));
  if (base == "monomial") return expect_count(1), case_monomial(need("s"));
  throw std::invalid_argument("unknown case '" + std::string(name) + "'");
}

double rhs_ex2(double a) {
  if (!(std::abs(a) < 1.0)) throw std::domain_error("rhs_ex2: requires |a| < 1");
  // (log(1 + a^2) - psi(1 - ia) - psi(1 + ia)) / 2; the psi pair is conjugate.
  return 0.5 * std::log1p(a * a) - digamma(std::complex<double>(1.0, a)).real();
}

double rhs_ex3() {
  // k = 1 term kept apart; for k >= 2 expand (1 + k^{-2})^{-3/2} binomially:
  // sum_k k/(k^2+1)^{3/2} = sum_j binom(-3/2, j) (zeta(2j+2) - 1).
  double total = -1.0 / constants::sqrt2 + 0.5 / constants::sqrt2;
  double binom = 1.0;
  for (int j = 0; j < 200; ++j) {
    if (j > 0) binom *= (-1.5 - (j - 1)) / j;
    const double term = binom * hurwitz_zeta(2.0 * j + 2.0, 2.0);
    total += term;
    if (std::abs(term) < 1e-18) break;
  }
  return total;
}

double rhs_ex4() {
  double psi_sum = 0.0;
  for (int k = 1; k <= 4; ++k) psi_sum += polygamma(1, 0.25 + k / 8.0);
  return -(pi + 2.0 * std::log(pi / 8.0)) / (2.0 * constants::sqrt2) + psi_sum / 32.0;
}

double rhs_catalan() { return -8.0 + 8.0 * constants::catalan - 0.25 * polygamma(3, 0.75); }

double rhs_family_exp_sech(double c, int m) {
  if (m < 2 || m > 9) throw std::invalid_argument("rhs_family_exp_sech: requires 2 <= m <= 9");
  if (!(c >= 0.0)) throw std::invalid_argument("rhs_family_exp_sech: requires c >= 0");
  const double lo = (2.0 * c + 3.0) / 4.0;
  const double hi = (2.0 * c + 5.0) / 4.0;
  const double k2 = std::pow(2.0, 2 - m);
  const double k1 = std::pow(2.0, 1 - m);
  return -k2 * psi_n(m - 2, lo) + k2 * psi_n(m - 2, hi) - k1 * psi_n(m - 1, lo);
}

double rhs_family_sech(double c, int m) {
  if (m < 2 || m > 9) throw std::invalid_argument("rhs_family_sech: requires 2 <= m <= 9");
  if (!is_half_integer_multiple(c)) {
    throw std::invalid_argument("rhs_family_sech: requires 2c to be a positive integer");
  }
  double value = 4.0 * c *
                 (psi_n(m - 2, (3.0 * c + 1.0) / (4.0 * c)) -
                  psi_n(m - 2, (c + 1.0) / (4.0 * c)));
  const int upper = static_cast<int>(2.0 * c);
  for (int k = 1; k <= upper; ++k) value -= psi_n(m - 1, (c + k) / 4.0);
  return value;
}

double rhs_glaisher() {
  return euler_gamma + pi * pi / 6.0 *
                           (1.0 + constants::log2 - 12.0 * constants::log_glaisher +
                            constants::log_pi);
}

}  // namespace kernint
