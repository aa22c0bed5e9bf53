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

#include "kernint/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kernint {
namespace {

// B_{2j} for j = 1..15.
constexpr std::array<double, 15> kBernoulliEven = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

// B_{2j} / (2j)!
constexpr std::array<double, 15> kEmCoeff = [] {
  std::array<double, 15> out{};
  double fact = 1.0;
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double n = 2.0 * static_cast<double>(j + 1);
    fact *= (n - 1.0) * n;
    out[j] = kBernoulliEven[j] / fact;
  }
  return out;
}();

constexpr std::array<SpecialConstant, 7> kConstants = {{
    {ConstantId::gamma, "gamma", constants::euler_gamma},
    {ConstantId::pi, "pi", constants::pi},
    {ConstantId::catalan, "catalan", constants::catalan},
    {ConstantId::log_glaisher, "log_glaisher", constants::log_glaisher},
    {ConstantId::log2, "log2", constants::log2},
    {ConstantId::log_pi, "log_pi", constants::log_pi},
    {ConstantId::sqrt2, "sqrt2", constants::sqrt2},
}};

[[noreturn]] void domain_fail(const char* fn, double arg) {
  throw std::domain_error(std::string(fn) + ": argument out of domain (" +
                          std::to_string(arg) + ")");
}

// expm1(y) / y, with the Taylor form near 0.
double expm1_over(double y) {
  if (std::abs(y) < 1e-4) return 1.0 + y / 2.0 + y * y / 6.0 + y * y * y / 24.0;
  return std::expm1(y) / y;
}

// Euler-Maclaurin evaluation of sum_{k>=0} (x+k)^{-s}. With subtract_pole the
// 1/(s-1) pole is removed analytically from the integral term, so the result
// stays finite through s = 1. The shift N grows with s to keep the Bernoulli
// tail geometric.
double hurwitz_em(double s, double x, bool subtract_pole) {
  const int shift = 10 + static_cast<int>(std::ceil(std::max(s, 0.0)));
  double head = 0.0;
  for (int k = shift - 1; k >= 0; --k) head += std::pow(x + k, -s);

  const double a = x + shift;
  const double log_a = std::log(a);
  double integral;
  if (subtract_pole) {
    // (a^{1-s} - 1) / (s - 1)
    integral = -log_a * expm1_over((1.0 - s) * log_a);
  } else {
    integral = std::exp((1.0 - s) * log_a) / (s - 1.0);
  }
  const double a_pow = std::exp(-s * log_a);
  double total = head + integral + 0.5 * a_pow;

  // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * a^{-s-2j+1}
  const double inv_a2 = 1.0 / (a * a);
  double rising = s;
  double power = a_pow / a;
  for (std::size_t j = 0; j < kEmCoeff.size(); ++j) {
    if (j > 0) {
      const double base = s + 2.0 * static_cast<double>(j) - 1.0;
      rising *= base * (base + 1.0);
      power *= inv_a2;
    }
    const double term = kEmCoeff[j] * rising * power;
    total += term;
    if (std::abs(term) <= 1e-18 * std::abs(total)) break;
  }
  return total;
}

template <typename T>
T digamma_impl(T z) {
  T acc{0.0};
  while (std::real(z) < 10.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  const T inv = 1.0 / z;
  const T inv2 = inv * inv;
  T series{0.0};
  T power = inv2;
  for (int k = 1; k <= 8; ++k) {
    series += (kBernoulliEven[k - 1] / (2.0 * k)) * power;
    power *= inv2;
  }
  return acc + std::log(z) - 0.5 * inv - series;
}

}  // namespace

std::span<const SpecialConstant> special_constants() { return kConstants; }

double constant(ConstantId id) {
  for (const auto& c : kConstants) {
    if (c.id == id) return c.value;
  }
  throw std::invalid_argument("constant: unknown id");
}

double gamma_fn(double x) {
  if (!(x > 0.0) || x > 170.0) domain_fail("gamma_fn", x);
  return std::tgamma(x);
}

double zeta(double s) {
  if (!(s > 1.0)) domain_fail("zeta", s);
  return hurwitz_em(s, 1.0, false);
}

double zeta_reg(double s) {
  if (!(s > 0.0)) domain_fail("zeta_reg", s);
  return hurwitz_em(s, 1.0, true);
}

double hurwitz_zeta(double s, double x) {
  if (!(s > 1.0)) domain_fail("hurwitz_zeta", s);
  if (!(x > 0.0)) domain_fail("hurwitz_zeta", x);
  return hurwitz_em(s, x, false);
}

std::complex<double> digamma(std::complex<double> z) {
  if (!(z.real() > 0.0)) domain_fail("digamma", z.real());
  if (z.imag() == 0.0) return {digamma_impl(z.real()), 0.0};
  return digamma_impl(z);
}

double digamma(double x) {
  if (!(x > 0.0)) domain_fail("digamma", x);
  return digamma_impl(x);
}

double polygamma(int n, double x) {
  if (n < 1 || n > 8) domain_fail("polygamma order", n);
  if (!(x > 0.0)) domain_fail("polygamma", x);
  const double factorial = std::tgamma(n + 1.0);
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;
  return sign * factorial * hurwitz_em(n + 1.0, x, false);
}

double psi_n(int n, double x) { return n == 0 ? digamma(x) : polygamma(n, x); }

namespace detail {

// Summed in long double: the alternating terms peak near (e^{x/2})^2 before
// decaying, so the extra mantissa keeps the absolute error below 1e-13 at the
// crossover.
double bessel_j0_series(double x) {
  const long double q = static_cast<long double>(x) * x / 4.0L;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int j = 1; j < 200; ++j) {
    term *= -q / (static_cast<long double>(j) * j);
    sum += term;
    if (j * j > q && std::abs(term) < 1e-22L) break;
  }
  return static_cast<double>(sum);
}

double bessel_j0_hankel(double x) {
  // b_n = prod_{k<=n} (2k-1)^2 / (n! 8^n); P and Q take alternate terms.
  double p = 0.0;
  double q = 0.0;
  double b = 1.0;
  double prev = INFINITY;
  for (int n = 0; n < 60; ++n) {
    if (n > 0) b *= (2.0 * n - 1.0) * (2.0 * n - 1.0) / (8.0 * n);
    const double term = b / std::pow(x, n);
    if (term > prev) break;
    prev = term;
    if (n % 2 == 0) {
      p += ((n / 2) % 2 == 0) ? term : -term;
    } else {
      q += ((n / 2) % 2 == 0) ? -term : term;
    }
    if (term < 1e-17) break;
  }
  const double c = std::cos(x);
  const double s = std::sin(x);
  const double cos_chi = (c + s) / constants::sqrt2;
  const double sin_chi = (s - c) / constants::sqrt2;
  return std::sqrt(2.0 / (constants::pi * x)) * (p * cos_chi - q * sin_chi);
}

}  // namespace detail

double bessel_j0(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) domain_fail("bessel_j0", x);
  return x <= detail::bessel_j0_switch ? detail::bessel_j0_series(x)
                                       : detail::bessel_j0_hankel(x);
}

}  // namespace kernint
