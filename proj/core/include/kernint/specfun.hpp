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

#include <complex>
#include <span>
#include <string_view>

namespace kernint {

enum class ConstantId { gamma, pi, catalan, log_glaisher, log2, log_pi, sqrt2 };

struct SpecialConstant {
  ConstantId id;
  std::string_view name;
  double value;
};

namespace constants {
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double catalan = 0.91596559417721901505460351493238411;
// ln A = 1/12 - zeta'(-1); stored, not computed.
inline constexpr double log_glaisher = 0.24875447703378426254725299357611398;
inline constexpr double log2 = 0.69314718055994530941723212145817657;
inline constexpr double log_pi = 1.14472988584940017414342735135305871;
inline constexpr double sqrt2 = 1.41421356237309504880168872420969808;
}  // namespace constants

/// The fixed set of named constants, in declaration order of ConstantId.
std::span<const SpecialConstant> special_constants();
double constant(ConstantId id);

/// Gamma function for 0 < x <= 170. Throws std::domain_error otherwise.
double gamma_fn(double x);

/// Riemann zeta for real s > 1.
double zeta(double s);

/// zeta(s) - 1/(s - 1) for s > 0, continued through s = 1 where it equals
/// the Euler-Mascheroni constant.
double zeta_reg(double s);

/// Hurwitz zeta sum_{k>=0} (x + k)^{-s} for s > 1, x > 0.
double hurwitz_zeta(double s, double x);

/// Digamma for Re z > 0. Real input yields an exactly real result.
std::complex<double> digamma(std::complex<double> z);
double digamma(double x);

/// psi_n(x) = (-1)^{n+1} n! sum_{k>=0} (x + k)^{-(n+1)}, 1 <= n <= 8, x > 0.
double polygamma(int n, double x);

/// psi_0 (digamma) for n == 0, polygamma otherwise. Real x > 0.
double psi_n(int n, double x);

/// Bessel J0 for x >= 0. Accurate to ~1e-13 absolute; the kernel integrals
/// only reach x <= 745 on the reduced path.
double bessel_j0(double x);

namespace detail {
/// Crossover between the power series and the Hankel expansion for J0.
inline constexpr double bessel_j0_switch = 17.0;
double bessel_j0_series(double x);
double bessel_j0_hankel(double x);
}  // namespace detail

}  // namespace kernint
