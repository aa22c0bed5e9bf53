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

// Independent reference computations for the test suites. Everything here is
// written separately from the library (different algorithms or at least
// different precision and truncation) so that agreement means something.

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

using ld = long double;

inline constexpr ld kPi = 3.141592653589793238462643383279502884L;
inline constexpr ld kGamma = 0.577215664901532860606512090082402431L;

// B_2 .. B_16 as exact rationals.
inline constexpr ld kBernoulliNum[] = {1, -1, 1, -1, 5, -691, 7, -3617};
inline constexpr ld kBernoulliDen[] = {6, 30, 42, 30, 66, 2730, 6, 510};

// sum_{k>=0} (x + k)^{-s} for s > 1: direct head of n terms, then the
// Euler-Maclaurin tail written out with explicit rising factorials.
inline ld hurwitz(ld s, ld x, int n = 400) {
  ld head = 0;
  for (int k = n - 1; k >= 0; --k) head += std::pow(x + k, -s);
  const ld a = x + n;
  ld tail = std::pow(a, 1 - s) / (s - 1) + std::pow(a, -s) / 2;
  ld rising = s;  // s (s+1) ... (s + 2j - 2)
  ld fact = 2;    // (2j)!
  for (int j = 1; j <= 8; ++j) {
    const ld b = kBernoulliNum[j - 1] / kBernoulliDen[j - 1];
    tail += b / fact * rising * std::pow(a, -s - 2 * j + 1);
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  return head + tail;
}

inline ld zeta(ld s) { return hurwitz(s, 1); }

// Alternating (eta) series with the Cohen-Rodriguez Villegas-Zagier
// acceleration; zeta(s) = eta(s) / (1 - 2^{1-s}). Valid for s > 0, s != 1.
inline ld zeta_via_eta(ld s, int n = 60) {
  ld d = std::pow(3 + std::sqrt(ld{8}), n);
  d = (d + 1 / d) / 2;
  ld b = -1, c = -d, sum = 0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c / std::pow(ld(k + 1), s);
    b = b * (k + n) * (k - n) / ((k + ld{0.5}) * (k + 1));
  }
  const ld eta = sum / d;
  return eta / (1 - std::pow(ld{2}, 1 - s));
}

// zeta'(2) = -sum ln k / k^2, head plus Euler-Maclaurin tail using
// d^j/dx^j (ln x / x^2) = (-1)^j (j+1)! x^{-j-2} (ln x - H_{j+1} + 1).
inline ld zeta_prime_2(int n = 200) {
  ld head = 0;
  for (int k = n - 1; k >= 2; --k) head += std::log(ld(k)) / (ld(k) * k);
  const ld a = n, la = std::log(a);
  ld tail = (la + 1) / a + la / (a * a) / 2;
  ld fact = 2;
  for (int j = 1; j <= 6; ++j) {
    const int order = 2 * j - 1;
    ld h = 0, ofact = 1;
    for (int i = 1; i <= order + 1; ++i) {
      h += ld{1} / i;
      ofact *= i;
    }
    const ld deriv = -ofact * std::pow(a, -order - 2) * (la - h + 1);
    const ld b = kBernoulliNum[j - 1] / kBernoulliDen[j - 1];
    tail -= b / fact * deriv;
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  return -(head + tail);
}

// J0 by its power series in long double (fine for x <~ 12).
inline ld j0_series(ld x) {
  const ld q = -x * x / 4;
  ld term = 1, sum = 1;
  for (int j = 1; j < 200; ++j) {
    term *= q / (ld(j) * j);
    sum += term;
    if (std::fabs(term) < 1e-30L * std::fabs(sum) && j > 5) break;
  }
  return sum;
}

// J0(x) = (1/pi) int_0^pi cos(x sin th) dth; the trapezoid rule on this
// periodic integrand converges geometrically once n >> x.
inline ld j0_integral(ld x, int n = 512) {
  ld sum = 0;
  for (int k = 0; k < n; ++k) {
    const ld th = kPi * (k + ld{0.5}) / n;
    sum += std::cos(x * std::sin(th));
  }
  return sum / n;
}

// e^{-t}(t - 1 + e^{-t})/(1 - e^{-t}) straight from the definition.
inline ld weight(ld t) {
  const ld e = std::exp(-t);
  ld core;
  if (t < ld{0.05}) {
    // t - 1 + e^{-t} = t^2/2 - t^3/6 + ...
    core = 0;
    ld term = t * t / 2;
    for (int k = 2; k < 40; ++k) {
      core += term;
      term *= -t / (k + 1);
    }
  } else {
    core = t - 1 + e;
  }
  return e * core / -std::expm1(-t);
}

inline ld binom(ld a, int j) {
  ld r = 1;
  for (int i = 0; i < j; ++i) r *= (a - i) / (i + 1);
  return r;
}

}  // namespace oracle
