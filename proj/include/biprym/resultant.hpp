// Copyright 2026 The biprym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "biprym/poly.hpp"

namespace biprym {

/// Resultant with the Sylvester-matrix convention, rows of p first:
///   Res(p, q) = lc(p)^deg(q) * lc(q)^deg(p) * prod (alpha_i - beta_j)
/// over roots alpha of p and beta of q. So Res(x - 2, x - 3) = -1.
/// Res(p, 0) = 0 for any nonzero p; Res(0, 0) is undefined.
inline Rational resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw UndefinedInput("resultant of two zero polynomials");
  if (p.is_zero() || q.is_zero()) return Rational(0);

  // Euclidean recurrence with deg a >= deg b:
  //   Res(a, b) = (-1)^(deg a * deg b) * lc(b)^(deg a - deg r) * Res(b, r),
  // r = a mod b. Equivalent to the Sylvester determinant.
  UniPoly a = p;
  UniPoly b = q;
  Rational acc(1);
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() * b.degree()) % 2 != 0) acc = -acc;
  }
  for (;;) {
    const int m = a.degree();
    const int n = b.degree();
    if (n == 0) {
      Rational v(1);
      for (int i = 0; i < m; ++i) v *= b.leading();
      return acc * v;
    }
    UniPoly r = a % b;
    if (r.is_zero()) return Rational(0);
    if ((m * n) % 2 != 0) acc = -acc;
    const Rational lb = b.leading();
    for (int i = 0; i < m - r.degree(); ++i) acc *= lb;
    a = std::move(b);
    b = std::move(r);
  }
}

/// disc(p) = (-1)^(n(n-1)/2) / lc(p) * Res(p, p'), n = deg p >= 1.
inline Rational discriminant(const UniPoly& p) {
  const int n = p.degree();
  if (n < 1) throw DegenerateInput("discriminant of a constant polynomial");
  if (n == 1) return Rational(1);
  Rational r = resultant(p, p.derivative()) / p.leading();
  if (((n * (n - 1)) / 2) % 2 != 0) r = -r;
  return r;
}

/// Discriminant of x^3 + t1 x^2 + t2 x + t3 in closed form.
inline Rational disc_cubic(const Rational& t1, const Rational& t2, const Rational& t3) {
  Rational d = t1 * t1 * t2 * t2;
  d -= 4 * t1 * t1 * t1 * t3;
  d -= 4 * t2 * t2 * t2;
  d += 18 * t1 * t2 * t3;
  d -= 27 * t3 * t3;
  return d;
}

}  // namespace biprym
