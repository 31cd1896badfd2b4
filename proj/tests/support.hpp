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

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "biprym/curve.hpp"
#include "biprym/elliptic.hpp"
#include "biprym/matrix.hpp"
#include "biprym/poly.hpp"

namespace biprym::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long range, long max_den) {
    const long den = integer(1, max_den);
    return make_rational(integer(-range, range), den);
  }

  Rational nonzero_rational(long range, long max_den) {
    for (;;) {
      Rational r = rational(range, max_den);
      if (r != 0) return r;
    }
  }

  UniPoly poly(int degree, long range) {
    std::vector<Rational> c;
    for (int i = 0; i < degree; ++i) c.emplace_back(integer(-range, range));
    long lead = 0;
    while (lead == 0) lead = integer(-range, range);
    c.emplace_back(lead);
    return UniPoly(std::move(c));
  }

  /// Nonsingular curve with small integer (occasionally half-integer) coefficients.
  BiellipticCurve curve() {
    for (;;) {
      auto coef = [&](long range) { return integer(0, 4) == 0 ? make_rational(integer(-2 * range, 2 * range), 2)
                                                                : Rational(integer(-range, range)); };
      try {
        return BiellipticCurve(coef(3), coef(3), coef(3), coef(6), coef(6), coef(6));
      } catch (const SingularCurve&) {
      }
    }
  }

  /// Nonsingular curve with tau(0) = tau_check(0) = 0.
  BiellipticCurve curve_with_shared_root() {
    for (;;) {
      const Rational s0(integer(-3, 3));
      const Rational s1(integer(-3, 3));
      const Rational t1(integer(-6, 6));
      const Rational t2(integer(-6, 6));
      try {
        return BiellipticCurve(s0, s1, s0 * t2, t1, t2, Rational(0));
      } catch (const SingularCurve&) {
      }
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Sylvester matrix determinant, p-rows first.
inline Rational sylvester_resultant(const UniPoly& p, const UniPoly& q) {
  const int m = p.degree();
  const int n = q.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  if (size == 0) return Rational(1);
  QMatrix s(size, size);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) {
      s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)) =
          p.coeff(static_cast<std::size_t>(m - k));
    }
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) {
      s(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + k)) =
          q.coeff(static_cast<std::size_t>(n - k));
    }
  }
  return determinant(s);
}

inline std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

/// Rational root test by enumerating p/q with p | a0 and q | an.
inline std::vector<Rational> divisor_roots(const UniPoly& poly) {
  IntPoly f = primitive_integer(poly);
  std::vector<Rational> out;
  std::size_t shift = 0;
  while (f.coeff(shift) == 0) ++shift;
  if (shift > 0) out.emplace_back(0);
  const Integer a0 = f.coeff(shift);
  const Integer an = f.leading();
  const UniPoly g = to_rational(f);
  for (const Integer& num : divisors(a0)) {
    for (const Integer& den : divisors(an)) {
      for (int sign : {1, -1}) {
        Rational cand(num * sign, den);
        cand.canonicalize();
        if (g(cand) == 0) out.push_back(cand);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Monic cubic through three points with distinct x, and a fourth
/// point making the marked sum the identity.
inline std::optional<MarkedEllipticCurve> marked_curve(Gen& g) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<AffinePoint> pts;
    for (int i = 0; i < 3; ++i) pts.push_back({g.rational(6, 3), g.rational(6, 3)});
    if (pts[0].x == pts[1].x || pts[0].x == pts[2].x || pts[1].x == pts[2].x) continue;
    QMatrix m(3, 3);
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < 3; ++i) {
      m(i, 0) = pts[i].x * pts[i].x;
      m(i, 1) = pts[i].x;
      m(i, 2) = 1;
      rhs.push_back(pts[i].y * pts[i].y - pts[i].x * pts[i].x * pts[i].x);
    }
    // Cramer's rule.
    const Rational det = determinant(m);
    std::array<Rational, 3> sol;
    for (std::size_t k = 0; k < 3; ++k) {
      QMatrix mk = m;
      for (std::size_t i = 0; i < 3; ++i) mk(i, k) = rhs[i];
      sol[k] = determinant(mk) / det;
    }
    const UniPoly cubic({sol[2], sol[1], sol[0], Rational(1)});
    if (gcd(cubic, cubic.derivative()).degree() > 0) continue;
    MarkedEllipticCurve base(cubic, pts);
    ECPoint sum;
    for (const auto& p : pts) sum = cubic_group_add(base, sum, p);
    const ECPoint p4 = negate(sum);
    if (!p4) continue;
    pts.push_back(*p4);
    bool distinct = true;
    for (int i = 0; i < 3; ++i) distinct = distinct && !(pts[static_cast<std::size_t>(i)] == *p4);
    if (!distinct) continue;
    return MarkedEllipticCurve(cubic, pts);
  }
  return std::nullopt;
}

}  // namespace biprym::testing
