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
#include <cstdlib>
#include <variant>
#include <vector>

#include "biprym/bipoly.hpp"
#include "biprym/curve.hpp"
#include "biprym/ratfn.hpp"

namespace biprym {

/// Raised by family_member at a = inf: that member is the dual curve.
class RedirectToDual : public Error {
 public:
  explicit RedirectToDual(QuarticModel dual)
      : Error("family member at a = inf is the dual curve"), dual_(std::move(dual)) {}
  const QuarticModel& dual() const noexcept { return dual_; }

 private:
  QuarticModel dual_;
};

/// Coefficients of c0 z^4 - 2 c1(x, y) z^2 + c2(x, y) = 0 as polynomials in a.
/// c1[i] and c2[i] multiply x^i y^(deg - i).
struct FamilyPolynomials {
  UniPoly c0;
  std::array<UniPoly, 3> c1;
  std::array<UniPoly, 5> c2;
};

inline FamilyPolynomials family_polynomials(const BiellipticCurve& c) {
  const Rational s0 = c.s(0), s1 = c.s(1), s2 = c.s(2);
  const Rational t1 = c.t(1), t2 = c.t(2), t3 = c.t(3);
  const Rational one(1);
  FamilyPolynomials f;
  f.c0 = UniPoly({Rational(s0 * s0 * t2 * t2 - 4 * s0 * s0 * t1 * t3 - 2 * s0 * s2 * t2 + 4 * s0 * s1 * t3 + s2 * s2 - t3),
                  Rational(-(4 * s0 * s2 * t1 - 2 * s0 * s1 * t2 + 4 * s0 * s0 * t3 - 2 * s1 * s2 + t2)),
                  Rational(s1 * s1 - 4 * s0 * s2 - t1), Rational(-one)});
  f.c1[2] = UniPoly({Rational(s0 * t2 - s2), Rational(2 * s0 * t1 - s1), Rational(2 * s0)});
  f.c1[1] = UniPoly({Rational(4 * s0 * t3), Rational(2 * (s0 * t2 + s2)), Rational(2 * s1)});
  f.c1[0] = UniPoly({Rational(-s0 * t2 * t2 + 4 * s0 * t1 * t3 + s2 * t2 - 2 * s1 * t3),
                     Rational(2 * s2 * t1 - s1 * t2 + 4 * s0 * t3), Rational(2 * s2)});
  f.c2[4] = UniPoly::constant(one);
  f.c2[3] = UniPoly({Rational(0), Rational(-4)});
  f.c2[2] = UniPoly({Rational(-2 * t2), Rational(-4 * t1)});
  f.c2[1] = UniPoly({Rational(-8 * t3), Rational(-4 * t2)});
  f.c2[0] = UniPoly({Rational(t2 * t2 - 4 * t1 * t3), Rational(-4 * t3)});
  return f;
}

struct FamilyMember {
  ProjRational a;
  Rational c0;
  BinForm c1;
  BinForm c2;
};

inline FamilyMember family_member(const BiellipticCurve& c, const ProjRational& a) {
  if (a.is_infinite()) throw RedirectToDual(dual_curve(c.model()));
  const Rational x = a.value();
  const FamilyPolynomials f = family_polynomials(c);
  std::vector<Rational> c1;
  std::vector<Rational> c2;
  for (const auto& p : f.c1) c1.push_back(p(x));
  for (const auto& p : f.c2) c2.push_back(p(x));
  return FamilyMember{a, f.c0(x), BinForm(2, std::move(c1)), BinForm(4, std::move(c2))};
}

/// c1^2 - c0 c2
inline BinForm branch_quartic(const FamilyMember& m) { return m.c1 * m.c1 - m.c2 * m.c0; }

struct JPair {
  RatFn jF;
  RatFn jK;
};

namespace detail {
/// 2^8 Q(a)^3 / (disc * cubic(a)^2), Q(a) = (t1^2-3t2)a^2 + (t1t2-9t3)a + t2^2-3t1t3.
inline RatFn cubic_family_j(const Rational& t1, const Rational& t2, const Rational& t3, const UniPoly& cubic,
                            const Rational& disc) {
  const UniPoly q({Rational(t2 * t2 - 3 * t1 * t3), Rational(t1 * t2 - 9 * t3), Rational(t1 * t1 - 3 * t2)});
  return RatFn(pow(q, 3u) * Rational(256), cubic * cubic * disc);
}
}  // namespace detail

inline JPair j_functions(const BiellipticCurve& c) {
  return JPair{detail::cubic_family_j(c.t_check(1), c.t_check(2), c.t_check(3), c.tau_check(), c.disc_tau_check()),
               detail::cubic_family_j(c.t(1), c.t(2), c.t(3), c.tau(), c.disc_tau())};
}

/// Square-free monic polynomial whose roots are the finite ramification
/// points of r (the Wronskian num' den - num den').
inline UniPoly ramification_polynomial(const RatFn& r) {
  const UniPoly w = r.num().derivative() * r.den() - r.num() * r.den().derivative();
  if (w.is_zero()) throw DegenerateInput("ramification of a constant map");
  return w.degree() <= 0 ? UniPoly::constant(Rational(1)) : monic(square_free_part(w));
}

/// Local degree of r at a = inf.
inline int ramification_index_at_infinity(const RatFn& r) {
  const int dn = r.num().degree();
  const int dd = r.den().degree();
  if (dn != dd) return std::abs(dn - dd);
  const UniPoly rest = r.num() - r.den() * Rational(r.num().leading() / r.den().leading());
  return r.degree() - std::max(rest.degree(), 0);
}

struct RamificationPoint {
  /// A rational or infinite point, or a factor whose roots are the points.
  std::variant<ProjRational, UniPoly> where;
  int index = 1;
};

struct RamificationFiber {
  ProjRational value;
  std::vector<RamificationPoint> points;
};

struct RamificationProfile {
  std::vector<RamificationFiber> fibers;
  /// Sum of (e - 1) over the reported points.
  int total_branching = 0;
  /// Number of reported ramification points (factor descriptors count deg many).
  int point_count = 0;
  /// 2 deg - 2 minus total_branching: ramification over irrational values.
  int unresolved_branching = 0;
};

inline RamificationProfile ramification_profile(const RatFn& r) {
  const int d = r.degree();
  RamificationProfile out;
  if (d == 1) return out;

  const UniPoly w = ramification_polynomial(r);
  std::vector<ProjRational> values{ProjRational::infinity()};
  if (ramification_index_at_infinity(r) >= 2) values.push_back(r(ProjRational::infinity()));
  if (w.degree() > 0) {
    // Res_a(w(a), num(a) - v den(a)) vanishes exactly at the finite branch values.
    BiPoly p(static_cast<std::size_t>(w.degree()), 0);
    for (int i = 0; i <= w.degree(); ++i) p.at(static_cast<std::size_t>(i), 0) = w.coeff(static_cast<std::size_t>(i));
    BiPoly q(static_cast<std::size_t>(d), 1);
    for (int i = 0; i <= d; ++i) {
      q.at(static_cast<std::size_t>(i), 0) = r.num().coeff(static_cast<std::size_t>(i));
      q.at(static_cast<std::size_t>(i), 1) = -r.den().coeff(static_cast<std::size_t>(i));
    }
    for (const Rational& v : rational_roots(resultant_bivariate(p, q, Var::X))) values.emplace_back(v);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  for (const ProjRational& v : values) {
    const UniPoly level = v.is_infinite() ? r.den() : r.num() - r.den() * v.value();
    RamificationFiber fiber{v, {}};
    for (const auto& [factor, mult] : square_free_decomposition(level)) {
      if (mult < 2) continue;
      UniPoly rest = factor;
      for (const Rational& x : rational_roots(factor)) {
        fiber.points.push_back({ProjRational(x), mult});
        rest = exact_div(rest, UniPoly::linear_factor(x));
        out.total_branching += mult - 1;
        out.point_count += 1;
      }
      if (rest.degree() > 0) {
        fiber.points.push_back({monic(rest), mult});
        out.total_branching += rest.degree() * (mult - 1);
        out.point_count += rest.degree();
      }
    }
    const int at_inf = d - std::max(level.degree(), 0);
    if (at_inf >= 2) {
      fiber.points.push_back({ProjRational::infinity(), at_inf});
      out.total_branching += at_inf - 1;
      out.point_count += 1;
    }
    if (!fiber.points.empty()) out.fibers.push_back(std::move(fiber));
  }
  out.unresolved_branching = 2 * d - 2 - out.total_branching;
  return out;
}

}  // namespace biprym
