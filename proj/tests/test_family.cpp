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

#include <gtest/gtest.h>

#include "biprym/family.hpp"
#include "support.hpp"

namespace biprym {
namespace {

using testing::Gen;

BiellipticCurve node_curve() { return BiellipticCurve(0, 0, 1, -6, 5, 0); }
BiellipticCurve fiber_curve() { return BiellipticCurve(1, -1, 0, 2, -3, 0); }
BiellipticCurve selfdual_curve() { return BiellipticCurve(1, -2, 3, -4, 3, 0); }

UniPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

UniPoly lin(long root) { return UniPoly::linear_factor(Rational(root)); }

/// scale * q^3 / (den_scale * cubic^2)
RatFn printed(const Rational& scale, const UniPoly& q, const Rational& den_scale, const UniPoly& cubic) {
  return RatFn(pow(q, 3u) * scale, cubic * cubic * den_scale);
}

TEST(JFunctions, PrintedFormulas) {
  const JPair j2 = j_functions(node_curve());
  EXPECT_EQ(j2.jF, printed(256 * 7, P({1, -3, 3}), 1, P({-1, 5, -6, 1})));
  EXPECT_EQ(j2.jK, printed(16, P({25, -30, 21}), 25, lin(0) * lin(1) * lin(5)));

  const JPair j3 = j_functions(fiber_curve());
  EXPECT_EQ(j3.jF, printed(64, P({27, 18, 7}), 9, lin(-1) * lin(3) * lin(-3)));
  EXPECT_EQ(j3.jK, printed(16, P({9, -6, 13}), 9, lin(0) * lin(1) * lin(-3)));

  const JPair j4 = j_functions(selfdual_curve());
  EXPECT_EQ(j4.jF, printed(64, P({441, -84, 79}), 9 * 25 * 49, lin(0) * lin(3) * lin(-7)));
  EXPECT_EQ(j4.jK, printed(64, P({9, -12, 7}), 9, lin(0) * lin(1) * lin(3)));
}

TEST(JFunctions, DegreeAndValuesAtInfinity) {
  Gen g(31);
  for (int trial = 0; trial < 30; ++trial) {
    const BiellipticCurve c = g.curve();
    const JPair j = j_functions(c);
    EXPECT_EQ(j.jF.degree(), 6);
    EXPECT_EQ(j.jK.degree(), 6);
    EXPECT_EQ(j.jK(ProjRational::infinity()), j_base(c));
    EXPECT_EQ(j.jF(ProjRational::infinity()), j_dual_base(c));
    EXPECT_EQ(monic(square_free_part(j.jF.den())), c.tau_check());
    EXPECT_EQ(monic(square_free_part(j.jK.den())), c.tau());
    for (const RatFn* r : {&j.jF, &j.jK}) {
      const UniPoly n1728 = r->num() - r->den() * Rational(1728);
      int cubic_degree = 0;
      for (const auto& [factor, mult] : square_free_decomposition(n1728)) {
        EXPECT_EQ(mult % 2, 0);
        cubic_degree += factor.degree() * mult / 2;
      }
      // The remaining points of the fiber over 1728 sit at a = inf.
      const int at_inf = 6 - n1728.degree();
      EXPECT_EQ(at_inf % 2, 0);
      EXPECT_EQ(cubic_degree + at_inf / 2, 3);
    }
  }
}

TEST(Family, Examples) {
  const FamilyMember m = family_member(node_curve(), ProjRational(Rational(7, 2)));
  const Rational a(7, 2);
  EXPECT_EQ(m.c0, -(a * a * a - 6 * a * a + 5 * a - 1));
  EXPECT_EQ(m.c1, BinForm(2, {Rational(2 * a * a - 12 * a + 5), Rational(2 * a), Rational(-1)}));
  EXPECT_EQ(m.c2, BinForm(4, {Rational(25), Rational(-20 * a), Rational(2 * (12 * a - 5)), Rational(-4 * a), Rational(1)}));

  const FamilyPolynomials f = family_polynomials(fiber_curve());
  const UniPoly a3 = lin(-3);
  EXPECT_EQ(f.c1[2], a3 * P({-1, 2}));
  EXPECT_EQ(f.c1[1], a3 * P({0, -2}));
  EXPECT_EQ(f.c1[0], a3 * P({-3}));

  try {
    family_member(node_curve(), ProjRational::infinity());
    FAIL() << "expected RedirectToDual";
  } catch (const RedirectToDual& r) {
    EXPECT_EQ(r.dual(), dual_curve(node_curve().model()));
  }
}

TEST(Family, C0IsMinusTauCheck) {
  Gen g(32);
  for (int trial = 0; trial < 30; ++trial) {
    const BiellipticCurve c = g.curve();
    EXPECT_TRUE((family_polynomials(c).c0 + c.tau_check()).is_zero());
  }
}

TEST(Family, BranchQuarticsGiveJFunctions) {
  Gen g(33);
  for (int trial = 0; trial < 25; ++trial) {
    const BiellipticCurve c = g.curve();
    const JPair j = j_functions(c);
    int checked = 0;
    while (checked < 10) {
      const Rational a = g.rational(40, 11);
      if (c.tau()(a) == 0 || c.tau_check()(a) == 0) continue;
      const FamilyMember m = family_member(c, ProjRational(a));
      EXPECT_EQ(j_of_binary_quartic(branch_quartic(m)), j.jF(ProjRational(a)));
      EXPECT_EQ(j_of_binary_quartic(m.c2), j.jK(ProjRational(a)));
      ++checked;
    }
    for (const Rational& r : rational_roots(c.tau_check())) {
      EXPECT_THROW(j_of_binary_quartic(branch_quartic(family_member(c, ProjRational(r)))), DegenerateBranch);
    }
  }
}

TEST(Ramification, ExampleProfile) {
  const RamificationProfile p = ramification_profile(j_functions(node_curve()).jK);
  EXPECT_EQ(p.total_branching, 10);
  EXPECT_EQ(p.point_count, 8);
  EXPECT_EQ(p.unresolved_branching, 0);
  ASSERT_EQ(p.fibers.size(), 3u);
  EXPECT_EQ(p.fibers[0].value, ProjRational(Rational(0)));
  ASSERT_EQ(p.fibers[0].points.size(), 1u);
  EXPECT_EQ(std::get<UniPoly>(p.fibers[0].points[0].where), monic(P({25, -30, 21})));
  EXPECT_EQ(p.fibers[0].points[0].index, 3);
  EXPECT_EQ(p.fibers[1].value, ProjRational(Rational(1728)));
  // 16 (3a - 5)^2 (3a + 5)^2 (9a - 5)^2
  ASSERT_EQ(p.fibers[1].points.size(), 3u);
  EXPECT_EQ(std::get<ProjRational>(p.fibers[1].points[0].where), ProjRational(Rational(-5, 3)));
  EXPECT_EQ(std::get<ProjRational>(p.fibers[1].points[1].where), ProjRational(Rational(5, 9)));
  EXPECT_EQ(std::get<ProjRational>(p.fibers[1].points[2].where), ProjRational(Rational(5, 3)));
  for (const auto& pt : p.fibers[1].points) EXPECT_EQ(pt.index, 2);
  EXPECT_TRUE(p.fibers[2].value.is_infinite());
  ASSERT_EQ(p.fibers[2].points.size(), 3u);
  for (const auto& pt : p.fibers[2].points) EXPECT_EQ(pt.index, 2);
}

TEST(Ramification, TrivialAndCustomMaps) {
  EXPECT_TRUE(ramification_profile(RatFn(P({1, 2}), P({3, 1}))).fibers.empty());
  // a^3: total ramification at 0 and inf.
  const RamificationProfile cube = ramification_profile(RatFn(P({0, 0, 0, 1})));
  EXPECT_EQ(cube.total_branching, 4);
  ASSERT_EQ(cube.fibers.size(), 2u);
  EXPECT_EQ(cube.fibers[0].points[0].index, 3);
  EXPECT_EQ(cube.fibers[1].points[0].index, 3);
  // a^2 + a: branch value -1/4 at a = -1/2 and inf.
  const RamificationProfile quad = ramification_profile(RatFn(P({0, 1, 1})));
  ASSERT_EQ(quad.fibers.size(), 2u);
  EXPECT_EQ(quad.fibers[0].value, ProjRational(Rational(-1, 4)));
  EXPECT_EQ(std::get<ProjRational>(quad.fibers[0].points[0].where), ProjRational(Rational(-1, 2)));
  EXPECT_THROW(ramification_profile(RatFn(P({3}))), DegenerateInput);
}

TEST(Ramification, RiemannHurwitzOnRandomCurves) {
  Gen g(34);
  for (int trial = 0; trial < 25; ++trial) {
    const JPair j = j_functions(g.curve());
    for (const RatFn* r : {&j.jF, &j.jK}) {
      const RamificationProfile p = ramification_profile(*r);
      EXPECT_EQ(p.total_branching, 10);
      EXPECT_EQ(p.unresolved_branching, 0);
      for (const auto& f : p.fibers) {
        const bool expected = f.value.is_infinite() || f.value == ProjRational(Rational(0)) ||
                              f.value == ProjRational(Rational(1728));
        EXPECT_TRUE(expected) << to_string(f.value);
      }
    }
  }
}

}  // namespace
}  // namespace biprym
