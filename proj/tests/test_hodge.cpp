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

#include "biprym/hodge_lattice.hpp"
#include "support.hpp"

namespace biprym {
namespace {

using testing::Gen;

const Overlattices& lattices() {
  static const Overlattices o = build_overlattices();
  return o;
}

QVec amb(std::initializer_list<std::pair<std::size_t, long>> t) { return ambient_class(t); }

const CurveClass& find_class(const std::string& name) {
  static const std::vector<CurveClass> cls = curve_classes();
  for (const auto& c : cls) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("no class " + name);
}

TEST(Ambient, PrintedEntries) {
  const AmbientSpace a = ambient();
  EXPECT_EQ(a.gram(kDeltaHat, kDeltaHat), 1);
  EXPECT_EQ(a.gram(kDelta0, kDelta0), -1);
  EXPECT_EQ(a.gram(kDelta3, kDelta4), -2);
  EXPECT_EQ(a.gram(kDelta5, kDelta6), -2);
  EXPECT_EQ(a.gram(kDelta1, kDelta2), 0);
  EXPECT_EQ(a.gram(kE12, kE12), -1);
  EXPECT_EQ(a.gram(kE12, kE13), 0);
  for (std::size_t i = kDeltaHat; i <= kDelta6; ++i) EXPECT_EQ(a.gram(kE12, i), 0);
  EXPECT_EQ(a.gram, a.gram.transpose());
  EXPECT_EQ(determinant(a.gram), -64);
}

TEST(GammaBasis, GramEqualsPublishedMatrix) {
  const int printed[14][14] = {
      {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
      {0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 2, 1, 1, 1},
      {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 2, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 2, 0, 1, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 2, 0, 0, 1},
      {0, 1, 0, 0, 0, 0, 2, 2, 2, 2, -4, -1, -1, -1},
      {0, 0, 0, 0, 0, 0, 1, 1, 0, 0, -1, -2, 0, 0},
      {0, 0, 0, 0, 0, 0, 1, 0, 1, 0, -1, 0, -2, 0},
      {0, 0, 0, 0, 0, 0, 1, 0, 0, 1, -1, 0, 0, -2},
  };
  const std::vector<QVec> g = gamma_basis();
  ASSERT_EQ(g.size(), 14u);
  int matched = 0;
  for (std::size_t i = 0; i < 14; ++i) {
    for (std::size_t j = 0; j < 14; ++j) {
      EXPECT_EQ(half_pair(g[i], g[j]), printed[i][j]) << i << "," << j;
      if (half_pair(g[i], g[j]) == printed[i][j]) ++matched;
    }
  }
  EXPECT_EQ(matched, 196);
  EXPECT_EQ(computed_gram(), to_rational(printed_gram()));
}

TEST(GammaBasis, CanonicalClassPullback) {
  EXPECT_EQ(find_class("K_Y").ambient, amb({{kDeltaHat, 2}, {kDelta1, 1}, {kDelta2, 1}}));
  EXPECT_EQ(find_class("E_23").gamma,
            gamma_class({{7, 1}, {8, -1}, {9, -1}, {10, 1}, {14, 1}}));
}

// Index of {x in Z^14 : <delta_i, x> even} found by elimination over GF(2).
TEST(GammaBasis, DeterminantMatchesParityLattice) {
  const AmbientSpace a = ambient();
  std::vector<std::vector<int>> rows;
  for (const QVec& d : branch_classes()) {
    std::vector<int> r(kAmbientRank);
    for (std::size_t j = 0; j < kAmbientRank; ++j) {
      Rational s(0);
      for (std::size_t k = 0; k < kAmbientRank; ++k) s += d[k] * Rational(a.gram(k, j));
      r[j] = mpz_odd_p(s.get_num_mpz_t()) ? 1 : 0;
    }
    rows.push_back(r);
  }
  std::size_t rk = 0;
  for (std::size_t col = 0; col < kAmbientRank && rk < rows.size(); ++col) {
    std::size_t p = rk;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rk]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rk && rows[i][col]) {
        for (std::size_t j = 0; j < kAmbientRank; ++j) rows[i][j] ^= rows[rk][j];
      }
    }
    ++rk;
  }
  // delta_7 + ... + delta_10 is twice an integral class.
  EXPECT_EQ(rk, 4u);
  const Rational ambient_det(-64);
  const Rational index(1 << rk);
  const QMatrix g = gamma_matrix();
  const Rational gamma_det = determinant(g * a.form() * g.transpose());
  EXPECT_EQ(gamma_det, ambient_det * index * index);
  EXPECT_EQ(determinant(to_rational(printed_gram())), gamma_det / Rational(1 << 14));
  EXPECT_EQ(gamma_det / Rational(1 << 14), -1);
  EXPECT_EQ(determinant(lattices().parity.gram()), determinant(lattices().H2Y.gram()));
}

TEST(CurveClasses, SelfIntersections) {
  EXPECT_EQ(half_pair(find_class("K_Y").ambient, find_class("K_Y").ambient), 0);
  EXPECT_EQ(half_pair(find_class("Delta_sigma").ambient, find_class("Delta_sigma").ambient), -4);
  for (const char* n : {"Gamma_1", "Gamma_2", "Gamma_3", "Gamma_4"}) {
    EXPECT_EQ(half_pair(find_class(n).ambient, find_class(n).ambient), -1) << n;
  }
  for (const char* n : {"E_12", "E_13", "E_14", "E_34", "E_24", "E_23"}) {
    EXPECT_EQ(half_pair(find_class(n).ambient, find_class(n).ambient), -2) << n;
  }
}

TEST(CurveClasses, GramEvaluationsMatchPrintedMatrix) {
  const QMatrix pg = to_rational(printed_gram());
  for (const auto& a : curve_classes()) {
    for (const auto& b : curve_classes()) {
      EXPECT_EQ(bilinear(pg, a.gamma, b.gamma), half_pair(a.ambient, b.ambient));
    }
  }
  EXPECT_EQ(half_pair(find_class("K_Y").ambient, find_class("Gamma_1").ambient), 1);
  for (const char* n : {"Gamma_2", "Gamma_3", "Gamma_4"}) {
    EXPECT_EQ(half_pair(find_class("K_Y").ambient, find_class(n).ambient), 1) << n;
  }
  EXPECT_EQ(half_pair(find_class("K_Y").ambient, find_class("Delta_sigma").ambient), 4);
}

TEST(Overlattices, AllIdentitiesHold) {
  const Overlattices& o = lattices();
  for (const auto& c : o.checks) EXPECT_TRUE(c.passed) << c.name;
  EXPECT_GE(o.checks.size(), 20u);
  EXPECT_EQ(o.H_prime_Y.rank(), 6u);
  EXPECT_EQ(o.H_Y.rank(), 14u);
  EXPECT_EQ(o.H_A.rank(), 14u);
  EXPECT_EQ(o.index_Y, 2);
  EXPECT_EQ(o.index_A, 2);
  EXPECT_EQ(half_pair(o.c_Y, o.c_Y), 4);
  EXPECT_EQ(o.c_Y, amb({{kDeltaHat, 4}, {kDelta0, 2}, {kDelta1, 1}, {kDelta2, -1}}));
  EXPECT_TRUE(o.H_A.same_span(o.H_Y));
  EXPECT_TRUE(o.H_prime_A.same_span(o.H2Y));
  EXPECT_FALSE(o.H2Y.same_span(o.H2A_plus_H));
}

TEST(Overlattices, GlueVectorIsIntegral) {
  const QVec gt = gamma_to_ambient(gamma_tilde());
  EXPECT_TRUE(gt.is_integral());
  EXPECT_EQ(gt, amb({{kDeltaHat, 2}, {kE12, -1}, {kE13, -1}, {kE14, -1}, {kE23, -1}, {kE24, -1},
                     {kE34, -1}}));
  EXPECT_FALSE(lattices().H2Y.contains(gt));
  EXPECT_TRUE(lattices().H_Y.contains(gt));
}

// The wedge pairing on H^1(A) = <a1, a2, b1, b2>: a lambda_2 class pairs by
// minus the determinant of the H^1 pairings, and the cup product of two
// lambda_1 classes adds <x, y> times the class of pairing one.
TEST(Overlattices, HPrimeYMatchesWedgePairing) {
  auto w = [](std::size_t i, std::size_t j) -> long {
    const long m[4][4] = {{0, 0, 1, 0}, {0, 0, 0, 2}, {-1, 0, 0, 0}, {0, -2, 0, 0}};
    return m[i][j];
  };
  auto cup_pair = [&](std::pair<std::size_t, std::size_t> p, std::pair<std::size_t, std::size_t> q) {
    const auto [x, y] = p;
    const auto [z, t] = q;
    const long lambda2 = -(w(x, z) * w(y, t) - w(x, t) * w(y, z));
    return lambda2 + w(x, y) * w(z, t);
  };
  using Wedge = std::vector<std::pair<long, std::pair<std::size_t, std::size_t>>>;
  const std::vector<Wedge> basis = {
      {{1, {0, 2}}, {1, {1, 3}}}, {{1, {0, 2}}}, {{1, {0, 1}}},
      {{1, {2, 3}}},              {{1, {0, 3}}}, {{1, {1, 2}}},
  };
  std::vector<QVec> printed;
  for (const QVec& b : h_prime_y_printed_basis()) printed.push_back(gamma_to_ambient(b));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      long s = 0;
      for (const auto& [ci, pi] : basis[i]) {
        for (const auto& [cj, pj] : basis[j]) s += ci * cj * cup_pair(pi, pj);
      }
      EXPECT_EQ(half_pair(printed[i], printed[j]), make_rational(s, 2)) << i << "," << j;
    }
  }
  EXPECT_TRUE(detail::ambient_lattice(printed).same_span(lattices().H_prime_Y));
}

TEST(Overlattices, CorrespondenceTable) {
  const Overlattices& o = lattices();
  ASSERT_EQ(o.pi_map.size(), 12u);
  for (const auto& e : o.pi_map) {
    EXPECT_EQ(e.a_ambient, e.y_ambient) << e.name;
    EXPECT_TRUE(o.H_prime_A.contains(e.a_ambient)) << e.name;
  }
  EXPECT_EQ(lambda_star(v_tilde()), find_class("Gamma_1").ambient);
  EXPECT_EQ(lambda_star(iota_c() - 2 * QVec::unit(kAbelianRank, kV7)), find_class("K_Y").ambient);
  const QVec e23 = lambda_star(QVec::unit(kAbelianRank, kV3) + QVec::unit(kAbelianRank, kV6));
  EXPECT_EQ(e23, find_class("E_23").ambient);
  EXPECT_NE(e23, find_class("E_34").ambient);
}

TEST(Overlattices, AbelianPairingIsHalfAmbient) {
  const QMatrix a = abelian_gram();
  EXPECT_EQ(bilinear(a, iota_c(), iota_c()), 4);
  for (std::size_t i = kV1; i <= kV8; ++i) EXPECT_EQ(a(i, i), -1);
  EXPECT_EQ(bilinear(a, v_tilde(), v_tilde()), Rational(-1));
  Gen g(31);
  for (int trial = 0; trial < 50; ++trial) {
    QVec x(kAbelianRank), y(kAbelianRank);
    for (std::size_t i = 0; i < kAbelianRank; ++i) {
      x[i] = g.integer(-3, 3);
      y[i] = g.integer(-3, 3);
    }
    EXPECT_EQ(half_pair(lambda_star(x), lambda_star(y)), bilinear(a, x, y));
  }
}

// Random elements: cross pairings lie in Z/2 and the integrality condition
// against the glue vector cuts out exactly the surface lattice.
TEST(Overlattices, RandomElementProperties) {
  const Overlattices& o = lattices();
  const QVec vt = lambda_star(v_tilde());
  Gen g(37);
  for (int trial = 0; trial < 200; ++trial) {
    QVec x(kAmbientRank), y(kAmbientRank);
    for (std::size_t i = 0; i < o.H_A.rank(); ++i) x = x + Rational(g.integer(-4, 4)) * o.H_A.generator(i);
    for (std::size_t i = 0; i < o.H_Y.rank(); ++i) y = y + Rational(g.integer(-4, 4)) * o.H_Y.generator(i);
    const Rational xy = ambient().pair(x, y);
    ASSERT_TRUE(is_integer(xy));
    EXPECT_TRUE(is_integer(half_pair(x, x)));
    const bool integral = is_integer(half_pair(x, vt));
    EXPECT_EQ(o.H_prime_A.contains(x), integral);
    EXPECT_EQ(o.H2Y.contains(x), integral);
  }
}

TEST(InvariantCompareLattices, GenericNeronSeveriCandidates) {
  const InvariantReport r = invariant_compare(generic_ns_y(), generic_ns_a());
  EXPECT_EQ(r.first.rank, 9u);
  EXPECT_EQ(r.first.signature, (Signature{1, 8, 0}));
  EXPECT_EQ(r.second.signature, (Signature{1, 8, 0}));
  EXPECT_EQ(abs(r.first.determinant), 4);
  EXPECT_EQ(abs(r.second.determinant), 4);
  std::vector<Integer> f(8, Integer(1));
  f.push_back(4);
  EXPECT_EQ(r.first.invariant_factors, f);
  EXPECT_EQ(r.second.invariant_factors, f);
  EXPECT_EQ(r.verdict, "inconclusive");
}

TEST(InvariantCompareLattices, SurfaceVersusAbelianPlusH) {
  const Overlattices& o = lattices();
  const InvariantReport r = invariant_compare(o.H2Y, o.H2A_plus_H);
  EXPECT_EQ(r.first.rank, 14u);
  EXPECT_EQ(abs(r.first.determinant), abs(r.second.determinant));
  const InvariantReport self = invariant_compare(o.H2Y, o.H2Y);
  EXPECT_EQ(self.verdict, "inconclusive");
  EXPECT_EQ(r.first.signature, (Signature{3, 11, 0}));
  EXPECT_EQ(r.second.signature, (Signature{3, 11, 0}));
  EXPECT_EQ(r.first.determinant, -1);
  EXPECT_EQ(r.second.determinant, -1);
  EXPECT_FALSE(r.first.even);
  EXPECT_FALSE(r.second.even);
  EXPECT_EQ(r.verdict, "inconclusive");
}

}  // namespace
}  // namespace biprym
