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

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "biprym/errors.hpp"
#include "biprym/lattice.hpp"
#include "biprym/matrix.hpp"
#include "biprym/rational.hpp"

namespace biprym {

inline constexpr std::size_t kAmbientRank = 14;

/// Ambient coordinates: the invariant classes of the symmetric square
/// followed by the six exceptional classes.
enum AmbientIndex : std::size_t {
  kDeltaHat = 0,
  kDelta0,
  kDelta1,
  kDelta2,
  kDelta3,
  kDelta4,
  kDelta5,
  kDelta6,
  kE12,
  kE13,
  kE14,
  kE23,
  kE24,
  kE34,
};

struct AmbientSpace {
  std::array<std::string, kAmbientRank> labels;
  IntMatrix gram;

  QMatrix form() const { return to_rational(gram); }
  Rational pair(const QVec& x, const QVec& y) const { return bilinear(form(), x, y); }
};

inline AmbientSpace ambient() {
  AmbientSpace a{{"dhat", "d0", "d1", "d2", "d3", "d4", "d5", "d6", "E12", "E13", "E14", "E23",
                  "E24", "E34"},
                 IntMatrix(kAmbientRank, kAmbientRank)};
  IntMatrix& g = a.gram;
  g(kDeltaHat, kDeltaHat) = 1;
  g(kDelta0, kDelta0) = -1;
  g(kDelta1, kDelta1) = -2;
  g(kDelta2, kDelta2) = -2;
  g(kDelta3, kDelta4) = g(kDelta4, kDelta3) = -2;
  g(kDelta5, kDelta6) = g(kDelta6, kDelta5) = -2;
  for (std::size_t i = kE12; i <= kE34; ++i) g(i, i) = -1;
  return a;
}

/// Sum of coefficient * basis vector.
inline QVec ambient_class(std::initializer_list<std::pair<std::size_t, long>> terms) {
  QVec v(kAmbientRank);
  for (const auto& [i, k] : terms) v[i] += k;
  return v;
}

/// The pairing on the surface and abelian side: half the ambient pairing.
inline Rational half_pair(const QVec& x, const QVec& y) {
  return Rational(1, 2) * ambient().pair(x, y);
}

/// delta_7 .. delta_11.
inline std::array<QVec, 5> branch_classes() {
  return {
      ambient_class({{kDeltaHat, 1}, {kE12, -1}, {kE13, -1}, {kE14, -1}}),
      ambient_class({{kDeltaHat, 1}, {kE12, -1}, {kE23, -1}, {kE24, -1}}),
      ambient_class({{kDeltaHat, 1}, {kE13, -1}, {kE23, -1}, {kE34, -1}}),
      ambient_class({{kDeltaHat, 1}, {kE14, -1}, {kE24, -1}, {kE34, -1}}),
      ambient_class({{kDeltaHat, 1},
                     {kDelta0, 1},
                     {kDelta2, -1},
                     {kE12, 1},
                     {kE13, 1},
                     {kE14, 1},
                     {kE23, 1},
                     {kE24, 1},
                     {kE34, 1}}),
  };
}

/// Pull-backs of gamma_1 .. gamma_14.
inline std::vector<QVec> gamma_basis() {
  std::vector<QVec> g;
  for (std::size_t i = kDelta1; i <= kDelta6; ++i) g.push_back(QVec::unit(kAmbientRank, i));
  for (const QVec& d : branch_classes()) g.push_back(d);
  for (std::size_t e : {kE12, kE13, kE14}) g.push_back(2 * QVec::unit(kAmbientRank, e));
  return g;
}

inline QMatrix gamma_matrix() { return rows_matrix(gamma_basis(), kAmbientRank); }

/// Ambient image of a vector in gamma coordinates.
inline QVec gamma_to_ambient(const QVec& gamma) {
  if (gamma.size() != 14) throw DegenerateInput("gamma_to_ambient: expected 14 coordinates");
  const std::vector<QVec> g = gamma_basis();
  QVec v(kAmbientRank);
  for (std::size_t i = 0; i < 14; ++i) {
    if (gamma[i] != 0) v = v + gamma[i] * g[i];
  }
  return v;
}

/// gamma coordinates from 1-based (index, coefficient) terms.
inline QVec gamma_class(std::initializer_list<std::pair<std::size_t, Rational>> terms) {
  QVec v(14);
  for (const auto& [i, k] : terms) v[i - 1] += k;
  return v;
}

/// The tabulated intersection matrix of gamma_1 .. gamma_14.
inline IntMatrix printed_gram() {
  static const int kRows[14][14] = {
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
  IntMatrix m(14, 14);
  for (std::size_t i = 0; i < 14; ++i) {
    for (std::size_t j = 0; j < 14; ++j) m(i, j) = kRows[i][j];
  }
  return m;
}

/// Half-scaled Gram matrix of the gamma basis.
inline QMatrix computed_gram() {
  const QMatrix g = gamma_matrix();
  return Rational(1, 2) * (g * ambient().form() * g.transpose());
}

/// (gamma_7 + gamma_8 + gamma_9 + gamma_10) / 2 in gamma coordinates.
inline QVec gamma_tilde() {
  const Rational h(1, 2);
  return gamma_class({{7, h}, {8, h}, {9, h}, {10, h}});
}

struct CurveClass {
  std::string name;
  QVec gamma;
  QVec ambient;
};

/// K_Y, rho(Delta_sigma), rho(Gamma_1..4), rho(E_12, E_13, E_14, E_34, E_24, E_23).
inline std::vector<CurveClass> curve_classes() {
  const Rational one(1);
  std::vector<std::pair<std::string, QVec>> raw = {
      {"K_Y", gamma_class({{1, 1}, {2, 1}, {7, 2}, {12, 1}, {13, 1}, {14, 1}})},
      {"Delta_sigma",
       gamma_class({{7, -3}, {8, 1}, {9, 1}, {10, 1}, {11, 2}, {12, -2}, {13, -2}, {14, -2}})},
      {"Gamma_1", gamma_class({{7, one}})},
      {"Gamma_2", gamma_class({{8, one}})},
      {"Gamma_3", gamma_class({{9, one}})},
      {"Gamma_4", gamma_class({{10, one}})},
      {"E_12", gamma_class({{12, one}})},
      {"E_13", gamma_class({{13, one}})},
      {"E_14", gamma_class({{14, one}})},
      {"E_34", gamma_class({{7, 1}, {8, 1}, {9, -1}, {10, -1}, {12, 1}})},
      {"E_24", gamma_class({{7, 1}, {8, -1}, {9, 1}, {10, -1}, {13, 1}})},
      {"E_23", gamma_class({{7, 1}, {8, -1}, {9, -1}, {10, 1}, {14, 1}})},
  };
  std::vector<CurveClass> out;
  for (auto& [name, g] : raw) out.push_back({name, g, gamma_to_ambient(g)});
  return out;
}

/// Basis of H'_Y in gamma coordinates, as tabulated.
inline std::vector<QVec> h_prime_y_printed_basis() {
  const QVec gt = gamma_tilde();
  std::vector<QVec> b;
  b.push_back(gamma_class({{1, 1}, {11, 1}}) + gt);
  b.push_back(gamma_class({{2, 1}, {8, 2}, {9, 2}, {10, 2}, {11, 1}, {12, -1}, {13, -1}, {14, -1}}) -
              3 * gt);
  for (std::size_t i = 3; i <= 6; ++i) b.push_back(gamma_class({{i, Rational(1)}}));
  return b;
}

// ---------------------------------------------------------------------------
// Abelian side.

/// Coordinates on H^2(A) + H: six wedge classes in a1 = alpha_1,
/// a2 = alpha_2 - alpha_3, b1 = beta_1, b2 = beta_2 - beta_3, then v_1 .. v_8.
enum AbelianIndex : std::size_t {
  kA1B1 = 0,
  kA2B2,
  kA1A2,
  kB1B2,
  kA1B2,
  kA2B1,
  kV1,
  kV2,
  kV3,
  kV4,
  kV5,
  kV6,
  kV7,
  kV8,
};

inline constexpr std::size_t kAbelianRank = 14;

inline const std::array<std::string, kAbelianRank>& abelian_labels() {
  static const std::array<std::string, kAbelianRank> kLabels = {
      "a1^b1", "a2^b2", "a1^a2", "b1^b2", "a1^b2", "a2^b1", "v1",
      "v2",    "v3",    "v4",    "v5",    "v6",    "v7",    "v8"};
  return kLabels;
}

namespace detail {

/// Symplectic form on H^1(A) in the order a1, a2, b1, b2.
inline Integer omega(std::size_t i, std::size_t j) {
  static const int kOmega[4][4] = {{0, 0, 1, 0}, {0, 0, 0, 2}, {-1, 0, 0, 0}, {0, -2, 0, 0}};
  return kOmega[i][j];
}

inline constexpr std::array<std::pair<std::size_t, std::size_t>, 6> kWedgePairs = {
    {{0, 2}, {1, 3}, {0, 1}, {2, 3}, {0, 3}, {1, 2}}};

}  // namespace detail

/// Pairing on H^2(A) + H.
inline QMatrix abelian_gram() {
  QMatrix g(kAbelianRank, kAbelianRank);
  for (std::size_t p = 0; p < 6; ++p) {
    for (std::size_t q = 0; q < 6; ++q) {
      const auto [x, y] = detail::kWedgePairs[p];
      const auto [z, w] = detail::kWedgePairs[q];
      const Integer pf = detail::omega(x, y) * detail::omega(z, w) -
                         detail::omega(x, z) * detail::omega(y, w) +
                         detail::omega(x, w) * detail::omega(y, z);
      g(p, q) = make_rational(pf, 2);
    }
  }
  for (std::size_t i = kV1; i <= kV8; ++i) g(i, i) = -1;
  return g;
}

inline QVec iota_c() {
  QVec v(kAbelianRank);
  v[kA1B1] = 2;
  v[kA2B2] = 1;
  return v;
}

/// ([iota(C)] + v1 + v2 + v3 - v4 - ... - v8) / 2.
inline QVec v_tilde() {
  QVec v = iota_c();
  for (std::size_t i = kV1; i <= kV3; ++i) v[i] += 1;
  for (std::size_t i = kV4; i <= kV8; ++i) v[i] -= 1;
  return Rational(1, 2) * v;
}

/// Row i is the ambient image of abelian coordinate i.
inline QMatrix lambda_star_matrix() {
  std::vector<QVec> r(kAbelianRank);
  r[kA1B1] = ambient_class({{kDelta0, 1}, {kDeltaHat, 1}});
  r[kA2B2] = ambient_class({{kDelta1, 1}, {kDelta2, -1}, {kDeltaHat, 2}});
  r[kA1A2] = QVec::unit(kAmbientRank, kDelta3);
  r[kB1B2] = QVec::unit(kAmbientRank, kDelta4);
  r[kA1B2] = QVec::unit(kAmbientRank, kDelta5);
  r[kA2B1] = QVec::unit(kAmbientRank, kDelta6);
  r[kV1] = ambient_class({{kE34, 1}, {kE12, -1}});
  r[kV2] = ambient_class({{kE24, 1}, {kE13, -1}});
  r[kV3] = ambient_class({{kE23, 1}, {kE14, -1}});
  r[kV4] = ambient_class({{kE34, 1}, {kE12, 1}});
  r[kV5] = ambient_class({{kE24, 1}, {kE13, 1}});
  r[kV6] = ambient_class({{kE23, 1}, {kE14, 1}});
  r[kV7] = ambient_class({{kDeltaHat, 1}, {kDelta0, 1}, {kDelta2, -1}});
  const QVec v_tilde_image = ambient_class({{kDeltaHat, 1}, {kE12, -1}, {kE13, -1}, {kE14, -1}});
  QVec v8 = 2 * r[kA1B1] + r[kA2B2] + r[kV1] + r[kV2] + r[kV3] - 2 * v_tilde_image;
  for (std::size_t i = kV4; i <= kV7; ++i) v8 = v8 - r[i];
  r[kV8] = v8;
  return rows_matrix(r, kAmbientRank);
}

inline QVec lambda_star(const QVec& a) {
  if (a.size() != kAbelianRank) throw DegenerateInput("lambda_star: expected 14 coordinates");
  const QMatrix m = lambda_star_matrix();
  QVec v(kAmbientRank);
  for (std::size_t i = 0; i < kAbelianRank; ++i) {
    if (a[i] != 0) v = v + a[i] * row_vector(m, i);
  }
  return v;
}

struct PiEntry {
  std::string name;
  QVec y_ambient;
  QVec a_element;
  QVec a_ambient;
};

/// Abelian-side partners of curve_classes(), in the same order.
inline std::vector<QVec> pi_a_elements() {
  const QVec vt = v_tilde();
  auto v = [](std::size_t i) { return QVec::unit(kAbelianRank, i); };
  return {
      iota_c() - 2 * v(kV7), 2 * v(kV7),        vt,
      vt - v(kV2) - v(kV3),  vt - v(kV1) - v(kV3), vt - v(kV1) - v(kV2),
      v(kV4) - v(kV1),       v(kV5) - v(kV2),   v(kV6) - v(kV3),
      v(kV1) + v(kV4),       v(kV2) + v(kV5),   v(kV3) + v(kV6),
  };
}

struct LatticeCheck {
  std::string name;
  bool passed = false;
};

/// Every lattice lives in the ambient coordinates and pairs by half the
/// ambient form.
struct Overlattices {
  GramLattice H2Y;         // rho^* H^2(Y)
  GramLattice parity;      // {x : <delta_i, x> even, i = 7..11}
  GramLattice H_Y;
  GramLattice H_prime_Y;
  QVec c_Y;
  GramLattice H;           // lambda^* of the v_i
  GramLattice H2A;         // lambda^* H^2(A)
  GramLattice H2A_plus_H;
  GramLattice H_A;
  GramLattice H_prime_A;
  Integer index_Y;
  Integer index_A;
  std::vector<PiEntry> pi_map;
  std::vector<LatticeCheck> checks;

  bool passed(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return c.passed;
    }
    throw DegenerateInput("unknown lattice check: " + name);
  }
};

namespace detail {

inline GramLattice ambient_lattice(const std::vector<QVec>& gens) {
  return GramLattice(rows_matrix(gens, kAmbientRank), ambient().form(), Rational(1, 2));
}

inline GramLattice ambient_lattice(const QMatrix& gens) {
  return GramLattice(gens, ambient().form(), Rational(1, 2));
}

inline bool gram_integral(const GramLattice& l) {
  const QMatrix g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (!is_integer(g(i, j))) return false;
    }
  }
  return true;
}

/// Pairings of each basis row with each of the given classes, scaled to integers.
inline IntMatrix pairing_values(const GramLattice& l, const std::vector<QVec>& classes,
                                const Rational& factor) {
  const QMatrix form = ambient().form();
  IntMatrix m(l.rank(), classes.size());
  for (std::size_t i = 0; i < l.rank(); ++i) {
    for (std::size_t j = 0; j < classes.size(); ++j) {
      const Rational v = factor * bilinear(form, l.generator(i), classes[j]);
      if (!is_integer(v)) throw ConstructionInconsistency("non-integral pairing value");
      m(i, j) = v.get_num();
    }
  }
  return m;
}

}  // namespace detail

/// Builds both overlattice constructions and checks every identity relating
/// them. Throws ConstructionInconsistency naming the first identity that fails.
inline Overlattices build_overlattices() {
  const AmbientSpace amb = ambient();
  const QMatrix form = amb.form();
  Overlattices o;
  auto check = [&](const std::string& name, bool ok) { o.checks.push_back({name, ok}); };

  const std::vector<QVec> gammas = gamma_basis();
  o.H2Y = detail::ambient_lattice(gammas);
  check("gram_matches_printed", computed_gram() == to_rational(printed_gram()));

  {
    const std::array<QVec, 5> br = branch_classes();
    const std::vector<QVec> cls(br.begin(), br.end());
    const GramLattice whole = detail::ambient_lattice(QMatrix::identity(kAmbientRank));
    o.parity = detail::ambient_lattice(
        congruence_sublattice(whole.generators(), detail::pairing_values(whole, cls, 1), 2));
    check("gamma_basis_spans_parity_lattice", o.parity.same_span(o.H2Y));
    check("parity_lattice_determinant",
          determinant(o.parity.gram()) == determinant(o.H2Y.gram()));
  }

  const std::vector<CurveClass> classes = curve_classes();
  check("K_Y_pullback",
        classes[0].ambient == ambient_class({{kDeltaHat, 2}, {kDelta1, 1}, {kDelta2, 1}}));
  check("Delta_sigma_pullback",
        classes[1].ambient == ambient_class({{kDeltaHat, 2}, {kDelta0, 2}, {kDelta2, -2}}));
  {
    bool ok = half_pair(classes[0].ambient, classes[0].ambient) == 0 &&
              half_pair(classes[1].ambient, classes[1].ambient) == -4;
    for (std::size_t i = 2; i < 6; ++i) ok = ok && half_pair(classes[i].ambient, classes[i].ambient) == -1;
    for (std::size_t i = 6; i < 12; ++i) ok = ok && half_pair(classes[i].ambient, classes[i].ambient) == -2;
    check("self_intersections", ok);
  }

  const QVec gt = gamma_to_ambient(gamma_tilde());
  check("gamma_tilde_integral",
        gt.is_integral() &&
            gt == ambient_class({{kDeltaHat, 2}, {kE12, -1}, {kE13, -1}, {kE14, -1}, {kE23, -1},
                                 {kE24, -1}, {kE34, -1}}));
  {
    std::vector<QVec> gens = gammas;
    gens.push_back(gt);
    o.H_Y = detail::ambient_lattice(gens);
  }

  {
    std::vector<QVec> perp;
    for (std::size_t i = 6; i < 12; ++i) perp.push_back(classes[i].ambient);
    perp.push_back(classes[1].ambient);
    perp.push_back(classes[0].ambient - gt);
    o.H_prime_Y = detail::ambient_lattice(congruence_sublattice(
        o.H_Y.generators(), detail::pairing_values(o.H_Y, perp, 1), Integer(0)));
  }
  check("H_prime_Y_rank", o.H_prime_Y.rank() == 6);
  std::vector<QVec> printed;
  for (const QVec& b : h_prime_y_printed_basis()) printed.push_back(gamma_to_ambient(b));
  const GramLattice printed_lat = detail::ambient_lattice(printed);
  check("H_prime_Y_printed_basis",
        printed_lat.rank() == 6 && printed_lat.same_span(o.H_prime_Y));
  check("H_prime_Y_printed_images",
        printed[0] == ambient_class({{kDeltaHat, 3}, {kDelta0, 1}, {kDelta1, 1}, {kDelta2, -1}}) &&
            printed[1] == ambient_class({{kDeltaHat, 1}, {kDelta0, 1}}));
  check("H_prime_Y_integral", detail::gram_integral(o.H_prime_Y));

  o.c_Y = classes[0].ambient + classes[1].ambient;
  check("c_Y_pullback",
        o.c_Y == ambient_class({{kDeltaHat, 4}, {kDelta0, 2}, {kDelta1, 1}, {kDelta2, -1}}));
  check("c_Y_in_H_prime_Y", o.H_prime_Y.contains(o.c_Y));
  check("c_Y_norm", half_pair(o.c_Y, o.c_Y) == 4);

  const QMatrix lam = lambda_star_matrix();
  check("lambda_injective", rank(lam) == kAbelianRank);
  check("lambda_doubles_pairing", lam * form * lam.transpose() == Rational(2) * abelian_gram());
  check("lambda_v_tilde", lambda_star(v_tilde()) == gamma_to_ambient(gamma_class({{7, 1}})));
  check("lambda_iota_C_is_c_Y", lambda_star(iota_c()) == o.c_Y);

  o.H2A = detail::ambient_lattice(lam.submatrix_rows(0, 6));
  o.H = detail::ambient_lattice(lam.submatrix_rows(kV1, 8));
  o.H2A_plus_H = detail::ambient_lattice(lam);
  check("H2A_equals_H_prime_Y", o.H2A.same_span(o.H_prime_Y));
  check("H_prime_Y_gram_matches_abelian",
        printed_lat.gram() == [] {
          QMatrix g(6, 6);
          const QMatrix a = abelian_gram();
          // printed basis order: a1^b1 + a2^b2, a1^b1, a1^a2, b1^b2, a1^b2, a2^b1
          const std::array<QVec, 6> basis = {
              QVec::unit(kAbelianRank, kA1B1) + QVec::unit(kAbelianRank, kA2B2),
              QVec::unit(kAbelianRank, kA1B1), QVec::unit(kAbelianRank, kA1A2),
              QVec::unit(kAbelianRank, kB1B2), QVec::unit(kAbelianRank, kA1B2),
              QVec::unit(kAbelianRank, kA2B1)};
          for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) g(i, j) = bilinear(a, basis[i], basis[j]);
          }
          return g;
        }());

  const QVec vt_image = lambda_star(v_tilde());
  {
    QMatrix gens(kAbelianRank + 1, kAmbientRank);
    for (std::size_t i = 0; i < kAbelianRank; ++i) {
      for (std::size_t j = 0; j < kAmbientRank; ++j) gens(i, j) = lam(i, j);
    }
    for (std::size_t j = 0; j < kAmbientRank; ++j) gens(kAbelianRank, j) = vt_image[j];
    o.H_A = detail::ambient_lattice(gens);
  }
  check("H_A_integral_ambient", o.H_A.generators() == to_rational(to_integer(o.H_A.generators())));
  check("lambda_H_A_equals_rho_H_Y", o.H_A.same_span(o.H_Y));

  o.H_prime_A = detail::ambient_lattice(congruence_sublattice(
      o.H_A.generators(), detail::pairing_values(o.H_A, {vt_image}, 1), Integer(2)));
  check("lambda_H_prime_A_equals_rho_H2Y", o.H_prime_A.same_span(o.H2Y));
  check("H_prime_A_integral", detail::gram_integral(o.H_prime_A));

  o.index_Y = lattice_index(o.H_Y.generators(), o.H2Y.generators());
  o.index_A = lattice_index(o.H_A.generators(), o.H2A_plus_H.generators());
  check("glue_index_Y", o.index_Y == 2);
  check("glue_index_A", o.index_A == 2);
  {
    bool integral = true;
    for (std::size_t i = 0; i < o.H_A.rank() && integral; ++i) {
      for (std::size_t j = 0; j < o.H_Y.rank(); ++j) {
        if (!is_integer(bilinear(form, o.H_A.generator(i), o.H_Y.generator(j)))) {
          integral = false;
          break;
        }
      }
    }
    check("cross_pairing_half_integral", integral);
    check("H_Y_not_integral", half_pair(gt, gammas[6]) == Rational(-1, 2));
  }

  const std::vector<QVec> pa = pi_a_elements();
  bool in_prime = true;
  bool matches = true;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const QVec img = lambda_star(pa[i]);
    o.pi_map.push_back({classes[i].name, classes[i].ambient, pa[i], img});
    in_prime = in_prime && o.H_prime_A.contains(img);
    matches = matches && img == classes[i].ambient;
  }
  check("pi_A_in_H_prime_A", in_prime);
  check("pi_correspondence", matches);

  for (const auto& c : o.checks) {
    if (!c.passed) throw ConstructionInconsistency("lattice identity failed: " + c.name);
  }
  return o;
}

/// <1> + <-1>^5 + (-A_3).
inline GramLattice generic_ns_y() {
  IntMatrix g(9, 9);
  g(0, 0) = 1;
  for (std::size_t i = 1; i <= 5; ++i) g(i, i) = -1;
  for (std::size_t i = 6; i <= 8; ++i) g(i, i) = -2;
  g(6, 7) = g(7, 6) = 1;
  g(7, 8) = g(8, 7) = 1;
  return GramLattice::from_gram(g);
}

/// <4> + <-1>^8.
inline GramLattice generic_ns_a() {
  IntMatrix g(9, 9);
  g(0, 0) = 4;
  for (std::size_t i = 1; i <= 8; ++i) g(i, i) = -1;
  return GramLattice::from_gram(g);
}

}  // namespace biprym
