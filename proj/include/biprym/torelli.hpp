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
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "biprym/bipoly.hpp"
#include "biprym/family.hpp"

namespace biprym {

/// All rational a (and possibly inf) with r(a) = v, sorted.
inline std::vector<ProjRational> solve_level_set(const RatFn& r, const ProjRational& v) {
  if (r.is_constant()) throw DegenerateInput("solve_level_set: constant map");
  const UniPoly level = v.is_infinite() ? r.den() : r.num() - r.den() * v.value();
  std::vector<ProjRational> out;
  for (const Rational& x : rational_roots(level)) {
    if (r(ProjRational(x)) == v) out.emplace_back(x);
  }
  if (r(ProjRational::infinity()) == v) out.push_back(ProjRational::infinity());
  std::sort(out.begin(), out.end());
  return out;
}

struct FiberSolution {
  ProjRational target;
  std::vector<ProjRational> side_F;
  std::vector<ProjRational> side_K;
  /// Parameters on both sides.
  std::vector<ProjRational> shared;
};

inline FiberSolution period_fiber(const BiellipticCurve& c, const ProjRational& target) {
  const JPair j = j_functions(c);
  FiberSolution out{target, solve_level_set(j.jF, target), solve_level_set(j.jK, target), {}};
  std::set_intersection(out.side_F.begin(), out.side_F.end(), out.side_K.begin(), out.side_K.end(),
                        std::back_inserter(out.shared));
  return out;
}

struct NodePair {
  ProjRational a1;
  ProjRational a2;
  std::pair<ProjRational, ProjRational> value;

  friend bool operator==(const NodePair& x, const NodePair& y) { return x.a1 == y.a1 && x.a2 == y.a2; }
  friend bool operator<(const NodePair& x, const NodePair& y) {
    return x.a1 < y.a1 || (x.a1 == y.a1 && x.a2 < y.a2);
  }
};

namespace detail {

/// (num(x) den(y) - num(y) den(x)) / (x - y)
inline BiPoly divided_difference(const RatFn& r) {
  const int d = r.degree();
  // Columns indexed by powers of x, entries polynomials in y.
  std::vector<UniPoly> m(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    const Rational& ni = r.num().coeff(static_cast<std::size_t>(i));
    const Rational& di = r.den().coeff(static_cast<std::size_t>(i));
    m[static_cast<std::size_t>(i)] = r.den() * ni - r.num() * di;
  }
  // Synthetic division by (x - y) over Q[y].
  std::vector<UniPoly> q(static_cast<std::size_t>(d));
  UniPoly carry;
  for (int i = d; i >= 1; --i) {
    carry = m[static_cast<std::size_t>(i)] + carry * UniPoly::x();
    q[static_cast<std::size_t>(i - 1)] = carry;
  }
  if (!(m[0] + carry * UniPoly::x()).is_zero()) {
    throw ConstructionInconsistency("divided_difference: inexact division");
  }
  return BiPoly::from_x_columns(q);
}

/// Node pairs with both parameters finite in the chart where the maps are f and g.
inline std::vector<std::pair<Rational, Rational>> affine_nodes(const RatFn& f, const RatFn& g) {
  const BiPoly bf = divided_difference(f);
  const BiPoly bg = divided_difference(g);
  const UniPoly elim = resultant_bivariate(bf, bg, Var::Y);
  if (elim.is_zero()) throw DegenerateMap("find_nodes: the two j-functions are dependent");
  std::vector<std::pair<Rational, Rational>> out;
  for (const Rational& a : rational_roots(elim)) {
    const UniPoly common = gcd(bf.specialize(Var::X, a), bg.specialize(Var::X, a));
    if (common.degree() < 1) continue;
    for (const Rational& b : rational_roots(common)) {
      if (b == a) continue;
      if (f(ProjRational(a)) == f(ProjRational(b)) && g(ProjRational(a)) == g(ProjRational(b))) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

}  // namespace detail

/// Rational pairs a1 != a2 in P^1 with (jF, jK)(a1) = (jF, jK)(a2). Each
/// unordered pair appears once with a1 < a2 (inf last). The seed only picks
/// the second chart a = r + 1/s.
inline std::vector<NodePair> find_nodes(const BiellipticCurve& c, std::uint64_t seed = 0) {
  const JPair j = j_functions(c);
  auto both = [&](const ProjRational& a) { return std::make_pair(j.jF(a), j.jK(a)); };
  std::vector<NodePair> out;
  auto add = [&](ProjRational a1, ProjRational a2) {
    if (a1 == a2) return;
    if (a2 < a1) std::swap(a1, a2);
    const auto v = both(a1);
    if (v != both(a2)) throw ConstructionInconsistency("find_nodes: node failed verification");
    out.push_back(NodePair{a1, a2, v});
  };

  for (const auto& [a, b] : detail::affine_nodes(j.jF, j.jK)) add(a, b);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-97, 97);
  std::uniform_int_distribution<long> den(1, 13);
  const auto at_inf = both(ProjRational::infinity());
  Rational r;
  do {
    r = make_rational(num(rng), den(rng));
  } while (both(ProjRational(r)) == at_inf);
  // a = (r s + 1) / s
  const RatFn f2 = j.jF.compose_moebius(r, Rational(1), Rational(1), Rational(0));
  const RatFn g2 = j.jK.compose_moebius(r, Rational(1), Rational(1), Rational(0));
  auto back = [&](const Rational& s) {
    return s == 0 ? ProjRational::infinity() : ProjRational(Rational(r + 1 / s));
  };
  for (const auto& [s1, s2] : detail::affine_nodes(f2, g2)) add(back(s1), back(s2));

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {
inline UniPoly level_polynomial(const RatFn& r, const ProjRational& v) {
  return v.is_infinite() ? r.den() : r.num() - r.den() * v.value();
}
}  // namespace detail

/// True iff some a in P^1 (over the algebraic closure) has jF(a) = u and jK(a) = v.
inline bool image_contains(const BiellipticCurve& c, const ProjRational& u, const ProjRational& v) {
  const JPair j = j_functions(c);
  if (j.jF(ProjRational::infinity()) == u && j.jK(ProjRational::infinity()) == v) return true;
  return gcd(detail::level_polynomial(j.jF, u), detail::level_polynomial(j.jK, v)).degree() >= 1;
}

/// Rational parameters a with (jF(a), jK(a)) = (u, v).
inline std::vector<ProjRational> image_witnesses(const BiellipticCurve& c, const ProjRational& u,
                                                 const ProjRational& v) {
  const JPair j = j_functions(c);
  std::vector<ProjRational> out;
  for (const ProjRational& a : solve_level_set(j.jF, u)) {
    if (j.jK(a) == v) out.push_back(a);
  }
  return out;
}

inline bool common_ramification(const BiellipticCurve& c) {
  const JPair j = j_functions(c);
  if (ramification_index_at_infinity(j.jF) >= 2 && ramification_index_at_infinity(j.jK) >= 2) return true;
  return gcd(ramification_polynomial(j.jF), ramification_polynomial(j.jK)).degree() >= 1;
}

namespace detail {

inline BiPoly divide_columns(const BiPoly& p, const UniPoly& g, Var along) {
  std::vector<UniPoly> cols;
  const Var other = along == Var::X ? Var::Y : Var::X;
  const std::size_t n = other == Var::Y ? p.bound_y() : p.bound_x();
  for (std::size_t k = 0; k <= n; ++k) cols.push_back(exact_div(p.coefficient_in(other, k), g));
  // cols[k] is a polynomial in `along` multiplying other^k.
  BiPoly out = BiPoly::from_x_columns(cols);
  return other == Var::X ? out : out.swapped();
}

/// Divides out factors depending on one variable only, then scales to
/// coprime integer coefficients with the first nonzero entry positive.
inline BiPoly normalize_curve(BiPoly p) {
  for (const Var along : {Var::X, Var::Y}) {
    const Var other = along == Var::X ? Var::Y : Var::X;
    const std::size_t n = other == Var::Y ? p.bound_y() : p.bound_x();
    UniPoly g;
    for (std::size_t k = 0; k <= n; ++k) g = gcd(g, p.coefficient_in(other, k));
    if (g.degree() > 0) p = divide_columns(p, g, along);
  }
  Integer l(1);
  for (std::size_t i = 0; i <= p.bound_x(); ++i)
    for (std::size_t j = 0; j <= p.bound_y(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.at(i, j).get_den_mpz_t());
  Integer content(0);
  Rational first(0);
  for (std::size_t i = 0; i <= p.bound_x(); ++i) {
    for (std::size_t j = 0; j <= p.bound_y(); ++j) {
      const Rational& v = p.at(i, j);
      if (first == 0) first = v;
      const Integer z = v.get_num() * (l / v.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    }
  }
  if (content == 0) return p;
  if (first < 0) content = -content;
  return p * make_rational(l, content);
}

}  // namespace detail

/// Phi(u, v) = Res_a(numF - u denF, numK - v denK) with one-variable
/// factors removed and primitive integer scaling.
inline BiPoly image_curve(const BiellipticCurve& c) {
  const JPair j = j_functions(c);
  const int dF = j.jF.degree();
  const int dK = j.jK.degree();
  const ProjRational uF = j.jF(ProjRational::infinity());
  const ProjRational vK = j.jK(ProjRational::infinity());
  auto nodes = [](int count, const ProjRational& avoid) {
    std::vector<Rational> xs;
    for (long k = 0; static_cast<int>(xs.size()) < count; ++k) {
      for (const long s : {k, -k - 1}) {
        if (static_cast<int>(xs.size()) < count && !(avoid == ProjRational(Rational(s)))) xs.emplace_back(s);
      }
    }
    return xs;
  };
  // deg_u Phi <= deg_a(numK - v denK) and symmetrically.
  const std::vector<Rational> us = nodes(dK + 1, uF);
  const std::vector<Rational> vs = nodes(dF + 1, vK);
  std::vector<UniPoly> rows;
  for (const Rational& u : us) {
    const UniPoly pf = j.jF.num() - j.jF.den() * u;
    std::vector<Rational> vals;
    for (const Rational& v : vs) vals.push_back(resultant(pf, j.jK.num() - j.jK.den() * v));
    rows.push_back(interpolate(vs, vals));
  }
  std::vector<UniPoly> columns;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(dF); ++k) {
    std::vector<Rational> vals;
    for (const auto& row : rows) vals.push_back(row.coeff(k));
    columns.push_back(interpolate(us, vals));
  }
  // columns[k](u) multiplies v^k.
  const BiPoly phi = BiPoly::from_x_columns(columns).swapped();
  if (phi.is_zero()) throw DegenerateMap("image_curve: eliminant vanishes identically");
  return detail::normalize_curve(phi);
}

/// True iff the image curve is invariant under (u, v) -> (v, u).
inline bool image_symmetry(const BiellipticCurve& c) {
  const BiPoly phi = image_curve(c);
  const BiPoly sw = phi.swapped();
  return sw == phi || sw == phi * Rational(-1);
}

}  // namespace biprym
