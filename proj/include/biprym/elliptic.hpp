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
#include <optional>
#include <vector>

#include "biprym/poly.hpp"

namespace biprym {

struct AffinePoint {
  Rational x;
  Rational y;
  friend bool operator==(const AffinePoint& a, const AffinePoint& b) { return a.x == b.x && a.y == b.y; }
};

/// nullopt is the identity p0 at infinity.
using ECPoint = std::optional<AffinePoint>;

/// y^2 = g(x), g monic cubic, with rational marked points.
class MarkedEllipticCurve {
 public:
  MarkedEllipticCurve(UniPoly g, std::vector<AffinePoint> marked) : g_(std::move(g)), marked_(std::move(marked)) {
    if (g_.degree() != 3 || g_.leading() != 1) throw DegenerateInput("MarkedEllipticCurve: g must be a monic cubic");
    if (gcd(g_, g_.derivative()).degree() > 0) throw DegenerateInput("MarkedEllipticCurve: g has a repeated root");
    for (const auto& p : marked_) {
      if (!contains(p)) throw InvalidPoint("MarkedEllipticCurve: marked point off the curve");
    }
  }

  const UniPoly& g() const noexcept { return g_; }
  const std::vector<AffinePoint>& marked() const noexcept { return marked_; }

  bool contains(const AffinePoint& p) const { return p.y * p.y == g_(p.x); }
  bool contains(const ECPoint& p) const { return !p || contains(*p); }

 private:
  UniPoly g_;
  std::vector<AffinePoint> marked_;
};

inline ECPoint negate(const ECPoint& p) {
  if (!p) return p;
  return AffinePoint{p->x, -p->y};
}

/// Chord-tangent addition with identity at infinity.
inline ECPoint cubic_group_add(const MarkedEllipticCurve& e, const ECPoint& p, const ECPoint& q) {
  if (!e.contains(p) || !e.contains(q)) throw InvalidPoint("cubic_group_add: point off the curve");
  if (!p) return q;
  if (!q) return p;
  Rational slope;
  if (p->x == q->x) {
    if (p->y != q->y || p->y == 0) return std::nullopt;
    slope = e.g().derivative()(p->x) / (2 * p->y);
  } else {
    slope = (q->y - p->y) / (q->x - p->x);
  }
  const Rational a2 = e.g().coeff(2);
  const Rational x3 = slope * slope - a2 - p->x - q->x;
  const Rational y3 = -(p->y + slope * (x3 - p->x));
  return AffinePoint{x3, y3};
}

namespace detail {

inline Rational checked_div(const Rational& n, const Rational& d) {
  if (d == 0) throw IndeterminatePoint("lambda_map: pole");
  return n / d;
}

inline std::array<AffinePoint, 4> four_marked(const MarkedEllipticCurve& e) {
  if (e.marked().size() != 4) throw DegenerateInput("lambda_map: exactly four marked points required");
  ECPoint sum;
  for (const auto& p : e.marked()) sum = cubic_group_add(e, sum, p);
  if (sum) throw DegenerateInput("lambda_map: marked points must sum to the identity");
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (e.marked()[i] == e.marked()[j]) throw IndeterminatePoint("lambda_map: repeated marked point");
    }
  }
  return {e.marked()[0], e.marked()[1], e.marked()[2], e.marked()[3]};
}

}  // namespace detail

/// Cross ratio of the values f_p(p_i) = (b_i + b)/(a_i - a).
inline Rational lambda_cross_ratio(const MarkedEllipticCurve& e, const AffinePoint& p) {
  if (!e.contains(p)) throw InvalidPoint("lambda_map: point off the curve");
  const auto m = detail::four_marked(e);
  std::array<Rational, 4> f;
  for (std::size_t i = 0; i < 4; ++i) f[i] = detail::checked_div(m[i].y + p.y, m[i].x - p.x);
  return detail::checked_div((f[3] - f[1]) * (f[2] - f[0]), (f[3] - f[0]) * (f[2] - f[1]));
}

/// ((a34 - a14)/(a34 - a24)) * ((a - a24)/(a - a14)), a_ij = x(p_i + p_j).
inline Rational lambda_closed_form(const MarkedEllipticCurve& e, const AffinePoint& p) {
  if (!e.contains(p)) throw InvalidPoint("lambda_map: point off the curve");
  const auto m = detail::four_marked(e);
  auto a_of = [&](std::size_t i, std::size_t j) {
    const ECPoint s = cubic_group_add(e, m[i], m[j]);
    if (!s) throw IndeterminatePoint("lambda_map: p_i + p_j is the identity");
    return s->x;
  };
  const Rational a14 = a_of(0, 3);
  const Rational a24 = a_of(1, 3);
  const Rational a34 = a_of(2, 3);
  return detail::checked_div(a34 - a14, a34 - a24) * detail::checked_div(p.x - a24, p.x - a14);
}

/// lambda at p; both evaluation paths must be defined and agree.
inline ProjRational lambda_map(const MarkedEllipticCurve& e, const AffinePoint& p) {
  const Rational closed = lambda_closed_form(e, p);
  if (lambda_cross_ratio(e, p) != closed) {
    throw ConstructionInconsistency("lambda_map: evaluation paths disagree");
  }
  return ProjRational(closed);
}

}  // namespace biprym
