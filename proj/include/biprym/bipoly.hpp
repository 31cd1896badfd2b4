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
#include <cstddef>
#include <utility>
#include <vector>

#include "biprym/poly.hpp"
#include "biprym/resultant.hpp"

namespace biprym {

enum class Var { X, Y };

/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
inline UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw DegenerateInput("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys);
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = n - 1; i >= k; --i) {
      const Rational den = xs[i] - xs[i - k];
      if (den == 0) throw DegenerateInput("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  }
  UniPoly acc;
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * UniPoly::linear_factor(xs[i]) + UniPoly::constant(dd[i]);
  }
  return acc;
}

/// Dense polynomial in x, y over Q; coeff(i, j) multiplies x^i y^j.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(std::size_t deg_x, std::size_t deg_y)
      : dx_(deg_x), dy_(deg_y), c_((deg_x + 1) * (deg_y + 1), Rational(0)) {}

  /// Sum over i of x^i * column[i](y).
  static BiPoly from_x_columns(const std::vector<UniPoly>& columns) {
    int dy = 0;
    for (const auto& col : columns) dy = std::max(dy, col.degree());
    BiPoly out(columns.empty() ? 0 : columns.size() - 1, static_cast<std::size_t>(dy));
    for (std::size_t i = 0; i < columns.size(); ++i) {
      for (int j = 0; j <= columns[i].degree(); ++j) {
        out.at(i, static_cast<std::size_t>(j)) = columns[i].coeff(static_cast<std::size_t>(j));
      }
    }
    return out;
  }

  std::size_t bound_x() const noexcept { return dx_; }
  std::size_t bound_y() const noexcept { return dy_; }

  Rational& at(std::size_t i, std::size_t j) { return c_.at(i * (dy_ + 1) + j); }
  const Rational& at(std::size_t i, std::size_t j) const { return c_.at(i * (dy_ + 1) + j); }

  bool is_zero() const {
    for (const auto& v : c_) {
      if (v != 0) return false;
    }
    return true;
  }

  /// Actual degree in v, or -1 for the zero polynomial.
  int degree(Var v) const {
    int d = -1;
    for (std::size_t i = 0; i <= dx_; ++i) {
      for (std::size_t j = 0; j <= dy_; ++j) {
        if (at(i, j) != 0) d = std::max(d, static_cast<int>(v == Var::X ? i : j));
      }
    }
    return d;
  }

  /// Coefficient of other^k as a polynomial in the variable `keep`.
  UniPoly coefficient_in(Var other, std::size_t k) const {
    std::vector<Rational> c;
    if (other == Var::Y) {
      if (k > dy_) return UniPoly();
      for (std::size_t i = 0; i <= dx_; ++i) c.push_back(at(i, k));
    } else {
      if (k > dx_) return UniPoly();
      for (std::size_t j = 0; j <= dy_; ++j) c.push_back(at(k, j));
    }
    return UniPoly(std::move(c));
  }

  /// Substitutes value for variable v, leaving a polynomial in the other.
  UniPoly specialize(Var v, const Rational& value) const {
    std::vector<Rational> c;
    if (v == Var::X) {
      for (std::size_t j = 0; j <= dy_; ++j) {
        Rational acc(0);
        for (std::size_t i = dx_ + 1; i-- > 0;) acc = acc * value + at(i, j);
        c.push_back(acc);
      }
    } else {
      for (std::size_t i = 0; i <= dx_; ++i) {
        Rational acc(0);
        for (std::size_t j = dy_ + 1; j-- > 0;) acc = acc * value + at(i, j);
        c.push_back(acc);
      }
    }
    return UniPoly(std::move(c));
  }

  Rational operator()(const Rational& x, const Rational& y) const {
    return specialize(Var::X, x)(y);
  }

  BiPoly swapped() const {
    BiPoly out(dy_, dx_);
    for (std::size_t i = 0; i <= dx_; ++i) {
      for (std::size_t j = 0; j <= dy_; ++j) out.at(j, i) = at(i, j);
    }
    return out;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    const std::size_t mx = std::max(a.dx_, b.dx_);
    const std::size_t my = std::max(a.dy_, b.dy_);
    for (std::size_t i = 0; i <= mx; ++i) {
      for (std::size_t j = 0; j <= my; ++j) {
        const Rational za(0);
        const Rational& va = (i <= a.dx_ && j <= a.dy_) ? a.at(i, j) : za;
        const Rational& vb = (i <= b.dx_ && j <= b.dy_) ? b.at(i, j) : za;
        if (va != vb) return false;
      }
    }
    return true;
  }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly operator*(const Rational& s) const {
    BiPoly out = *this;
    for (auto& v : out.c_) v *= s;
    return out;
  }

 private:
  std::size_t dx_ = 0;
  std::size_t dy_ = 0;
  std::vector<Rational> c_{Rational(0)};
};

/// Res_e(p, q) as a polynomial in the remaining variable, by evaluation at
/// integer points avoiding leading-coefficient zeros and interpolation.
inline UniPoly resultant_bivariate(const BiPoly& p, const BiPoly& q, Var eliminate) {
  const Var keep = eliminate == Var::X ? Var::Y : Var::X;
  const int ep = p.degree(eliminate);
  const int eq = q.degree(eliminate);
  if (p.is_zero() || q.is_zero()) throw DegenerateInput("resultant_bivariate: zero input");
  if (ep <= 0 && eq <= 0) throw DegenerateInput("resultant_bivariate: no eliminated variable");
  const int kp = std::max(p.degree(keep), 0);
  const int kq = std::max(q.degree(keep), 0);
  const std::size_t bound = static_cast<std::size_t>(kp * eq + kq * ep);

  const UniPoly lp = p.coefficient_in(eliminate, static_cast<std::size_t>(ep));
  const UniPoly lq = q.coefficient_in(eliminate, static_cast<std::size_t>(eq));
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (long k = 0; xs.size() <= bound; ++k) {
    for (const long s : {k, -k - 1}) {
      if (xs.size() > bound) break;
      const Rational x(s);
      if (lp(x) == 0 || lq(x) == 0) continue;
      xs.push_back(x);
      ys.push_back(resultant(p.specialize(keep, x), q.specialize(keep, x)));
    }
  }
  return interpolate(xs, ys);
}

}  // namespace biprym
