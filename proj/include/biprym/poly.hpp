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
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "biprym/errors.hpp"
#include "biprym/rational.hpp"

namespace biprym {

/// Dense univariate polynomial, coefficients stored lowest degree first.
///
/// The stored coefficient list never ends in a zero, so the zero polynomial
/// is the empty list and degree() is -1 for it. R is expected to be Integer
/// or Rational; division-based operations (divmod, gcd) need a field.
template <class R>
class Poly {
 public:
  using coefficient_type = R;

  Poly() = default;
  explicit Poly(std::vector<R> coefficients) : c_(std::move(coefficients)) {
    trim();
  }
  Poly(std::initializer_list<R> coefficients) : c_(coefficients) { trim(); }

  static Poly constant(const R& value) { return Poly(std::vector<R>{value}); }
  static Poly monomial(const R& value, std::size_t power) {
    std::vector<R> c(power + 1, R(0));
    c[power] = value;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(R(1), 1); }
  /// (x - root)
  static Poly linear_factor(const R& root) { return Poly({R(-root), R(1)}); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }

  const std::vector<R>& coefficients() const noexcept { return c_; }
  /// Coefficient of x^i, zero past the degree.
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  R leading() const { return c_.empty() ? R(0) : c_.back(); }
  R trailing() const { return c_.empty() ? R(0) : c_.front(); }

  template <class S>
  S evaluate(const S& x) const {
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += S(*it);
    }
    return acc;
  }
  R operator()(const R& x) const { return evaluate<R>(x); }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      d[i - 1] = c_[i] * static_cast<long>(i);
    }
    return Poly(std::move(d));
  }

  Poly operator-() const {
    std::vector<R> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Poly(std::move(c));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const R& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const R& s) { return a *= s; }
  friend Poly operator*(const R& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<R> c_;
};

using UniPoly = Poly<Rational>;
using IntPoly = Poly<Integer>;

template <class R>
Poly<R> pow(Poly<R> base, unsigned exponent) {
  Poly<R> result = Poly<R>::constant(R(1));
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

/// p(q(x))
template <class R>
Poly<R> compose(const Poly<R>& p, const Poly<R>& q) {
  Poly<R> acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * q + Poly<R>::constant(*it);
  }
  return acc;
}

/// Euclidean division over a field: a = q*b + r, deg r < deg b.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw UndefinedInput("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UniPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1), Rational(0));
  const Rational lead = b.leading();
  for (int k = da - db; k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + db)] / lead;
    quo[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= f * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

inline UniPoly operator%(const UniPoly& a, const UniPoly& b) {
  return divmod(a, b).second;
}

/// Quotient of a division known to be exact.
inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw UndefinedInput("exact_div: nonzero remainder");
  return q;
}

inline UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

/// Least common multiple of the coefficient denominators.
inline Integer denominator_lcm(const UniPoly& p) {
  Integer l(1);
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

/// Integer polynomial with coprime coefficients and positive leading
/// coefficient, proportional to p. Zero maps to zero.
inline IntPoly primitive_integer(const UniPoly& p) {
  if (p.is_zero()) return {};
  const Integer l = denominator_lcm(p);
  std::vector<Integer> c;
  c.reserve(p.coefficients().size());
  Integer g(0);
  for (const auto& q : p.coefficients()) {
    Integer v = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    c.push_back(std::move(v));
  }
  if (c.back() < 0) g = -g;
  for (auto& v : c) v /= g;
  return IntPoly(std::move(c));
}

inline UniPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return UniPoly(std::move(c));
}

namespace detail {

/// lc(b)^(deg a - deg b + 1) * a mod b, on coefficient vectors.
inline std::vector<Integer> pseudo_remainder(std::vector<Integer> a, const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (a.size() > db && !a.empty()) {
    if (a.back() == 0) {
      a.pop_back();
      continue;
    }
    const Integer c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& v : a) v *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= c * b[j];
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline void make_primitive(std::vector<Integer>& a) {
  Integer g(0);
  for (const auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0) return;
  if (a.back() < 0) g = -g;
  for (auto& v : a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace detail

/// Monic greatest common divisor; gcd(0, 0) = 0. Runs a primitive
/// remainder sequence over the integers.
inline UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  std::vector<Integer> x = primitive_integer(a).coefficients();
  std::vector<Integer> y = primitive_integer(b).coefficients();
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::vector<Integer> r = detail::pseudo_remainder(std::move(x), y);
    detail::make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(to_rational(IntPoly(std::move(x))));
}

/// Square-free part, monic.
inline UniPoly square_free_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : UniPoly::constant(Rational(1));
  return monic(exact_div(p, gcd(p, p.derivative())));
}

/// Yun's square-free decomposition: p = lc * prod f_i^i with f_i monic,
/// square-free and pairwise coprime. Only nonconstant factors are returned.
inline std::vector<std::pair<UniPoly, int>> square_free_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() <= 0) return out;
  UniPoly f = monic(p);
  UniPoly a = gcd(f, f.derivative());
  UniPoly b = exact_div(f, a);
  UniPoly c = exact_div(f.derivative(), a);
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

/// Multiplicity of the nonconstant factor h in p (p != 0).
inline int multiplicity(UniPoly p, const UniPoly& h) {
  if (p.is_zero()) throw UndefinedInput("multiplicity in the zero polynomial");
  if (h.degree() <= 0) throw DegenerateInput("multiplicity of a constant factor");
  int m = 0;
  for (;;) {
    auto [q, r] = divmod(p, h);
    if (!r.is_zero()) return m;
    p = std::move(q);
    ++m;
  }
}

/// Human-readable form in the variable `var`, e.g. "x^3 - 6*x^2 + 5*x - 1".
template <class R>
std::string to_string(const Poly<R>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    R c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    const bool neg = c < 0;
    R mag = neg ? R(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = (mag == 1);
    if (i == 0 || !unit) out += to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Poly<R>& p) {
  return os << to_string(p);
}

}  // namespace biprym
