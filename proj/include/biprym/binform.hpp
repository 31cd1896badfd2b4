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

#include <string>
#include <utility>
#include <vector>

#include "biprym/poly.hpp"

namespace biprym {

/// Homogeneous binary form of fixed degree d; coefficient i multiplies
/// x^i y^(d-i). Unlike Poly, the stored length is always d + 1, so a
/// form may have roots at infinity ([1:0]).
class BinForm {
 public:
  BinForm() = default;
  BinForm(int degree, std::vector<Rational> coefficients)
      : degree_(degree), c_(std::move(coefficients)) {
    if (degree < 0 || c_.size() != static_cast<std::size_t>(degree) + 1) {
      throw DegenerateInput("BinForm: coefficient count must be degree + 1");
    }
  }

  static BinForm zero(int degree) {
    return BinForm(degree, std::vector<Rational>(static_cast<std::size_t>(degree) + 1, Rational(0)));
  }

  /// Homogenizes p to degree d (requires deg p <= d).
  static BinForm homogenize(const UniPoly& p, int degree) {
    if (p.degree() > degree) throw DegenerateInput("BinForm::homogenize: degree too small");
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
    for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i)] = p.coeff(static_cast<std::size_t>(i));
    return BinForm(degree, std::move(c));
  }

  int degree() const noexcept { return degree_; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  /// Coefficient of x^i y^(d-i).
  const Rational& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }

  bool is_zero() const {
    for (const auto& v : c_) {
      if (v != 0) return false;
    }
    return true;
  }

  /// F(x, 1)
  UniPoly dehomogenize() const { return UniPoly(c_); }

  Rational operator()(const Rational& x, const Rational& y) const {
    Rational acc(0);
    Rational ypow(1);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * x + *it * ypow;
      ypow *= y;
    }
    return acc;
  }

  /// F(alpha x + beta y, gamma x + delta y)
  BinForm substitute(const Rational& alpha, const Rational& beta, const Rational& gamma,
                     const Rational& delta) const {
    const UniPoly first({beta, alpha});
    const UniPoly second({delta, gamma});
    UniPoly acc;
    for (int i = 0; i <= degree_; ++i) {
      const Rational& ci = c_[static_cast<std::size_t>(i)];
      if (ci == 0) continue;
      acc += pow(first, static_cast<unsigned>(i)) * pow(second, static_cast<unsigned>(degree_ - i)) * ci;
    }
    return homogenize(acc, degree_);
  }

  BinForm& operator+=(const BinForm& o) {
    require_same_degree(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  BinForm& operator-=(const BinForm& o) {
    require_same_degree(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  BinForm& operator*=(const Rational& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend BinForm operator+(BinForm a, const BinForm& b) { return a += b; }
  friend BinForm operator-(BinForm a, const BinForm& b) { return a -= b; }
  friend BinForm operator*(BinForm a, const Rational& s) { return a *= s; }
  friend BinForm operator*(const Rational& s, BinForm a) { return a *= s; }
  friend BinForm operator*(const BinForm& a, const BinForm& b) {
    std::vector<Rational> c(static_cast<std::size_t>(a.degree_ + b.degree_) + 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return BinForm(a.degree_ + b.degree_, std::move(c));
  }
  BinForm operator-() const { return *this * Rational(-1); }

  friend bool operator==(const BinForm& a, const BinForm& b) {
    return a.degree_ == b.degree_ && a.c_ == b.c_;
  }
  friend bool operator!=(const BinForm& a, const BinForm& b) { return !(a == b); }

 private:
  void require_same_degree(const BinForm& o) const {
    if (o.degree_ != degree_) throw DegenerateInput("BinForm: degree mismatch");
  }

  int degree_ = 0;
  std::vector<Rational> c_{Rational(0)};
};

inline std::string to_string(const BinForm& f) {
  std::string out;
  const int d = f.degree();
  for (int i = d; i >= 0; --i) {
    const Rational& c = f.coeff(i);
    if (c == 0) continue;
    const bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    if (i > 0) mono += (i > 1 ? "x^" + std::to_string(i) : std::string("x"));
    if (d - i > 0) {
      if (!mono.empty()) mono += "*";
      mono += (d - i > 1 ? "y^" + std::to_string(d - i) : std::string("y"));
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += mono;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace biprym
