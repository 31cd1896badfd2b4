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
#include <string>
#include <utility>
#include <vector>

#include "biprym/poly.hpp"

namespace biprym {

/// A rational function num/den in one variable, read as a self-map of P^1.
///
/// Canonical form: gcd(num, den) = 1, all coefficients integers whose
/// collective gcd is 1, and den has positive leading coefficient. Two
/// canonical RatFn values are equal iff their coefficient lists are.
class RatFn {
 public:
  RatFn() : num_(), den_(UniPoly::constant(Rational(1))) {}
  RatFn(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }
  explicit RatFn(UniPoly poly) : RatFn(std::move(poly), UniPoly::constant(Rational(1))) {}

  const UniPoly& num() const noexcept { return num_; }
  const UniPoly& den() const noexcept { return den_; }

  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() <= 0; }

  /// max(deg num, deg den); constants are rejected.
  int degree() const {
    if (is_constant()) throw DegenerateInput("degree of a constant rational function");
    return std::max(num_.degree(), den_.degree());
  }

  ProjRational operator()(const ProjRational& a) const {
    if (a.is_infinite()) {
      const int dn = num_.degree();
      const int dd = den_.degree();
      if (dn > dd) return ProjRational::infinity();
      if (dn < dd) return ProjRational(Rational(0));
      return ProjRational(Rational(num_.leading() / den_.leading()));
    }
    const Rational x = a.value();
    const Rational d = den_(x);
    if (d == 0) return ProjRational::infinity();
    return ProjRational(Rational(num_(x) / d));
  }

  /// this(phi(s)) for the Moebius map phi(s) = (alpha s + beta)/(gamma s + delta).
  RatFn compose_moebius(const Rational& alpha, const Rational& beta, const Rational& gamma,
                        const Rational& delta) const {
    const int d = std::max(num_.degree(), den_.degree());
    const UniPoly top({beta, alpha});
    const UniPoly bottom({delta, gamma});
    auto lift = [&](const UniPoly& p) {
      UniPoly acc;
      for (int i = 0; i <= p.degree(); ++i) {
        const Rational& c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        acc += pow(top, static_cast<unsigned>(i)) * pow(bottom, static_cast<unsigned>(d - i)) * c;
      }
      return acc;
    };
    return RatFn(lift(num_), lift(den_));
  }

  friend bool operator==(const RatFn& a, const RatFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

 private:
  void canonicalize() {
    if (den_.is_zero()) throw UndefinedInput("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = UniPoly::constant(Rational(1));
      return;
    }
    const UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    Integer l(1);
    for (const auto* p : {&num_, &den_}) {
      for (const auto& c : p->coefficients()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
      }
    }
    Integer content(0);
    for (const auto* p : {&num_, &den_}) {
      for (const auto& c : p->coefficients()) {
        Integer v = c.get_num() * (l / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
      }
    }
    if (den_.leading() < 0) content = -content;
    const Rational scale = make_rational(l, content);
    num_ *= scale;
    den_ *= scale;
  }

  UniPoly num_;
  UniPoly den_;
};

inline std::string to_string(const RatFn& r, const std::string& var = "a") {
  return "(" + to_string(r.num(), var) + ") / (" + to_string(r.den(), var) + ")";
}

}  // namespace biprym
