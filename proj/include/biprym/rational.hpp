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

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <regex>
#include <string>
#include <string_view>

#include "biprym/errors.hpp"

namespace biprym {

using Integer = mpz_class;
using Rational = mpq_class;

/// Formats as "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p", "-p", "p/q". Zero denominators and anything else are rejected.
inline Rational parse_rational(std::string_view text) {
  static const std::regex kPattern(R"(^\s*([+-]?[0-9]+)(?:/([0-9]+))?\s*$)");
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, kPattern)) {
    throw UndefinedInput("not a rational number: '" + s + "'");
  }
  std::string num = m[1].str();
  if (num.front() == '+') num.erase(0, 1);
  Integer n(num, 10);
  Integer d(1);
  if (m[2].matched) {
    d = Integer(m[2].str(), 10);
    if (d == 0) throw UndefinedInput("zero denominator in '" + s + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// n/d in lowest terms with positive denominator.
inline Rational make_rational(const Integer& n, const Integer& d) {
  if (d == 0) throw UndefinedInput("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// A point of P^1(Q) = Q u {inf}.
class ProjRational {
 public:
  ProjRational() : value_(Rational(0)) {}
  ProjRational(const Rational& v) : value_(v) {}  // NOLINT(implicit)
  ProjRational(long v) : value_(Rational(v)) {}   // NOLINT(implicit)

  static ProjRational infinity() {
    ProjRational p;
    p.value_.reset();
    return p;
  }

  /// [x : y] with (x, y) != (0, 0).
  static ProjRational from_homogeneous(const Rational& x, const Rational& y) {
    if (y == 0) {
      if (x == 0) throw UndefinedInput("[0:0] is not a point of P^1");
      return infinity();
    }
    return ProjRational(Rational(x / y));
  }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  const Rational& value() const {
    if (!value_) throw UndefinedInput("value() of the point at infinity");
    return *value_;
  }

  friend bool operator==(const ProjRational& a, const ProjRational& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() && b.is_infinite();
    }
    return *a.value_ == *b.value_;
  }

  /// Finite values in increasing order, infinity last.
  friend bool operator<(const ProjRational& a, const ProjRational& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.value_ < *b.value_;
  }

 private:
  std::optional<Rational> value_;
};

inline std::string to_string(const ProjRational& p) {
  return p.is_infinite() ? std::string("inf") : to_string(p.value());
}

inline ProjRational parse_proj_rational(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") {
    return ProjRational::infinity();
  }
  return ProjRational(parse_rational(text));
}

inline std::ostream& operator<<(std::ostream& os, const ProjRational& p) {
  return os << to_string(p);
}

}  // namespace biprym
