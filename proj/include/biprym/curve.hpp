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
#include <string>
#include <variant>
#include <vector>

#include "biprym/binform.hpp"
#include "biprym/resultant.hpp"
#include "biprym/roots.hpp"

namespace biprym {

/// General presentation (z^2 + S(x, y))^2 = T4(x, y).
class QuarticModel {
 public:
  QuarticModel(BinForm s, BinForm t4) : s_(std::move(s)), t4_(std::move(t4)) {
    if (s_.degree() != 2 || t4_.degree() != 4) {
      throw DegenerateInput("QuarticModel: S must be a quadratic and T a quartic form");
    }
    if (t4_ == s_ * s_) throw DegenerateModel("QuarticModel: T equals S^2");
  }

  const BinForm& S() const noexcept { return s_; }
  const BinForm& T() const noexcept { return t4_; }

  friend bool operator==(const QuarticModel& a, const QuarticModel& b) {
    return a.s_ == b.s_ && a.t4_ == b.t4_;
  }

 private:
  BinForm s_;
  BinForm t4_;
};

/// (S, T) -> (S, S^2 - T).
inline QuarticModel dual_curve(const QuarticModel& q) {
  return QuarticModel(q.S(), q.S() * q.S() - q.T());
}

/// Normalized model with S = s0 x^2 + s1 xy + s2 y^2 and
/// T = x^3 y + t1 x^2 y^2 + t2 x y^3 + t3 y^4. Non-hyperelliptic curves only.
class BiellipticCurve {
 public:
  BiellipticCurve(Rational s0, Rational s1, Rational s2, Rational t1, Rational t2, Rational t3)
      : s_{std::move(s0), std::move(s1), std::move(s2)}, t_{std::move(t1), std::move(t2), std::move(t3)} {
    const Rational& a0 = s_[0];
    const Rational& a1 = s_[1];
    const Rational& a2 = s_[2];
    const Rational& b1 = t_[0];
    const Rational& b2 = t_[1];
    const Rational& b3 = t_[2];
    tc_[0] = -a1 * a1 + 4 * a0 * a2 + b1;
    tc_[1] = 4 * a0 * a2 * b1 - 2 * a0 * a1 * b2 + 4 * a0 * a0 * b3 - 2 * a1 * a2 + b2;
    tc_[2] = -a0 * a0 * b2 * b2 + 4 * a0 * a0 * b1 * b3 + 2 * a0 * a2 * b2 - 4 * a0 * a1 * b3 - a2 * a2 + b3;
    tau_ = UniPoly({b3, b2, b1, Rational(1)});
    tau_check_ = UniPoly({tc_[2], tc_[1], tc_[0], Rational(1)});
    disc_tau_ = disc_cubic(b1, b2, b3);
    disc_tau_check_ = disc_cubic(tc_[0], tc_[1], tc_[2]);
    if (disc_tau_ == 0 || disc_tau_check_ == 0) {
      using F = SingularCurve::Factor;
      const F which = disc_tau_ == 0 ? (disc_tau_check_ == 0 ? F::kBoth : F::kTau) : F::kTauCheck;
      const std::string name = which == F::kBoth ? "disc(tau) and disc(tau_check)"
                               : which == F::kTau ? "disc(tau)"
                                                  : "disc(tau_check)";
      throw SingularCurve(which, "singular curve: " + name + (which == F::kBoth ? " vanish" : " vanishes"));
    }
  }

  const Rational& s(int i) const { return s_.at(static_cast<std::size_t>(i)); }
  /// t(1), t(2), t(3)
  const Rational& t(int i) const { return t_.at(static_cast<std::size_t>(i - 1)); }
  /// Dual coefficients; t_check(1), t_check(2), t_check(3)
  const Rational& t_check(int i) const { return tc_.at(static_cast<std::size_t>(i - 1)); }

  const UniPoly& tau() const noexcept { return tau_; }
  const UniPoly& tau_check() const noexcept { return tau_check_; }
  const Rational& disc_tau() const noexcept { return disc_tau_; }
  const Rational& disc_tau_check() const noexcept { return disc_tau_check_; }

  BinForm S() const { return BinForm(2, {s_[2], s_[1], s_[0]}); }
  BinForm T() const { return BinForm(4, {t_[2], t_[1], t_[0], Rational(1), Rational(0)}); }
  QuarticModel model() const { return QuarticModel(S(), T()); }

  friend bool operator==(const BiellipticCurve& a, const BiellipticCurve& b) {
    return a.s_ == b.s_ && a.t_ == b.t_;
  }

 private:
  std::array<Rational, 3> s_;
  std::array<Rational, 3> t_;
  std::array<Rational, 3> tc_;
  UniPoly tau_;
  UniPoly tau_check_;
  Rational disc_tau_;
  Rational disc_tau_check_;
};

inline UniPoly tau_check(const BiellipticCurve& c) { return c.tau_check(); }

/// j-invariant of the double cover of P^1 branched over the zeros of q.
/// Forms of degree below 4 acquire roots at [1:0].
inline ProjRational j_of_binary_quartic(const BinForm& q) {
  if (q.degree() > 4) throw DegenerateInput("j_of_binary_quartic: degree exceeds 4");
  auto c = [&](int i) { return i <= q.degree() ? q.coeff(i) : Rational(0); };
  const Rational A = c(4), B = c(3), C = c(2), D = c(1), E = c(0);
  const Rational I = 12 * A * E - 3 * B * D + C * C;
  const Rational J = 72 * A * C * E + 9 * B * C * D - 27 * A * D * D - 27 * E * B * B - 2 * C * C * C;
  const Rational I3 = I * I * I;
  const Rational delta = 4 * I3 - J * J;
  if (delta == 0) throw DegenerateBranch("binary quartic has a repeated root");
  return ProjRational(Rational(6912 * I3 / delta));
}

namespace detail {
inline Rational cubic_j(const Rational& t1, const Rational& t2, const Rational& disc) {
  const Rational q = t1 * t1 - 3 * t2;
  return 256 * q * q * q / disc;
}
}  // namespace detail

/// j(E) for E: y^2 = tau(x).
inline ProjRational j_base(const BiellipticCurve& c) {
  return ProjRational(detail::cubic_j(c.t(1), c.t(2), c.disc_tau()));
}

/// j of y^2 = tau_check(x).
inline ProjRational j_dual_base(const BiellipticCurve& c) {
  return ProjRational(detail::cubic_j(c.t_check(1), c.t_check(2), c.disc_tau_check()));
}

enum class FiberType { kI2Pair, kI4 };

inline std::string to_string(FiberType t) { return t == FiberType::kI2Pair ? "1I2-pair" : "1I4"; }

struct FiberEntry {
  /// A rational a-value, or an irreducible factor of tau_check whose roots
  /// are the locations.
  std::variant<Rational, UniPoly> location;
  FiberType type;
};

struct FiberReport {
  std::vector<FiberEntry> entries;
  int count_sigma = 0;
};

/// Singular fibers over the a-line: one location per root of tau_check,
/// a pair of 1I2 fibers unless the root is shared with tau (then one 1I4).
inline FiberReport singular_fibers(const BiellipticCurve& c) {
  FiberReport report;
  UniPoly rest = c.tau_check();
  auto fibers = [](FiberType t) { return t == FiberType::kI4 ? 1 : 2; };
  for (const Rational& r : rational_roots(rest)) {
    const FiberType type = c.tau()(r) == 0 ? FiberType::kI4 : FiberType::kI2Pair;
    report.entries.push_back({r, type});
    report.count_sigma += fibers(type);
    rest = exact_div(rest, UniPoly::linear_factor(r));
  }
  if (rest.degree() > 0) {
    // No rational roots and degree <= 3: irreducible over Q.
    const FiberType type = gcd(rest, c.tau()).degree() > 0 ? FiberType::kI4 : FiberType::kI2Pair;
    report.entries.push_back({monic(rest), type});
    report.count_sigma += rest.degree() * fibers(type);
  }
  return report;
}

}  // namespace biprym
