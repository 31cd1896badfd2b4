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
#include <vector>

#include "biprym/poly.hpp"

namespace biprym {

namespace detail {

/// Dense polynomial over F_p with p < 2^31, lowest degree first.
using ModPoly = std::vector<std::uint64_t>;

inline void mod_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1u) r = r * b % p;
    b = b * b % p;
    e >>= 1u;
  }
  return r;
}

inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

inline ModPoly mod_reduce(const IntPoly& f, std::uint64_t p) {
  ModPoly out(f.coefficients().size());
  Integer pz(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < out.size(); ++i) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), f.coefficients()[i].get_mpz_t(), pz.get_mpz_t());
    out[i] = r.get_ui();
  }
  mod_trim(out);
  return out;
}

inline ModPoly mod_rem(ModPoly a, const ModPoly& b, std::uint64_t p) {
  const std::uint64_t inv = mod_inv(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t f = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = (a[shift + j] + p - f * b[j] % p) % p;
    }
    mod_trim(a);
  }
  return a;
}

inline std::size_t mod_gcd_degree(ModPoly a, ModPoly b, std::uint64_t p) {
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

inline ModPoly mod_derivative(const ModPoly& a, std::uint64_t p) {
  ModPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (i % p) % p);
  mod_trim(d);
  return d;
}

inline std::uint64_t mod_eval(const ModPoly& a, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

inline Integer eval_mod(const IntPoly& f, const Integer& x, const Integer& m) {
  Integer acc(0);
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + *it;
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

/// Sum c_i u^i v^(n-i); zero iff u/v is a root.
inline Integer eval_homogeneous(const IntPoly& f, const Integer& u, const Integer& v) {
  Integer acc(0);
  Integer vpow(1);
  const auto& c = f.coefficients();
  // Horner in u with powers of v attached.
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * u + *it * vpow;
    vpow *= v;
  }
  return acc;
}

/// Finds u/v with u = v * r (mod m) and |u|, |v| <= sqrt(m/2).
inline bool rational_reconstruction(const Integer& r, const Integer& m, Integer& u, Integer& v) {
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m, r1 = r, s0 = 0, s1 = 1;
  mpz_fdiv_r(r1.get_mpz_t(), r1.get_mpz_t(), m.get_mpz_t());
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0 || abs(s1) > bound) return false;
  u = r1;
  v = s1;
  if (v < 0) {
    u = -u;
    v = -v;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
  return g == 1;
}

}  // namespace detail

/// All distinct rational roots of p, sorted increasingly.
///
/// The square-free primitive part f is reduced modulo a prime p0 that keeps
/// it square-free with the same degree; every rational root u/v of f then
/// reduces to a simple root mod p0 (v divides lc(f), so p0 does not divide
/// v). Each simple root is lifted by Newton iteration to a modulus larger
/// than 2 * max(|f(0)|, |lc f|)^2, rationally reconstructed, and kept only
/// if it is an exact root.
inline std::vector<Rational> rational_roots(const UniPoly& poly) {
  if (poly.is_zero()) throw UndefinedInput("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  if (poly.degree() <= 0) return roots;

  UniPoly p = poly;
  if (p.coeff(0) == 0) {
    roots.emplace_back(0);
    std::size_t shift = 0;
    while (p.coeff(shift) == 0) ++shift;
    p = UniPoly(std::vector<Rational>(p.coefficients().begin() + static_cast<std::ptrdiff_t>(shift),
                                      p.coefficients().end()));
  }
  if (p.degree() == 1) {
    roots.emplace_back(-p.coeff(0) / p.coeff(1));
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  if (p.degree() < 1) return roots;

  // Prime search; a square-free reduction proves p square-free over Q,
  // otherwise pass to the square-free part once and search again.
  IntPoly f = primitive_integer(p);
  Integer prime(1009);
  detail::ModPoly fp;
  std::uint64_t pp = 0;
  bool reduced = false;
  for (;;) {
    pp = prime.get_ui();
    if (f.leading() % prime != 0) {
      fp = detail::mod_reduce(f, pp);
      if (detail::mod_gcd_degree(fp, detail::mod_derivative(fp, pp), pp) == 0) break;
      if (!reduced) {
        reduced = true;
        const UniPoly sf = square_free_part(p);
        if (sf.degree() == 1) {
          roots.emplace_back(-sf.coeff(0) / sf.coeff(1));
          std::sort(roots.begin(), roots.end());
          return roots;
        }
        f = primitive_integer(sf);
        continue;
      }
    }
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
  }

  const IntPoly df = f.derivative();
  const Integer lead = abs(f.leading());
  const Integer tail = abs(f.trailing());
  const Integer bound = std::max(lead, tail);
  const Integer target = 2 * bound * bound + 1;

  std::vector<std::uint64_t> small_roots;
  for (std::uint64_t x = 0; x < pp; ++x) {
    if (detail::mod_eval(fp, x, pp) == 0) small_roots.push_back(x);
  }

  for (std::uint64_t r0 : small_roots) {
    Integer r(static_cast<unsigned long>(r0));
    Integer mod = prime;
    while (mod < target) {
      Integer next = mod * mod;
      Integer fv = detail::eval_mod(f, r, next);
      Integer dv = detail::eval_mod(df, r, next);
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), next.get_mpz_t()) == 0) break;
      r = r - fv * inv;
      mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), next.get_mpz_t());
      mod = next;
    }
    Integer u, v;
    if (!detail::rational_reconstruction(r, mod, u, v)) continue;
    if (detail::eval_homogeneous(f, u, v) != 0) continue;
    roots.push_back(make_rational(u, v));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace biprym
