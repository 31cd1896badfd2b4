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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biprym/errors.hpp"
#include "biprym/matrix.hpp"
#include "biprym/rational.hpp"

namespace biprym {

/// Coordinate vector over Q.
struct QVec {
  std::vector<Rational> c;

  QVec() = default;
  explicit QVec(std::size_t n) : c(n, Rational(0)) {}
  QVec(std::vector<Rational> v) : c(std::move(v)) {}  // NOLINT(implicit)
  QVec(std::initializer_list<long> v) {
    for (long x : v) c.emplace_back(x);
  }

  static QVec unit(std::size_t n, std::size_t i) {
    QVec e(n);
    e.c[i] = 1;
    return e;
  }

  std::size_t size() const noexcept { return c.size(); }
  Rational& operator[](std::size_t i) { return c[i]; }
  const Rational& operator[](std::size_t i) const { return c[i]; }

  bool is_integral() const {
    return std::all_of(c.begin(), c.end(), [](const Rational& x) { return is_integer(x); });
  }

  friend QVec operator+(QVec a, const QVec& b) {
    if (a.size() != b.size()) throw DegenerateInput("QVec: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a.c[i] += b.c[i];
    return a;
  }
  friend QVec operator-(QVec a, const QVec& b) {
    if (a.size() != b.size()) throw DegenerateInput("QVec: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend QVec operator-(QVec a) {
    for (auto& x : a.c) x = -x;
    return a;
  }
  friend QVec operator*(const Rational& s, QVec a) {
    for (auto& x : a.c) x *= s;
    return a;
  }
  friend QVec operator*(long s, QVec a) { return Rational(s) * std::move(a); }
  friend bool operator==(const QVec& a, const QVec& b) { return a.c == b.c; }
  friend bool operator!=(const QVec& a, const QVec& b) { return !(a == b); }
};

inline std::string to_string(const QVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

inline QMatrix rows_matrix(const std::vector<QVec>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DegenerateInput("rows_matrix: dimension mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

inline QVec row_vector(const QMatrix& m, std::size_t i) { return QVec(m.row(i)); }

/// x^T F y.
inline Rational bilinear(const QMatrix& form, const QVec& x, const QVec& y) {
  if (form.rows() != x.size() || form.cols() != y.size()) {
    throw DegenerateInput("bilinear: dimension mismatch");
  }
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] != 0) s += x[i] * form(i, j) * y[j];
    }
  }
  return s;
}

/// D = U * M * V with D diagonal, d_1 | d_2 | ..., d_i >= 0, U and V unimodular.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::vector<Integer> invariant_factors;  // min(rows, cols) diagonal entries
};

namespace detail {

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = -m(i, k);
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  SmithForm s{m, IntMatrix::identity(r), IntMatrix::identity(c), {}};
  IntMatrix& D = s.D;
  const std::size_t n = std::min(r, c);
  for (std::size_t t = 0; t < n; ++t) {
    bool found = false;
    for (;;) {
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i) {
        for (std::size_t j = t; j < c; ++j) {
          if (D(i, j) == 0) continue;
          if (pi == r || abs(D(i, j)) < abs(D(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == r) break;
      found = true;
      D.swap_rows(t, pi);
      s.U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      s.V.swap_cols(t, pj);
      const Integer p = D(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (D(i, t) == 0) continue;
        const Integer q = detail::floor_div(D(i, t), p);
        D.add_row(i, t, -q);
        s.U.add_row(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (D(t, j) == 0) continue;
        const Integer q = detail::floor_div(D(t, j), p);
        D.add_col(j, t, -q);
        s.V.add_col(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i) {
        for (std::size_t j = t + 1; j < c; ++j) {
          if (D(i, j) % p != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == r) break;
      D.add_row(t, bad, Integer(1));
      s.U.add_row(t, bad, Integer(1));
    }
    if (!found) break;
    if (D(t, t) < 0) {
      detail::negate_row(D, t);
      detail::negate_row(s.U, t);
    }
  }
  for (std::size_t i = 0; i < n; ++i) s.invariant_factors.push_back(D(i, i));
  return s;
}

/// T * M = H with H in row Hermite form: the first `rank` rows are nonzero with
/// positive pivots and reduced entries above each pivot; T is unimodular.
struct RowEchelon {
  IntMatrix H;
  IntMatrix T;
  std::size_t rank = 0;
};

inline RowEchelon hermite_form(const IntMatrix& m) {
  const std::size_t n = m.rows();
  RowEchelon e{m, IntMatrix::identity(n), 0};
  IntMatrix& H = e.H;
  for (std::size_t col = 0; col < m.cols() && e.rank < n; ++col) {
    const std::size_t r = e.rank;
    bool pivot = false;
    for (;;) {
      std::size_t p = n;
      for (std::size_t i = r; i < n; ++i) {
        if (H(i, col) != 0 && (p == n || abs(H(i, col)) < abs(H(p, col)))) p = i;
      }
      if (p == n) break;
      pivot = true;
      H.swap_rows(r, p);
      e.T.swap_rows(r, p);
      bool clean = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (H(i, col) == 0) continue;
        const Integer q = detail::floor_div(H(i, col), H(r, col));
        H.add_row(i, r, -q);
        e.T.add_row(i, r, -q);
        if (H(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!pivot) continue;
    if (H(r, col) < 0) {
      detail::negate_row(H, r);
      detail::negate_row(e.T, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = detail::floor_div(H(i, col), H(r, col));
      if (q == 0) continue;
      H.add_row(i, r, -q);
      e.T.add_row(i, r, -q);
    }
    ++e.rank;
  }
  return e;
}

/// Basis (as rows) of {x in Z^rows : x * M = 0}.
inline IntMatrix left_kernel(const IntMatrix& m) {
  const RowEchelon e = hermite_form(m);
  IntMatrix k(m.rows() - e.rank, m.rows());
  for (std::size_t i = e.rank; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.rows(); ++j) k(i - e.rank, j) = e.T(i, j);
  }
  return k;
}

/// Integer x with x * B = v, if one exists.
inline std::optional<std::vector<Integer>> integer_solution(const IntMatrix& B,
                                                            const std::vector<Integer>& v) {
  if (v.size() != B.cols()) throw DegenerateInput("integer_solution: dimension mismatch");
  const SmithForm s = smith_normal_form(B);
  std::vector<Integer> w(B.cols(), Integer(0));
  for (std::size_t j = 0; j < B.cols(); ++j) {
    for (std::size_t k = 0; k < B.cols(); ++k) w[j] += v[k] * s.V(k, j);
  }
  std::vector<Integer> y(B.rows(), Integer(0));
  for (std::size_t j = 0; j < B.cols(); ++j) {
    const Integer d = j < s.invariant_factors.size() ? s.invariant_factors[j] : Integer(0);
    if (d == 0) {
      if (w[j] != 0) return std::nullopt;
      continue;
    }
    if (w[j] % d != 0) return std::nullopt;
    y[j] = w[j] / d;
  }
  std::vector<Integer> x(B.rows(), Integer(0));
  for (std::size_t i = 0; i < B.rows(); ++i) {
    for (std::size_t k = 0; k < B.rows(); ++k) x[i] += y[k] * s.U(k, i);
  }
  return x;
}

inline Integer common_denominator(const QMatrix& m) {
  Integer d(1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) d = lcm(d, Integer(m(i, j).get_den()));
  }
  return d;
}

/// Canonical basis (scaled Hermite form) of the Z-span of the rows.
inline QMatrix lattice_basis(const QMatrix& gens) {
  const Integer d = common_denominator(gens);
  const RowEchelon e = hermite_form(to_integer(Rational(d) * gens));
  QMatrix b(e.rank, gens.cols());
  for (std::size_t i = 0; i < e.rank; ++i) {
    for (std::size_t j = 0; j < gens.cols(); ++j) b(i, j) = make_rational(e.H(i, j), d);
  }
  return b;
}

/// Integer coefficients expressing v in the Z-span of the rows of gens.
inline std::optional<std::vector<Integer>> lattice_coordinates(const QMatrix& gens, const QVec& v) {
  QMatrix both(gens.rows() + 1, gens.cols());
  for (std::size_t i = 0; i < gens.rows(); ++i) {
    for (std::size_t j = 0; j < gens.cols(); ++j) both(i, j) = gens(i, j);
  }
  for (std::size_t j = 0; j < gens.cols(); ++j) both(gens.rows(), j) = v[j];
  const Integer d = common_denominator(both);
  const IntMatrix z = to_integer(Rational(d) * both);
  std::vector<Integer> target(gens.cols());
  for (std::size_t j = 0; j < gens.cols(); ++j) target[j] = z(gens.rows(), j);
  return integer_solution(z.submatrix_rows(0, gens.rows()), target);
}

inline bool in_lattice(const QMatrix& gens, const QVec& v) {
  return lattice_coordinates(gens, v).has_value();
}

/// Every row of sub lies in the Z-span of super.
inline bool lattice_contains(const QMatrix& super, const QMatrix& sub) {
  for (std::size_t i = 0; i < sub.rows(); ++i) {
    if (!in_lattice(super, row_vector(sub, i))) return false;
  }
  return true;
}

inline bool same_lattice(const QMatrix& a, const QMatrix& b) {
  return lattice_contains(a, b) && lattice_contains(b, a);
}

/// [super : sub] for lattices of equal rank with sub inside super.
inline Integer lattice_index(const QMatrix& super, const QMatrix& sub) {
  const QMatrix sb = lattice_basis(super);
  const QMatrix lb = lattice_basis(sub);
  if (sb.rows() != lb.rows()) throw DegenerateInput("lattice_index: ranks differ");
  IntMatrix coords(lb.rows(), sb.rows());
  for (std::size_t i = 0; i < lb.rows(); ++i) {
    const auto x = lattice_coordinates(sb, row_vector(lb, i));
    if (!x) throw DegenerateInput("lattice_index: not a sublattice");
    for (std::size_t j = 0; j < sb.rows(); ++j) coords(i, j) = (*x)[j];
  }
  return abs(determinant(coords));
}

/// Basis of {sum c_i b_i : sum_i c_i values(i, j) = 0 mod modulus for every j},
/// where b_i are the rows of basis. Modulus 0 means exact vanishing.
inline QMatrix congruence_sublattice(const QMatrix& basis, const IntMatrix& values,
                                     const Integer& modulus) {
  if (values.rows() != basis.rows()) throw DegenerateInput("congruence_sublattice: shape");
  const std::size_t k = values.rows();
  const std::size_t m = values.cols();
  IntMatrix stacked(k + m, m);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j) stacked(i, j) = values(i, j);
  }
  for (std::size_t j = 0; j < m; ++j) stacked(k + j, j) = modulus;
  const IntMatrix ker = left_kernel(stacked);
  QMatrix combos(ker.rows(), k);
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    for (std::size_t j = 0; j < k; ++j) combos(i, j) = Rational(ker(i, j));
  }
  return lattice_basis(combos * basis);
}

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," +
         std::to_string(s.zero) + ")";
}

/// Inertia of a symmetric rational matrix by congruence reduction.
inline Signature signature(QMatrix g) {
  if (g.rows() != g.cols()) throw DegenerateInput("signature: non-square matrix");
  if (g != g.transpose()) throw DegenerateInput("signature: matrix is not symmetric");
  const std::size_t n = g.rows();
  Signature s;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && g(p, p) == 0) ++p;
    if (p == n) {
      for (std::size_t i = k; i < n && p == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (g(i, j) == 0) continue;
          g.add_row(i, j, Rational(1));
          g.add_col(i, j, Rational(1));
          p = i;
          break;
        }
      }
      if (p == n) {
        s.zero += n - k;
        break;
      }
    }
    g.swap_rows(k, p);
    g.swap_cols(k, p);
    const Rational piv = g(k, k);
    (piv > 0 ? s.positive : s.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (g(i, k) == 0) continue;
      const Rational f = -g(i, k) / piv;
      g.add_row(i, k, f);
      g.add_col(i, k, f);
    }
  }
  return s;
}

/// A lattice given by generator rows in a fixed ambient space, paired by
/// scale * x^T form y.
class GramLattice {
 public:
  GramLattice() = default;
  GramLattice(QMatrix generators, QMatrix form, Rational scale = Rational(1))
      : gens_(std::move(generators)), form_(std::move(form)), scale_(std::move(scale)) {
    if (form_.rows() != form_.cols() || form_.cols() != gens_.cols()) {
      throw DegenerateInput("GramLattice: dimension mismatch");
    }
    if (form_ != form_.transpose()) throw DegenerateInput("GramLattice: form is not symmetric");
    if (biprym::rank(gens_) != gens_.rows()) gens_ = lattice_basis(gens_);
  }

  /// The standard lattice Z^n carrying the given Gram matrix.
  static GramLattice from_gram(const IntMatrix& gram) {
    return GramLattice(QMatrix::identity(gram.rows()), to_rational(gram));
  }

  std::size_t rank() const noexcept { return gens_.rows(); }
  std::size_t dimension() const noexcept { return gens_.cols(); }
  const QMatrix& generators() const noexcept { return gens_; }
  const QMatrix& form() const noexcept { return form_; }
  const Rational& scale() const noexcept { return scale_; }
  QVec generator(std::size_t i) const { return row_vector(gens_, i); }

  Rational pair(const QVec& x, const QVec& y) const { return scale_ * bilinear(form_, x, y); }

  QMatrix gram() const { return scale_ * (gens_ * form_ * gens_.transpose()); }

  bool contains(const QVec& v) const { return in_lattice(gens_, v); }
  bool contains(const GramLattice& other) const { return lattice_contains(gens_, other.gens_); }

  /// Same subgroup of the ambient space; pairings are not compared.
  bool same_span(const GramLattice& other) const {
    return contains(other) && other.contains(*this);
  }

 private:
  QMatrix gens_;
  QMatrix form_;
  Rational scale_;
};

/// Discriminant-group data of an integral nondegenerate lattice.
struct DiscGroupData {
  std::size_t rank = 0;
  Signature signature;
  Integer determinant;
  bool even = false;
  std::vector<Integer> invariant_factors;     // all diagonal entries of the Smith form
  std::vector<Rational> glue_norms;           // per nontrivial generator, reduced mod the norm modulus
  std::map<Rational, std::size_t> norm_counts;  // over the whole group; empty if too large
  bool norm_counts_complete = false;
};

namespace detail {

inline Rational reduce_mod(const Rational& x, const Integer& m) {
  const Rational q = x / Rational(m);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return x - Rational(f * m);
}

}  // namespace detail

inline constexpr std::size_t kMaxEnumeratedGroup = 1u << 16;

inline DiscGroupData discriminant_data(const GramLattice& lat) {
  const QMatrix g = lat.gram();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (!is_integer(g(i, j))) throw DegenerateInput("discriminant_data: Gram is not integral");
    }
  }
  const IntMatrix gz = to_integer(g);
  DiscGroupData d;
  d.rank = lat.rank();
  d.determinant = determinant(gz);
  if (d.determinant == 0) throw DegenerateInput("discriminant_data: degenerate Gram matrix");
  d.signature = signature(g);
  d.even = true;
  for (std::size_t i = 0; i < gz.rows(); ++i) {
    if (gz(i, i) % 2 != 0) d.even = false;
  }
  const Integer modulus = d.even ? 2 : 1;
  const SmithForm s = smith_normal_form(gz);
  d.invariant_factors = s.invariant_factors;

  std::vector<QVec> glue;
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) {
    const Integer& di = s.invariant_factors[i];
    if (di == 1) continue;
    QVec x(gz.rows());
    for (std::size_t k = 0; k < gz.rows(); ++k) x[k] = make_rational(s.V(k, i), di);
    d.glue_norms.push_back(detail::reduce_mod(bilinear(g, x, x), modulus));
    glue.push_back(std::move(x));
    orders.push_back(di);
  }

  const Integer order = abs(d.determinant);
  if (order <= Integer(static_cast<unsigned long>(kMaxEnumeratedGroup))) {
    std::vector<Integer> k(glue.size(), Integer(0));
    for (;;) {
      QVec x(gz.rows());
      for (std::size_t i = 0; i < glue.size(); ++i) x = x + Rational(k[i]) * glue[i];
      ++d.norm_counts[detail::reduce_mod(bilinear(g, x, x), modulus)];
      std::size_t i = 0;
      while (i < k.size()) {
        if (++k[i] < orders[i]) break;
        k[i] = 0;
        ++i;
      }
      if (i == k.size()) break;
    }
    d.norm_counts_complete = true;
  }
  return d;
}

struct InvariantReport {
  DiscGroupData first;
  DiscGroupData second;
  std::vector<std::string> differing;
  std::string verdict;  // "distinguished" or "inconclusive"
};

/// Compares isometry invariants. "distinguished" is a proof of non-isometry;
/// "inconclusive" means every computed invariant agrees.
inline InvariantReport invariant_compare(const GramLattice& a, const GramLattice& b) {
  InvariantReport r{discriminant_data(a), discriminant_data(b), {}, {}};
  const DiscGroupData& x = r.first;
  const DiscGroupData& y = r.second;
  if (x.rank != y.rank) r.differing.push_back("rank");
  if (x.signature != y.signature) r.differing.push_back("signature");
  if (x.determinant != y.determinant) r.differing.push_back("determinant");
  if (x.even != y.even) r.differing.push_back("parity");
  auto nontrivial = [](const std::vector<Integer>& f) {
    std::vector<Integer> out;
    for (const auto& v : f) {
      if (v != 1) out.push_back(v);
    }
    return out;
  };
  if (nontrivial(x.invariant_factors) != nontrivial(y.invariant_factors)) {
    r.differing.push_back("discriminant_group");
  }
  if (x.even == y.even && x.norm_counts_complete && y.norm_counts_complete &&
      x.norm_counts != y.norm_counts) {
    r.differing.push_back("discriminant_form");
  }
  r.verdict = r.differing.empty() ? "inconclusive" : "distinguished";
  return r;
}

}  // namespace biprym
