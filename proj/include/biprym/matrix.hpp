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

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "biprym/errors.hpp"
#include "biprym/rational.hpp"

namespace biprym {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::vector<T>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
      if (row.size() != c_) throw DegenerateInput("Matrix: ragged rows");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DegenerateInput("Matrix: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return r_; }
  std::size_t cols() const noexcept { return c_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + static_cast<std::ptrdiff_t>(i * c_),
                          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * c_));
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }
  /// row i += f * row j
  void add_row(std::size_t i, std::size_t j, const T& f) {
    for (std::size_t k = 0; k < c_; ++k) (*this)(i, k) += f * (*this)(j, k);
  }
  /// col i += f * col j
  void add_col(std::size_t i, std::size_t j, const T& f) {
    for (std::size_t k = 0; k < r_; ++k) (*this)(k, i) += f * (*this)(k, j);
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  Matrix submatrix_rows(std::size_t first, std::size_t count) const {
    Matrix s(count, c_);
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < c_; ++j) s(i, j) = (*this)(first + i, j);
    }
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw DegenerateInput("Matrix: dimension mismatch");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i) {
      for (std::size_t k = 0; k < a.c_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += aik * b(k, j);
      }
    }
    return m;
  }
  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& v : m.a_) v *= s;
    return m;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw DegenerateInput("Matrix: dimension mismatch");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t r_ = 0;
  std::size_t c_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Integer>;
using QMatrix = Matrix<Rational>;

inline QMatrix to_rational(const IntMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  }
  return q;
}

/// Requires every entry to be an integer.
inline IntMatrix to_integer(const QMatrix& m) {
  IntMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw DegenerateInput("to_integer: non-integral entry");
      z(i, j) = m(i, j).get_num();
    }
  }
  return z;
}

inline Rational determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw DegenerateInput("determinant: non-square matrix");
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != k) {
      m.swap_rows(piv, k);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = -m(i, k) / m(k, k);
      m.add_row(i, k, f);
    }
  }
  return det;
}

inline Integer determinant(const IntMatrix& m) {
  const Rational d = determinant(to_rational(m));
  return d.get_num();
}

inline std::size_t rank(QMatrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      const Rational f = -m(i, col) / m(r, col);
      m.add_row(i, r, f);
    }
    ++r;
  }
  return r;
}

template <class T>
std::string to_string(const Matrix<T>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += to_string(m(i, j));
    }
    out += "]\n";
  }
  return out;
}

}  // namespace biprym
