#pragma once

// Small dense exact matrices: fraction-free integer elimination, kernels as
// primitive integer vectors, Bareiss determinants.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "mnet/cyclo.hpp"
#include "mnet/errors.hpp"

namespace mnet {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  template <typename U>
  Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = U((*this)(i, j));
    return out;
  }

  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
    return out;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
      os << '\n';
    }
    return os;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<long long>;
using ZMatrix = Matrix<Integer>;
using QMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;

template <typename T>
std::vector<T> multiply(const Matrix<T>& m, const std::vector<T>& v) {
  if (v.size() != m.cols()) throw InvalidInput("matrix-vector shape mismatch");
  std::vector<T> out(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

namespace detail {

inline void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return;
  for (auto& x : v) x /= g;
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

inline void divide_row_content(ZMatrix& m, std::size_t row) {
  Integer g = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) g = gcd(g, m(row, j));
  if (g > 1)
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) /= g;
}

// Clears denominators row by row; row scaling does not change the kernel.
inline ZMatrix integer_rows(const QMatrix& m) {
  ZMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, Integer(m(i, j).get_den()));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational scaled = m(i, j) * l;
      out(i, j) = scaled.get_num();
    }
  }
  return out;
}

}  // namespace detail

/// Reduced row echelon form computed without fractions: rows are combined by
/// integer cross-multiplication and divided by their content.  Pivots are
/// positive; non-pivot entries in pivot columns are zero.
struct EchelonForm {
  ZMatrix rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

inline EchelonForm fraction_free_rref(ZMatrix m) {
  EchelonForm out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    if (m(r, c) < 0)
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
    detail::divide_row_content(m, r);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Integer a = m(r, c);
      const Integer b = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = a * m(i, j) - b * m(r, j);
      detail::divide_row_content(m, i);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rows = std::move(m);
  return out;
}

inline std::size_t rank(const QMatrix& m) {
  return fraction_free_rref(detail::integer_rows(m)).rank();
}

/// Kernel basis of an integer matrix, one primitive vector per free column
/// (ascending), first nonzero entry positive.
inline std::vector<IntVector> integer_kernel(const ZMatrix& m) {
  const EchelonForm e = fraction_free_rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = 1;
  Integer l = 1;
  for (std::size_t r = 0; r < e.rank(); ++r) l = lcm(l, e.rows(r, e.pivot_cols[r]));
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    IntVector v(m.cols(), Integer(0));
    v[f] = l;
    for (std::size_t r = 0; r < e.rank(); ++r) {
      const std::size_t c = e.pivot_cols[r];
      v[c] = -(l / e.rows(r, c)) * e.rows(r, f);
    }
    detail::make_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::vector<IntVector> rational_kernel(const QMatrix& m) {
  return integer_kernel(detail::integer_rows(m));
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
inline Integer determinant(ZMatrix m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j));
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Leading principal minors det(M[0..k, 0..k]) for k = 1..n.
inline std::vector<Integer> leading_principal_minors(const ZMatrix& m) {
  std::vector<Integer> minors;
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    idx.push_back(k);
    minors.push_back(determinant(m.submatrix(idx, idx)));
  }
  return minors;
}

}  // namespace mnet
