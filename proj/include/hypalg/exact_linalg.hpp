#pragma once

// Dense exact linear algebra over a field object (PrimeField or
// RationalField). Gaussian elimination with first-nonzero pivoting.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hypalg/error.hpp"
#include "hypalg/field.hpp"

namespace hypalg {

template <class Field>
class Matrix {
 public:
  using value_type = typename Field::value_type;

  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        data_(rows * cols, field_.zero()) {}

  /// Builds from integer entries, reducing each into the field.
  static Matrix from_ints(Field field, const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(std::move(field), r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DomainError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = m.field_.from_int(rows[i][j]);
    }
    return m;
  }

  static Matrix identity(Field field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.field_.one();
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<value_type> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    }
    return t;
  }

  /// Submatrix keeping the listed columns, in the given order.
  Matrix select_columns(const std::vector<std::size_t>& keep) const {
    Matrix out(field_, rows_, keep.size());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < keep.size(); ++j) out.at(i, j) = at(i, keep[j]);
    }
    return out;
  }

  Matrix select_rows(const std::vector<std::size_t>& keep) const {
    Matrix out(field_, keep.size(), cols_);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(keep[i], j);
    }
    return out;
  }

  std::vector<value_type> multiply(const std::vector<value_type>& v) const {
    if (v.size() != cols_) throw DomainError("matrix-vector dimension mismatch");
    std::vector<value_type> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!field_.is_zero(at(i, j))) out[i] = field_.add(out[i], field_.mul(at(i, j), v[j]));
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Debug text grid, one row per line.
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (j != 0) os << ' ';
        os << m.field_.to_string(m.at(i, j));
      }
      os << '\n';
    }
    return os;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

/// Result of reducing a matrix to reduced row echelon form.
template <class Field>
struct Echelon {
  Matrix<Field> reduced;
  std::vector<std::size_t> pivot_cols;
  bool odd_swaps = false;
  typename Field::value_type pivot_product;
};

template <class Field>
Echelon<Field> reduced_row_echelon(Matrix<Field> m) {
  const Field& f = m.field();
  Echelon<Field> out{m, {}, false, f.one()};
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && f.is_zero(m.at(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
      out.odd_swaps = !out.odd_swaps;
    }
    const auto lead = m.at(r, c);
    out.pivot_product = f.mul(out.pivot_product, lead);
    const auto lead_inv = f.inv(lead);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), lead_inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      const auto factor = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!f.is_zero(m.at(r, j))) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class Field>
std::size_t rank(const Matrix<Field>& m) {
  return reduced_row_echelon(m).pivot_cols.size();
}

template <class Field>
typename Field::value_type determinant(const Matrix<Field>& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const Field& f = m.field();
  auto e = reduced_row_echelon(m);
  if (e.pivot_cols.size() != m.rows()) return f.zero();
  return e.odd_swaps ? f.neg(e.pivot_product) : e.pivot_product;
}

/// Determinant over GF(2); the matrix must be square and over GF(2).
inline int determinant_gf2(const Matrix<PrimeField>& m) {
  if (m.field().characteristic() != 2) throw DomainError("determinant_gf2 needs a GF(2) matrix");
  return static_cast<int>(determinant(m));
}

/// Basis of the right nullspace {v : M v = 0}; size = cols - rank.
template <class Field>
std::vector<std::vector<typename Field::value_type>> nullspace_basis(const Matrix<Field>& m) {
  const Field& f = m.field();
  auto e = reduced_row_echelon(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = 1;
  std::vector<std::vector<typename Field::value_type>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename Field::value_type> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      v[e.pivot_cols[r]] = f.neg(e.reduced.at(r, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Incrementally maintained basis of a span of vectors of fixed length.
/// Each stored vector has a distinct pivot entry normalized to one, and every
/// stored vector is zero at the pivots of the vectors stored before it.
template <class Field>
class SpanBasis {
 public:
  using value_type = typename Field::value_type;

  SpanBasis(Field field, std::size_t length) : field_(std::move(field)), length_(length) {}

  std::size_t rank() const { return vectors_.size(); }
  std::size_t length() const { return length_; }

  /// Adds `v` to the span; returns true when the rank grew.
  bool insert(std::vector<value_type> v) {
    if (v.size() != length_) throw DomainError("vector length mismatch in span basis");
    for (std::size_t k = 0; k < vectors_.size(); ++k) {
      const auto coeff = v[pivots_[k]];
      if (field_.is_zero(coeff)) continue;
      const auto& b = vectors_[k];
      for (std::size_t j = 0; j < length_; ++j) {
        if (!field_.is_zero(b[j])) v[j] = field_.sub(v[j], field_.mul(coeff, b[j]));
      }
    }
    std::size_t p = 0;
    while (p < length_ && field_.is_zero(v[p])) ++p;
    if (p == length_) return false;
    const auto lead_inv = field_.inv(v[p]);
    for (auto& x : v) x = field_.mul(x, lead_inv);
    vectors_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

 private:
  Field field_;
  std::size_t length_;
  std::vector<std::vector<value_type>> vectors_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hypalg
