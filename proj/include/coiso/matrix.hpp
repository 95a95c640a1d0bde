#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coiso/errors.hpp"
#include "coiso/scalar.hpp"

namespace coiso {

template <ExactField S>
using Vector = std::vector<S>;

/// Dense row-major matrix over an exact field. The field tag is the scalar
/// type, so every entry of a matrix shares it by construction.
template <ExactField S>
class Matrix {
 public:
  using scalar_type = S;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw DimensionMismatch("matrix entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  /// Columns become the given vectors; all must share `rows` entries.
  static Matrix from_columns(std::size_t rows, const std::vector<Vector<S>>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw DimensionMismatch("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  static Matrix column_vector(const Vector<S>& v) { return Matrix(v.size(), 1, v); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<S>& entries() const { return data_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector<S> column(std::size_t c) const {
    Vector<S> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  Vector<S> row(std::size_t r) const {
    return Vector<S>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const S& x) { return coiso::is_zero(x); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  S trace() const {
    if (!is_square()) throw DimensionMismatch("trace of non-square matrix");
    S t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Row-major flattening, the coordinates used for spaces of matrices.
  Vector<S> vec() const { return data_; }

  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("submatrix out of range");
    Matrix m(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
    return m;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (coiso::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vector<S> operator*(const Matrix& a, const Vector<S>& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector<S> out(a.rows_, S(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r) os << ", ";
      os << '[';
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) os << ", ";
        os << coiso::to_string((*this)(r, c));
      }
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <ExactField S>
Vector<S> operator+(Vector<S> a, const Vector<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <ExactField S>
Vector<S> operator-(Vector<S> a, const Vector<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <ExactField S>
Vector<S> operator*(Vector<S> a, const S& s) {
  for (auto& x : a) x *= s;
  return a;
}

template <ExactField S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
  return a * b - b * a;
}

/// Rank-one operator x -> phi(x) v, i.e. entries v_r * phi_c.
template <ExactField S>
Matrix<S> outer(const Vector<S>& v, const Vector<S>& phi) {
  Matrix<S> m(v.size(), phi.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < phi.size(); ++c) m(r, c) = v[r] * phi[c];
  return m;
}

template <ExactField S>
S dot(const Vector<S>& a, const Vector<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product length mismatch");
  S s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <ExactField S>
Matrix<S> block_diagonal(const std::vector<Matrix<S>>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix<S> m(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

template <ExactField S>
Matrix<S> hstack(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
  Matrix<S> m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

template <ExactField S>
Matrix<S> vstack(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
  Matrix<S> m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

/// Inverse of row-major flattening for n x n matrices.
template <ExactField S>
Matrix<S> unvec(const Vector<S>& v, std::size_t n) {
  return Matrix<S>(n, n, v);
}

/// Nilpotent Jordan block: ones on the superdiagonal, so A e_{k+1} = e_k.
template <ExactField S>
Matrix<S> jordan_block(std::size_t n) {
  Matrix<S> a(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) a(k, k + 1) = S(1);
  return a;
}

template <ExactField S>
Matrix<S> matrix_power(const Matrix<S>& m, std::size_t e) {
  if (!m.is_square()) throw DimensionMismatch("power of non-square matrix");
  Matrix<S> result = Matrix<S>::identity(m.rows());
  Matrix<S> base = m;
  for (; e; e >>= 1) {
    if (e & 1u) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

template <ExactField S>
std::string to_string(const Vector<S>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + "]";
}

}  // namespace coiso
