#pragma once

// Matrix Lie algebras over Q given by an explicit basis of N x N matrices.
// Elements are handled either as matrices or as coordinate vectors in the
// basis.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coiso/errors.hpp"
#include "coiso/linalg.hpp"

namespace coiso {

using Q = Rational;

/// The N^2 x N^2 matrix of a linear map on N x N matrices, acting on
/// row-major flattenings.
inline Matrix<Q> linear_map_matrix(std::size_t n, const std::function<Matrix<Q>(const Matrix<Q>&)>& fn) {
  std::vector<Vector<Q>> cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<Q> unit(n, n);
      unit(i, j) = 1;
      cols.push_back(fn(unit).vec());
    }
  return Matrix<Q>::from_columns(fn(Matrix<Q>(n, n)).vec().size(), cols);
}

/// Jordan type from the ranks of successive powers, largest part first.
inline std::vector<std::size_t> jordan_type(const Matrix<Q>& x) {
  if (!is_nilpotent(x)) throw Error("jordan_type needs a nilpotent matrix");
  const std::size_t n = x.rows();
  std::vector<std::size_t> ranks{n};
  Matrix<Q> p = Matrix<Q>::identity(n);
  while (ranks.back() > 0) {
    p = p * x;
    ranks.push_back(rank(p));
  }
  // blocks of size >= k: ranks[k-1] - ranks[k]
  std::vector<std::size_t> at_least;
  for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
  std::vector<std::size_t> parts;
  for (std::size_t k = at_least.size(); k-- > 0;) {
    const std::size_t exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
    for (std::size_t c = 0; c < exactly; ++c) parts.push_back(k + 1);
  }
  return parts;
}

inline std::string partition_label(const std::vector<std::size_t>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "+" : "") + std::to_string(parts[i]);
  return s.empty() ? "0" : s;
}

/// Partitions of n, each listed largest part first, in reverse lexicographic
/// order (n first, 1+...+1 last).
inline std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t rest, std::size_t max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Nilpotent matrix with Jordan blocks of the given sizes.
inline Matrix<Q> nilpotent_of_type(const std::vector<std::size_t>& parts) {
  std::vector<Matrix<Q>> blocks;
  for (auto k : parts) blocks.push_back(jordan_block<Q>(k));
  return block_diagonal(blocks);
}

class MatrixLieAlgebra {
 public:
  MatrixLieAlgebra(std::size_t n, std::vector<Matrix<Q>> basis) : n_(n), basis_(std::move(basis)) {
    std::vector<Vector<Q>> cols;
    for (const auto& b : basis_) {
      if (b.rows() != n_ || b.cols() != n_)
        throw DimensionMismatch("basis element is not " + std::to_string(n_) + " x " + std::to_string(n_));
      cols.push_back(b.vec());
    }
    span_ = Subspace<Q>::span(n_ * n_, cols);
    if (span_.dim() != basis_.size())
      throw InvariantViolation("basis_independent", "g_basis has rank " + std::to_string(span_.dim()) +
                                                        " but " + std::to_string(basis_.size()) + " elements");
    // canonical coordinates of the given basis, inverted
    Matrix<Q> c(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      const auto coords = *span_.coordinates(cols[j]);
      for (std::size_t i = 0; i < dim(); ++i) c(i, j) = coords[i];
    }
    to_basis_ = inverse(c);
  }

  /// Algebra whose basis is the canonical basis of `flat` (flattened matrices).
  static MatrixLieAlgebra spanned_by(std::size_t n, const Subspace<Q>& flat) {
    std::vector<Matrix<Q>> basis;
    for (const auto& v : flat.basis_vectors()) basis.push_back(unvec(v, n));
    return MatrixLieAlgebra(n, std::move(basis));
  }

  std::size_t matrix_size() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix<Q>>& basis() const { return basis_; }

  Matrix<Q> element(const Vector<Q>& coords) const {
    if (coords.size() != dim()) throw DimensionMismatch("coordinate vector has wrong length");
    Matrix<Q> m(n_, n_);
    for (std::size_t i = 0; i < dim(); ++i)
      if (!is_zero(coords[i])) m += basis_[i] * coords[i];
    return m;
  }

  std::optional<Vector<Q>> coordinates(const Matrix<Q>& x) const {
    if (x.rows() != n_ || x.cols() != n_) throw DimensionMismatch("matrix has wrong size");
    auto c = span_.coordinates(x.vec());
    if (!c) return std::nullopt;
    return to_basis_ * *c;
  }

  bool contains(const Matrix<Q>& x) const { return coordinates(x).has_value(); }

  Vector<Q> coords(const Matrix<Q>& x, const std::string& invariant = "bracket_closure") const {
    auto c = coordinates(x);
    if (!c) throw InvariantViolation(invariant, "matrix " + x.to_string() + " is not in g");
    return *c;
  }

  /// ad x in the basis: column j holds the coordinates of [x, b_j].
  Matrix<Q> ad(const Matrix<Q>& x) const {
    std::vector<Vector<Q>> cols;
    for (const auto& b : basis_) cols.push_back(coords(commutator(x, b)));
    return Matrix<Q>::from_columns(dim(), cols);
  }

  std::vector<Matrix<Q>> elements(const Subspace<Q>& u) const {
    std::vector<Matrix<Q>> out;
    for (const auto& v : u.basis_vectors()) out.push_back(element(v));
    return out;
  }

  /// [g, g] as a subspace of coordinate space.
  Subspace<Q> derived_subalgebra() const {
    std::vector<Vector<Q>> vs;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j) vs.push_back(coords(commutator(basis_[i], basis_[j])));
    return Subspace<Q>::span(dim(), vs);
  }

  /// Gram matrix of B(x, y) = tr(xy).
  Matrix<Q> trace_form() const {
    Matrix<Q> g(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i; j < dim(); ++j) {
        Q t(0);
        for (std::size_t a = 0; a < n_; ++a)
          for (std::size_t b = 0; b < n_; ++b) t += basis_[i](a, b) * basis_[j](b, a);
        g(i, j) = t;
        g(j, i) = t;
      }
    return g;
  }

 private:
  std::size_t n_;
  std::vector<Matrix<Q>> basis_;
  Subspace<Q> span_;
  Matrix<Q> to_basis_;
};

/// Matrices X with lin(X) = 0 for each map in `conditions`.
inline MatrixLieAlgebra algebra_cut_by(std::size_t n,
                                       const std::vector<std::function<Matrix<Q>(const Matrix<Q>&)>>& conditions) {
  Matrix<Q> stacked(0, n * n);
  for (const auto& c : conditions) stacked = vstack(stacked, linear_map_matrix(n, c));
  return MatrixLieAlgebra::spanned_by(n, kernel(stacked));
}

}  // namespace coiso
