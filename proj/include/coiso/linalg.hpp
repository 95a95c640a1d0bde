#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "coiso/errors.hpp"
#include "coiso/matrix.hpp"

namespace coiso {

template <ExactField S>
struct RowEchelon {
  Matrix<S> reduced;                  // reduced row-echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination restricted to the first `ncols` columns (all
/// columns by default); the remaining columns are carried along.
template <ExactField S>
RowEchelon<S> row_reduce(Matrix<S> m, std::size_t ncols = static_cast<std::size_t>(-1)) {
  ncols = std::min(ncols, m.cols());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const S inv = S(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <ExactField S>
std::size_t rank(const Matrix<S>& m) {
  return row_reduce(m).rank();
}

/// A linear subspace of S^ambient. The basis is kept in reduced column-echelon
/// form (its transpose is in reduced row-echelon form), so two subspaces are
/// equal exactly when their stored bases are equal.
template <ExactField S>
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) { return Subspace(ambient, Matrix<S>(ambient, 0), {}); }
  static Subspace full(std::size_t ambient) { return span(Matrix<S>::identity(ambient)); }

  /// Span of the columns of `generators` (dependent columns allowed).
  static Subspace span(const Matrix<S>& generators) {
    RowEchelon<S> e = row_reduce(generators.transpose());
    const std::size_t ambient = generators.rows();
    Matrix<S> basis(ambient, e.rank());
    for (std::size_t j = 0; j < e.rank(); ++j)
      for (std::size_t i = 0; i < ambient; ++i) basis(i, j) = e.reduced(j, i);
    return Subspace(ambient, std::move(basis), std::move(e.pivots));
  }

  static Subspace span(std::size_t ambient, const std::vector<Vector<S>>& vectors) {
    return span(Matrix<S>::from_columns(ambient, vectors));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix<S>& basis() const { return basis_; }
  Vector<S> basis_vector(std::size_t j) const { return basis_.column(j); }
  std::vector<Vector<S>> basis_vectors() const {
    std::vector<Vector<S>> out;
    for (std::size_t j = 0; j < dim(); ++j) out.push_back(basis_.column(j));
    return out;
  }

  /// Coordinates of v in the canonical basis, or nullopt when v is not in
  /// the subspace. Pivot entries of v are exactly the coordinates.
  std::optional<Vector<S>> coordinates(const Vector<S>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector not in ambient space");
    Vector<S> coords(dim());
    Vector<S> residual = v;
    for (std::size_t j = 0; j < dim(); ++j) {
      coords[j] = v[pivots_[j]];
      if (is_zero(coords[j])) continue;
      for (std::size_t i = 0; i < ambient_; ++i) residual[i] -= coords[j] * basis_(i, j);
    }
    for (const auto& x : residual)
      if (!is_zero(x)) return std::nullopt;
    return coords;
  }

  bool contains(const Vector<S>& v) const { return coordinates(v).has_value(); }

  bool contains(const Subspace& w) const {
    if (w.ambient_ != ambient_) throw DimensionMismatch("subspaces in different ambient spaces");
    for (std::size_t j = 0; j < w.dim(); ++j)
      if (!contains(w.basis_vector(j))) return false;
    return true;
  }

  Vector<S> combination(const Vector<S>& coords) const { return basis_ * coords; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(std::size_t ambient, Matrix<S> basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  Matrix<S> basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : Mv = 0} in canonical form.
template <ExactField S>
Subspace<S> kernel(const Matrix<S>& m) {
  RowEchelon<S> e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector<S>> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<S> v(m.cols(), S(0));
    v[free] = S(1);
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    vectors.push_back(std::move(v));
  }
  return Subspace<S>::span(m.cols(), vectors);
}

template <ExactField S>
Subspace<S> image(const Matrix<S>& m) {
  return Subspace<S>::span(m);
}

template <ExactField S>
Subspace<S> image(const Matrix<S>& m, const Subspace<S>& u) {
  return Subspace<S>::span(m * u.basis());
}

template <ExactField S>
Subspace<S> sum(const Subspace<S>& u, const Subspace<S>& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("sum of subspaces in different spaces");
  return Subspace<S>::span(hstack(u.basis(), w.basis()));
}

template <ExactField S>
Subspace<S> intersection(const Subspace<S>& u, const Subspace<S>& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw DimensionMismatch("intersection of subspaces in different spaces");
  if (u.dim() == 0 || w.dim() == 0) return Subspace<S>::zero(u.ambient_dim());
  const Subspace<S> rel = kernel(hstack(u.basis(), -w.basis()));
  std::vector<Vector<S>> vectors;
  for (std::size_t j = 0; j < rel.dim(); ++j) {
    Vector<S> a = rel.basis_vector(j);
    a.resize(u.dim());
    vectors.push_back(u.combination(a));
  }
  return Subspace<S>::span(u.ambient_dim(), vectors);
}

/// Linear functionals (as coordinate vectors) vanishing on u.
template <ExactField S>
Subspace<S> annihilator(const Subspace<S>& u) {
  if (u.dim() == 0) return Subspace<S>::full(u.ambient_dim());
  return kernel(u.basis().transpose());
}

/// {v : Mv in u}.
template <ExactField S>
Subspace<S> preimage(const Matrix<S>& m, const Subspace<S>& u) {
  const Subspace<S> ann = annihilator(u);
  if (ann.dim() == 0) return Subspace<S>::full(m.cols());
  return kernel(ann.basis().transpose() * m);
}

template <ExactField S>
struct AffineSolution {
  Vector<S> particular;
  Subspace<S> homogeneous;
};

/// Solves M x = b for many right-hand sides against one precomputed
/// elimination of M.
template <ExactField S>
class AffineSolver {
 public:
  explicit AffineSolver(const Matrix<S>& m) : rows_(m.rows()), cols_(m.cols()) {
    RowEchelon<S> e = row_reduce(hstack(m, Matrix<S>::identity(m.rows())), m.cols());
    transform_ = e.reduced.submatrix(0, m.cols(), m.rows(), m.rows());
    pivots_ = e.pivots;
    kernel_ = kernel(m);
  }

  std::size_t rank() const { return pivots_.size(); }
  const Subspace<S>& homogeneous() const { return kernel_; }

  std::optional<Vector<S>> particular(const Vector<S>& b) const {
    if (b.size() != rows_) throw DimensionMismatch("right-hand side length mismatch");
    const Vector<S> y = transform_ * b;
    for (std::size_t r = rank(); r < rows_; ++r)
      if (!is_zero(y[r])) return std::nullopt;
    Vector<S> x(cols_, S(0));
    for (std::size_t r = 0; r < rank(); ++r) x[pivots_[r]] = y[r];
    return x;
  }

  std::optional<AffineSolution<S>> solve(const Vector<S>& b) const {
    auto x = particular(b);
    if (!x) return std::nullopt;
    return AffineSolution<S>{std::move(*x), kernel_};
  }

 private:
  std::size_t rows_, cols_;
  Matrix<S> transform_;
  std::vector<std::size_t> pivots_;
  Subspace<S> kernel_;
};

/// One solution of M x = b plus ker M, or nullopt when inconsistent.
template <ExactField S>
std::optional<AffineSolution<S>> solve_affine(const Matrix<S>& m, const Vector<S>& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
  return AffineSolver<S>(m).solve(b);
}

template <ExactField S>
Matrix<S> inverse(const Matrix<S>& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RowEchelon<S> e = row_reduce(hstack(m, Matrix<S>::identity(n)), n);
  if (e.rank() != n) throw Error("matrix is singular");
  return e.reduced.submatrix(0, n, n, n);
}

template <ExactField S>
bool is_nilpotent(const Matrix<S>& m) {
  if (!m.is_square()) throw DimensionMismatch("nilpotency test needs a square matrix");
  // M^n = 0 iff M^(2^k) = 0 for any 2^k >= n.
  Matrix<S> p = m;
  for (std::size_t e = 1; e < m.rows(); e <<= 1) {
    if (p.is_zero()) return true;
    p = p * p;
  }
  return p.is_zero();
}

/// Univariate polynomial, coefficients from the constant term upwards.
template <ExactField S>
using Polynomial1 = std::vector<S>;

template <ExactField S>
void trim(Polynomial1<S>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

/// Characteristic polynomial det(xI - M) via Hessenberg reduction; valid over
/// any field.
template <ExactField S>
Polynomial1<S> characteristic_polynomial(const Matrix<S>& m) {
  if (!m.is_square()) throw DimensionMismatch("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<S> h = m;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t i = k;
    while (i < n && is_zero(h(i, k - 1))) ++i;
    if (i == n) continue;
    if (i != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(k, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, k));
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      if (is_zero(h(r, k - 1))) continue;
      const S u = h(r, k - 1) / h(k, k - 1);
      for (std::size_t c = 0; c < n; ++c) h(r, c) -= u * h(k, c);
      for (std::size_t rr = 0; rr < n; ++rr) h(rr, k) += u * h(rr, r);
    }
  }
  // p[m] is the characteristic polynomial of the leading m x m block.
  std::vector<Polynomial1<S>> p(n + 1);
  p[0] = {S(1)};
  for (std::size_t mm = 1; mm <= n; ++mm) {
    Polynomial1<S> next(mm + 1, S(0));
    for (std::size_t d = 0; d < p[mm - 1].size(); ++d) {
      next[d + 1] += p[mm - 1][d];
      next[d] -= h(mm - 1, mm - 1) * p[mm - 1][d];
    }
    S t(1);
    for (std::size_t i = 1; i < mm; ++i) {
      t *= h(mm - i, mm - i - 1);
      const S coeff = h(mm - i - 1, mm - 1) * t;
      for (std::size_t d = 0; d < p[mm - i - 1].size(); ++d) next[d] -= coeff * p[mm - i - 1][d];
    }
    p[mm] = std::move(next);
  }
  return p[n];
}

/// Monic minimal polynomial via the first linear dependency among I, M, M^2, ...
template <ExactField S>
Polynomial1<S> minimal_polynomial(const Matrix<S>& m) {
  if (!m.is_square()) throw DimensionMismatch("minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Vector<S>> powers{Matrix<S>::identity(n).vec()};
  Matrix<S> current = Matrix<S>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    current = current * m;
    const Matrix<S> krylov = Matrix<S>::from_columns(n * n, powers);
    if (auto sol = solve_affine(krylov, current.vec())) {
      Polynomial1<S> poly(k + 1, S(0));
      for (std::size_t i = 0; i < k; ++i) poly[i] = -sol->particular[i];
      poly[k] = S(1);
      return poly;
    }
    powers.push_back(current.vec());
  }
  throw Error("minimal polynomial degree exceeded matrix size");
}

template <ExactField S>
Polynomial1<S> derivative(const Polynomial1<S>& p) {
  Polynomial1<S> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * S(static_cast<long>(i)));
  trim(d);
  return d;
}

template <ExactField S>
Polynomial1<S> poly_mod(Polynomial1<S> a, Polynomial1<S> b) {
  trim(a);
  trim(b);
  if (b.empty()) throw Error("polynomial division by zero");
  while (a.size() >= b.size()) {
    const S factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

template <ExactField S>
Polynomial1<S> poly_gcd(Polynomial1<S> a, Polynomial1<S> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Polynomial1<S> r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const S lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

/// Diagonalizable over the algebraic closure: the minimal polynomial is
/// squarefree. Characteristic zero only.
template <ExactField S>
bool is_semisimple(const Matrix<S>& m) {
  if constexpr (is_finite_field_v<S>) {
    throw Unsupported("semisimplicity test is only defined over Q here");
  } else {
    const Polynomial1<S> mp = minimal_polynomial(m);
    return poly_gcd(mp, derivative(mp)).size() == 1;
  }
}

namespace detail {

/// Visits every a in N^k with |a| <= total in order of increasing |a|;
/// stops when the visitor returns false. Returns false if stopped.
inline bool visit_simplex(std::size_t k, std::size_t total,
                          const std::function<bool(const std::vector<long>&)>& visit) {
  std::vector<long> a(k, 0);
  // Fill positions [pos, k) with exactly `remaining` units.
  std::function<bool(std::size_t, long)> rec = [&](std::size_t pos, long remaining) -> bool {
    if (pos + 1 == k) {
      a[pos] = remaining;
      const bool go_on = visit(a);
      a[pos] = 0;
      return go_on;
    }
    for (long x = remaining; x >= 0; --x) {
      a[pos] = x;
      if (!rec(pos + 1, remaining - x)) {
        a[pos] = 0;
        return false;
      }
    }
    a[pos] = 0;
    return true;
  };
  if (k == 0) return visit(a);
  for (long d = 0; d <= static_cast<long>(total); ++d)
    if (!rec(0, d)) return false;
  return true;
}

inline bool visit_box(std::size_t k, long side,
                      const std::function<bool(const std::vector<long>&)>& visit) {
  std::vector<long> a(k, 0);
  while (true) {
    if (!visit(a)) return false;
    std::size_t i = 0;
    while (i < k && ++a[i] == side) a[i++] = 0;
    if (i == k) return true;
  }
}

}  // namespace detail

/// True iff every element of span(basis) is nilpotent.
///
/// Each characteristic-polynomial coefficient of sum t_i Z_i is a polynomial
/// of total degree <= n in t. Over Q it vanishes identically iff it vanishes
/// on the lattice simplex {a in N^k : |a| <= n}, which is unisolvent for that
/// degree. Over F_p the same points work while n < p; otherwise the whole of
/// F_p^k is enumerated.
template <ExactField S>
bool subspace_all_nilpotent(std::span<const Matrix<S>> basis) {
  if (basis.empty()) return true;
  const std::size_t n = basis.front().rows();
  for (const auto& z : basis)
    if (!z.is_square() || z.rows() != n) throw DimensionMismatch("span of non-uniform matrices");
  auto all_nilpotent_at = [&](const std::vector<long>& a) {
    Matrix<S> m(n, n);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (a[i] != 0) m += basis[i] * S(a[i]);
    return is_nilpotent(m);
  };
  if constexpr (is_finite_field_v<S>) {
    if (n >= field_traits<S>::characteristic)
      return detail::visit_box(basis.size(), static_cast<long>(field_traits<S>::characteristic),
                               all_nilpotent_at);
  }
  return detail::visit_simplex(basis.size(), n, all_nilpotent_at);
}

template <ExactField S>
bool subspace_all_nilpotent(const std::vector<Matrix<S>>& basis) {
  return subspace_all_nilpotent(std::span<const Matrix<S>>(basis));
}

/// Enumerates every point of a subspace over F_p (p^dim points). The
/// visitor returns false to stop early.
template <ExactField S, class Visit>
  requires is_finite_field_v<S>
bool for_each_point(const Subspace<S>& u, Visit&& visit) {
  const long p = static_cast<long>(field_traits<S>::characteristic);
  const std::size_t k = u.dim();
  std::vector<long> c(k, 0);
  Vector<S> point(u.ambient_dim(), S(0));
  while (true) {
    if (!visit(point)) return false;
    std::size_t i = 0;
    while (i < k) {
      // point += basis_i; wrap coefficient back to 0 after p steps
      for (std::size_t r = 0; r < point.size(); ++r) point[r] += u.basis()(r, i);
      if (++c[i] < p) break;
      c[i] = 0;
      ++i;
    }
    if (i == k) return true;
  }
}

}  // namespace coiso
