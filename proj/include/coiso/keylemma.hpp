#pragma once

// The incidence geometry over X = sl(V) x V x V* attached to a nilpotent
// Jordan block A: the sets S, S', the paired sets, the restricted variety
// R_A, the kernel lattice L_ij and the polynomial f.
//
// Coordinates: V = F^n with basis e_1..e_n, V* = F^n with dual basis
// eps_1..eps_n, A e_{k+1} = e_k, and A* acts on V* by A^T. Points of
// V x V* x V x V* are vectors (v1, phi1, v2, phi2) of length 4n.

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coiso/errors.hpp"
#include "coiso/linalg.hpp"
#include "coiso/symplectic.hpp"

namespace coiso {

template <ExactField S>
struct TripleXPoint {
  Matrix<S> a;
  Vector<S> v;
  Vector<S> phi;

  TripleXPoint(Matrix<S> a_mat, Vector<S> v_vec, Vector<S> phi_vec)
      : a(std::move(a_mat)), v(std::move(v_vec)), phi(std::move(phi_vec)) {
    if (!a.is_square() || v.size() != a.rows() || phi.size() != a.rows())
      throw DimensionMismatch("point of X needs an n x n matrix, a vector and a covector of length n");
    if (!is_zero(a.trace())) throw InvariantViolation("traceless", "A is not in sl(V)");
  }
};

/// A^n = 0 and phi(A^i v) = 0 for 0 <= i <= n.
template <ExactField S>
bool in_S(const TripleXPoint<S>& pt) {
  const std::size_t n = pt.a.rows();
  if (!matrix_power(pt.a, n).is_zero()) return false;
  Vector<S> w = pt.v;
  for (std::size_t i = 0; i <= n; ++i) {
    if (!is_zero(dot(pt.phi, w))) return false;
    w = pt.a * w;
  }
  return true;
}

/// in_S plus A^{n-1} v = 0 and (A*)^{n-1} phi = 0.
template <ExactField S>
bool in_Sprime(const TripleXPoint<S>& pt) {
  if (!in_S(pt)) return false;
  const std::size_t n = pt.a.rows();
  const Matrix<S> p = matrix_power(pt.a, n - 1);
  for (const auto& x : p * pt.v)
    if (!is_zero(x)) return false;
  for (const auto& x : p.transpose() * pt.phi)
    if (!is_zero(x)) return false;
  return true;
}

/// The displayed commutator equation [A1, A2] + v1 (x) phi2 - v2 (x) phi1 = 0.
template <ExactField S>
bool paired_equation_holds(const TripleXPoint<S>& p1, const TripleXPoint<S>& p2) {
  return (commutator(p1.a, p2.a) + outer(p1.v, p2.phi) - outer(p2.v, p1.phi)).is_zero();
}

template <ExactField S>
bool in_Scheck(const TripleXPoint<S>& p1, const TripleXPoint<S>& p2) {
  for (const auto* a : {&p1, &p2})
    for (const auto* vp : {&p1, &p2})
      if (!in_S(TripleXPoint<S>(a->a, vp->v, vp->phi))) return false;
  return paired_equation_holds(p1, p2);
}

template <ExactField S>
bool in_Scheck_prime(const TripleXPoint<S>& p1, const TripleXPoint<S>& p2) {
  for (const auto* a : {&p1, &p2})
    for (const auto* vp : {&p1, &p2})
      if (!in_Sprime(TripleXPoint<S>(a->a, vp->v, vp->phi))) return false;
  return paired_equation_holds(p1, p2);
}

/// phi(A^i v) for 0 <= i <= n-1 and tr A^k for 2 <= k <= n all vanish.
template <ExactField S>
bool s_invariants_vanish(const TripleXPoint<S>& pt) {
  const std::size_t n = pt.a.rows();
  Vector<S> w = pt.v;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(dot(pt.phi, w))) return false;
    w = pt.a * w;
  }
  Matrix<S> p = pt.a;
  for (std::size_t k = 2; k <= n; ++k) {
    p = p * pt.a;
    if (!is_zero(p.trace())) return false;
  }
  return true;
}

enum class Membership { member, non_member, undecided };

inline std::string to_string(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::non_member: return "non-member";
    default: return "undecided";
  }
}

template <ExactField S>
class KeyLemmaInstance {
 public:
  explicit KeyLemmaInstance(std::size_t n) : n_(n), a_(jordan_block<S>(n)), solver_(commutator_system(n)) {
    if (n == 0) throw Unsupported("n must be positive");
    if (!matrix_power(a_, n).is_zero() || (n > 1 && matrix_power(a_, n - 1).is_zero()))
      throw InvariantViolation("single_block", "A is not a single nilpotent Jordan block");
  }

  std::size_t n() const { return n_; }
  const Matrix<S>& a() const { return a_; }

  /// Ker A^i (= span(e_1..e_i)) and Ker (A*)^k (= span(eps_{n-k+1}..eps_n)).
  Subspace<S> kernel_power(std::size_t i) const { return kernel(matrix_power(a_, i)); }
  Subspace<S> dual_kernel_power(std::size_t k) const { return kernel(matrix_power(a_.transpose(), k)); }

  /// L_ij = Ker A^i x Ker (A*)^{n-i} x Ker A^j x Ker (A*)^{n-j} inside F^{4n}.
  Subspace<S> lattice_Lij(std::size_t i, std::size_t j) const {
    if (i > n_ || j > n_) throw Error("lattice index out of range 0..n");
    const std::vector<Subspace<S>> factors{kernel_power(i), dual_kernel_power(n_ - i), kernel_power(j),
                                           dual_kernel_power(n_ - j)};
    std::vector<Vector<S>> vs;
    for (std::size_t f = 0; f < 4; ++f)
      for (const auto& b : factors[f].basis_vectors()) {
        Vector<S> v(4 * n_, S(0));
        for (std::size_t r = 0; r < n_; ++r) v[f * n_ + r] = b[r];
        vs.push_back(std::move(v));
      }
    return Subspace<S>::span(4 * n_, vs);
  }

  /// Solutions A2 in sl(V) of [A, A2] = v2 (x) phi1 - v1 (x) phi2, as flattened matrices.
  std::optional<AffineSolution<S>> solve_partner(const Vector<S>& v1, const Vector<S>& phi1, const Vector<S>& v2,
                                                 const Vector<S>& phi2) const {
    Vector<S> rhs = (outer(v2, phi1) - outer(v1, phi2)).vec();
    rhs.push_back(S(0));
    return solver_.solve(rhs);
  }

  /// Solutions B in gl(V) of [A, B] = M.
  std::optional<AffineSolution<S>> solve_commutator(const Matrix<S>& m) const {
    if (m.rows() != n_ || m.cols() != n_) throw DimensionMismatch("M must be n x n");
    return solve_affine(ad_matrix(), m.vec());
  }

  /// ad_A on row-major flattenings of n x n matrices.
  Matrix<S> ad_matrix() const {
    Matrix<S> ad(n_ * n_, n_ * n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) {
        Matrix<S> unit(n_, n_);
        unit(r, c) = S(1);
        const Vector<S> col = commutator(a_, unit).vec();
        for (std::size_t k = 0; k < col.size(); ++k) ad(k, r * n_ + c) = col[k];
      }
    return ad;
  }

 private:
  static AffineSolver<S> commutator_system(std::size_t n) {
    const Matrix<S> a = jordan_block<S>(n);
    Matrix<S> m(n * n + 1, n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Matrix<S> unit(n, n);
        unit(r, c) = S(1);
        const Vector<S> col = commutator(a, unit).vec();
        for (std::size_t k = 0; k < col.size(); ++k) m(k, r * n + c) = col[k];
      }
    for (std::size_t d = 0; d < n; ++d) m(n * n, d * n + d) = S(1);
    return AffineSolver<S>(m);
  }

  std::size_t n_;
  Matrix<S> a_;
  AffineSolver<S> solver_;
};

template <ExactField S>
struct Quadruple {
  Vector<S> v1, phi1, v2, phi2;

  static Quadruple split(const Vector<S>& x, std::size_t n) {
    if (x.size() != 4 * n) throw DimensionMismatch("point of V x V* x V x V* has length 4n");
    auto part = [&](std::size_t k) { return Vector<S>(x.begin() + k * n, x.begin() + (k + 1) * n); };
    return {part(0), part(1), part(2), part(3)};
  }

  Vector<S> joined() const {
    Vector<S> x = v1;
    for (const auto* p : {&phi1, &v2, &phi2}) x.insert(x.end(), p->begin(), p->end());
    return x;
  }
};

namespace detail {

template <ExactField S>
bool partner_ok(const Matrix<S>& a2, const Quadruple<S>& q) {
  return in_Sprime(TripleXPoint<S>(a2, q.v1, q.phi1)) && in_Sprime(TripleXPoint<S>(a2, q.v2, q.phi2));
}

}  // namespace detail

/// A partner A2 with ((A, v1, phi1), (A2, v2, phi2)) in the paired set S',
/// searched over the whole solution coset over F_p and over a small integer
/// grid of the coset over Q.
template <ExactField S>
std::pair<Membership, std::optional<Matrix<S>>> ra_membership(const KeyLemmaInstance<S>& inst,
                                                              const Quadruple<S>& q) {
  const std::size_t n = inst.n();
  if (!in_Sprime(TripleXPoint<S>(inst.a(), q.v1, q.phi1)) || !in_Sprime(TripleXPoint<S>(inst.a(), q.v2, q.phi2)))
    return {Membership::non_member, std::nullopt};
  const auto sol = inst.solve_partner(q.v1, q.phi1, q.v2, q.phi2);
  if (!sol) return {Membership::non_member, std::nullopt};
  std::optional<Matrix<S>> witness;
  auto try_point = [&](const Vector<S>& flat) {
    const Matrix<S> a2 = unvec(flat, n);
    if (detail::partner_ok(a2, q)) {
      witness = a2;
      return false;
    }
    return true;
  };
  if constexpr (is_finite_field_v<S>) {
    for_each_point(sol->homogeneous, [&](const Vector<S>& h) { return try_point(sol->particular + h); });
    return {witness ? Membership::member : Membership::non_member, witness};
  } else {
    // The coset is P0 + (traceless polynomials in A). Those are strictly upper
    // triangular, so the diagonal and lower part of every A2 equal those of P0.
    const Matrix<S> p0 = unvec(sol->particular, n);
    bool upper = true, zero_diag = true;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < r; ++c) upper = upper && is_zero(p0(r, c));
      zero_diag = zero_diag && is_zero(p0(r, r));
    }
    if (upper && !zero_diag) return {Membership::non_member, std::nullopt};
    const std::size_t k = sol->homogeneous.dim();
    std::vector<long> c(k, -2);
    while (true) {
      Vector<S> coeffs(k);
      for (std::size_t i = 0; i < k; ++i) coeffs[i] = S(c[i]);
      if (!try_point(sol->particular + sol->homogeneous.combination(coeffs))) break;
      std::size_t i = 0;
      while (i < k && ++c[i] > 2) c[i++] = -2;
      if (i == k) break;
    }
    return {witness ? Membership::member : Membership::undecided, witness};
  }
}

template <ExactField S>
bool in_RA(const KeyLemmaInstance<S>& inst, const Vector<S>& v1, const Vector<S>& phi1, const Vector<S>& v2,
           const Vector<S>& phi2) {
  const auto [m, w] = ra_membership(inst, Quadruple<S>{v1, phi1, v2, phi2});
  if (m == Membership::undecided) throw Inconclusive("R_A membership undecided by the rational grid search");
  return m == Membership::member;
}

/// f = (v1)_i (phi2)_{i+1} - (v2)_i (phi1)_{i+1}, coordinates 1-indexed.
template <ExactField S>
S f_value(const KeyLemmaInstance<S>& inst, std::size_t i, const Quadruple<S>& q) {
  if (i < 1 || i + 1 > inst.n()) throw Error("f needs 1 <= i <= n-1");
  return q.v1[i - 1] * q.phi2[i] - q.v2[i - 1] * q.phi1[i];
}

/// Some L_ij with 1 <= i, j <= n-1 contains the point.
template <ExactField S>
bool in_QA_product(const KeyLemmaInstance<S>& inst, const Quadruple<S>& q) {
  const Vector<S> x = q.joined();
  for (std::size_t i = 1; i < inst.n(); ++i)
    for (std::size_t j = 1; j < inst.n(); ++j)
      if (inst.lattice_Lij(i, j).contains(x)) return true;
  return false;
}

struct FVanishingResult {
  std::size_t points = 0;
  std::size_t members = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Enumerates L_ii over F_p, keeps the R_A members and evaluates f on them.
template <ExactField S>
  requires is_finite_field_v<S>
FVanishingResult verify_f_vanishes(const KeyLemmaInstance<S>& inst, std::size_t i) {
  FVanishingResult out;
  for_each_point(inst.lattice_Lij(i, i), [&](const Vector<S>& x) {
    ++out.points;
    const Quadruple<S> q = Quadruple<S>::split(x, inst.n());
    const auto [m, w] = ra_membership(inst, q);
    if (m != Membership::member) return true;
    ++out.members;
    if (!is_zero(f_value(inst, i, q)))
      out.violations.push_back("point " + to_string(x) + " with A2 = " + w->to_string() + " has f != 0");
    return true;
  });
  return out;
}

/// round(log count / log p) for every prime; all must agree.
inline long estimate_dimension(const std::map<long, std::size_t>& counts) {
  if (counts.size() < 3) throw Inconclusive("dimension estimate needs counts for at least 3 primes");
  std::optional<long> est;
  std::string detail;
  for (const auto& [p, c] : counts) {
    if (c == 0) throw Inconclusive("zero point count over F_" + std::to_string(p));
    const long e = std::lround(std::log(static_cast<double>(c)) / std::log(static_cast<double>(p)));
    detail += " F_" + std::to_string(p) + ":" + std::to_string(c) + "->" + std::to_string(e);
    if (est && *est != e) throw Inconclusive("per-prime estimates disagree:" + detail);
    est = e;
  }
  return *est;
}

/// M is zero outside the top-right i x (n - i) block.
template <ExactField S>
bool has_block_shape(const Matrix<S>& m, std::size_t i) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if ((r >= i || c < i) && !is_zero(m(r, c))) return false;
  return true;
}

template <ExactField S>
bool is_upper_triangular(const Matrix<S>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < r && c < m.cols(); ++c)
      if (!is_zero(m(r, c))) return false;
  return true;
}

/// Every B with [A, B] = M is upper triangular, for one M of block shape i.
template <ExactField S>
bool verify_upper_triangular_claim(const KeyLemmaInstance<S>& inst, const Matrix<S>& m, std::size_t i) {
  if (!has_block_shape(m, i)) throw Error("M is not zero outside the top-right i x (n-i) block");
  const auto sol = inst.solve_commutator(m);
  if (!sol) throw Inconsistent("no B solves [A, B] = M");
  if (!is_upper_triangular(unvec(sol->particular, inst.n()))) return false;
  for (const auto& h : sol->homogeneous.basis_vectors())
    if (!is_upper_triangular(unvec(h, inst.n()))) return false;
  return true;
}

/// Subspace of n x n matrices (flattened) of block shape i.
template <ExactField S>
Subspace<S> block_shape_space(std::size_t n, std::size_t i) {
  std::vector<Vector<S>> vs;
  for (std::size_t r = 0; r < i; ++r)
    for (std::size_t c = i; c < n; ++c) {
      Vector<S> v(n * n, S(0));
      v[r * n + c] = S(1);
      vs.push_back(v);
    }
  return Subspace<S>::span(n * n, vs);
}

struct UpperTriangularFinding {
  bool upper = true;          // every B with [A, B] of block shape is upper triangular
  bool entry_vanishes = true; // such B with zero diagonal give M_{i,i+1} = 0
};

/// The claim for all M of block shape i at once: the preimage of the block
/// space under ad_A lies in the upper-triangular matrices, and on its
/// zero-diagonal part the (i, i+1) entry of [A, B] vanishes.
template <ExactField S>
UpperTriangularFinding verify_upper_triangular_symbolic(const KeyLemmaInstance<S>& inst, std::size_t i) {
  const std::size_t n = inst.n();
  const Matrix<S> ad = inst.ad_matrix();
  const Subspace<S> pre = preimage(ad, block_shape_space<S>(n, i));
  UpperTriangularFinding out;
  for (const auto& b : pre.basis_vectors()) out.upper = out.upper && is_upper_triangular(unvec(b, n));
  if (i >= 1 && i < n) {
    // zero-diagonal part of the preimage
    Matrix<S> diag_rows(n, n * n);
    for (std::size_t d = 0; d < n; ++d) diag_rows(d, d * n + d) = S(1);
    const Subspace<S> nil = intersection(pre, kernel(diag_rows));
    for (const auto& b : nil.basis_vectors()) {
      const Matrix<S> m = commutator(inst.a(), unvec(b, n));
      out.entry_vanishes = out.entry_vanishes && is_zero(m(i - 1, i));
    }
  }
  return out;
}

/// T^*(V x V*) with base (v1, phi1) and fiber (v2, phi2), the fiber paired
/// with the base through beta((v, phi), (v', phi')) = phi(v') + phi'(v).
template <ExactField S>
SymplecticSpace<S> keylemma_space(std::size_t n) {
  const std::size_t m = 2 * n;
  Matrix<S> beta(m, m);
  for (std::size_t k = 0; k < n; ++k) {
    beta(k, n + k) = S(1);
    beta(n + k, k) = S(1);
  }
  Matrix<S> gram(2 * m, 2 * m);
  gram.set_block(0, m, beta);
  gram.set_block(m, 0, -beta);
  std::vector<Vector<S>> fiber;
  for (std::size_t k = 0; k < m; ++k) {
    Vector<S> v(2 * m, S(0));
    v[m + k] = S(1);
    fiber.push_back(v);
  }
  return SymplecticSpace<S>(gram, Subspace<S>::span(2 * m, fiber));
}

struct FilterResult {
  std::vector<std::pair<std::size_t, std::size_t>> survivors;
  bool ok = false;
};

/// Weakly coisotropic pieces among L_ij over the index range lo..hi.
template <ExactField S>
std::vector<std::pair<std::size_t, std::size_t>> weakly_coisotropic_lattice(const KeyLemmaInstance<S>& inst,
                                                                            std::size_t lo, std::size_t hi) {
  const SymplecticSpace<S> space = keylemma_space<S>(inst.n());
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  std::vector<Subspace<S>> pieces;
  for (std::size_t i = lo; i <= hi; ++i)
    for (std::size_t j = lo; j <= hi; ++j) {
      idx.emplace_back(i, j);
      pieces.push_back(inst.lattice_Lij(i, j));
    }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto kept = filter_weakly_coisotropic_pieces(space, pieces);
  std::size_t k = 0;
  for (std::size_t t = 0; t < pieces.size() && k < kept.size(); ++t)
    if (pieces[t] == kept[k]) {
      out.push_back(idx[t]);
      ++k;
    }
  return out;
}

/// Filters the pieces L_ij, 1 <= i, j <= n-1, of Q_A x Q_A; passes iff the
/// survivors are exactly the diagonal pieces.
template <ExactField S>
FilterResult verify_Lii_filter(const KeyLemmaInstance<S>& inst) {
  FilterResult r;
  if (inst.n() < 2) {
    r.ok = true;
    return r;
  }
  r.survivors = weakly_coisotropic_lattice(inst, 1, inst.n() - 1);
  std::vector<std::pair<std::size_t, std::size_t>> expected;
  for (std::size_t i = 1; i < inst.n(); ++i) expected.emplace_back(i, i);
  r.ok = r.survivors == expected;
  return r;
}

}  // namespace coiso
