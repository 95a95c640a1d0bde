#pragma once

// Symmetric pairs (g, h, theta) realized as matrix Lie algebras over Q,
// graded sl2 triples through nilpotent elements of g^sigma, and the defect
// and margin computations built on them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "coiso/errors.hpp"
#include "coiso/graded_sl2.hpp"
#include "coiso/lie.hpp"

namespace coiso {

class SymmetricPair {
 public:
  /// theta is the matrix of the involution in the basis of g: column j holds
  /// the coordinates of theta(b_j).
  SymmetricPair(std::string name, MatrixLieAlgebra g, Matrix<Q> theta)
      : name_(std::move(name)), g_(std::move(g)), theta_(std::move(theta)) {
    const std::size_t d = g_.dim();
    if (theta_.rows() != d || theta_.cols() != d)
      throw InvariantViolation("theta_shape", "theta must be " + std::to_string(d) + " x " + std::to_string(d));
    std::vector<Vector<Q>> brackets(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        brackets[i * d + j] = g_.coords(commutator(g_.basis()[i], g_.basis()[j]), "bracket_closure");
    const Matrix<Q> id = Matrix<Q>::identity(d);
    if (theta_ * theta_ != id) throw InvariantViolation("theta_involution", "theta^2 != 1");
    std::vector<Matrix<Q>> images;
    for (std::size_t j = 0; j < d; ++j) images.push_back(g_.element(theta_.column(j)));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (theta_ * brackets[i * d + j] != g_.coords(commutator(images[i], images[j])))
          throw InvariantViolation("theta_automorphism", "theta[b" + std::to_string(i) + ",b" + std::to_string(j) +
                                                             "] != [theta b" + std::to_string(i) + ",theta b" +
                                                             std::to_string(j) + "]");
    h_ = kernel(theta_ - id);
    gsigma_ = kernel(theta_ + id);
    if (h_.dim() + gsigma_.dim() != d)
      throw InvariantViolation("grading_brackets", "g is not the sum of the theta eigenspaces");
    check_grading(h_, h_, h_, "[h,h] not in h");
    check_grading(h_, gsigma_, gsigma_, "[h,g^sigma] not in g^sigma");
    check_grading(gsigma_, gsigma_, h_, "[g^sigma,g^sigma] not in h");
    b_ = g_.trace_form();
    for (std::size_t k = 0; k < d; ++k) {
      const Matrix<Q> ad = g_.ad(g_.basis()[k]);
      if (!(ad.transpose() * b_ + b_ * ad).is_zero())
        throw InvariantViolation("trace_form_invariant", "B([x,y],z) != B(x,[y,z]) for y = b" + std::to_string(k));
    }
    if (rank(b_) != d) throw InvariantViolation("trace_form_nondegenerate", "trace form is degenerate on g");
    const Matrix<Q>& hb = h_.basis();
    const Matrix<Q>& sb = gsigma_.basis();
    if (!(hb.transpose() * b_ * sb).is_zero())
      throw InvariantViolation("h_orthogonal_gsigma", "h is not B-orthogonal to g^sigma");
    if (rank(hb.transpose() * b_ * hb) != h_.dim())
      throw InvariantViolation("trace_form_nondegenerate_h", "B restricted to h is degenerate");
    if (rank(sb.transpose() * b_ * sb) != gsigma_.dim())
      throw InvariantViolation("trace_form_nondegenerate_gsigma", "B restricted to g^sigma is degenerate");
    const Subspace<Q> gs = g_.derived_subalgebra();
    gs_sigma_ = intersection(gs, gsigma_);
  }

  const std::string& name() const { return name_; }
  const MatrixLieAlgebra& g() const { return g_; }
  const Matrix<Q>& theta() const { return theta_; }
  /// +1 and -1 eigenspaces of theta, in coordinates.
  const Subspace<Q>& h() const { return h_; }
  const Subspace<Q>& gsigma() const { return gsigma_; }
  /// (g_s)^sigma for the derived subalgebra g_s.
  const Subspace<Q>& gs_sigma() const { return gs_sigma_; }
  const Matrix<Q>& trace_form() const { return b_; }

  bool in_gsigma(const Matrix<Q>& x) const {
    const auto c = g_.coordinates(x);
    return c && gsigma_.contains(*c);
  }

  bool in_h(const Matrix<Q>& x) const {
    const auto c = g_.coordinates(x);
    return c && h_.contains(*c);
  }

 private:
  void check_grading(const Subspace<Q>& a, const Subspace<Q>& b, const Subspace<Q>& target,
                     const std::string& what) const {
    for (const auto& x : g_.elements(a))
      for (const auto& y : g_.elements(b))
        if (!target.contains(g_.coords(commutator(x, y)))) throw InvariantViolation("grading_brackets", what);
  }

  std::string name_;
  MatrixLieAlgebra g_;
  Matrix<Q> theta_;
  Subspace<Q> h_, gsigma_, gs_sigma_;
  Matrix<Q> b_;
};

/// Builds the pair from an involution given as a map on matrices.
inline SymmetricPair pair_from_map(std::string name, MatrixLieAlgebra g,
                                   const std::function<Matrix<Q>(const Matrix<Q>&)>& theta) {
  std::vector<Vector<Q>> cols;
  for (const auto& b : g.basis()) cols.push_back(g.coords(theta(b), "theta_automorphism"));
  Matrix<Q> t = Matrix<Q>::from_columns(g.dim(), cols);
  return SymmetricPair(std::move(name), std::move(g), std::move(t));
}

// ---------------------------------------------------------------- catalog

inline Matrix<Q> antidiag(std::size_t n) {
  Matrix<Q> j(n, n);
  for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = 1;
  return j;
}

inline Matrix<Q> sign_diagonal(std::size_t plus, std::size_t minus) {
  Matrix<Q> t = Matrix<Q>::identity(plus + minus);
  for (std::size_t i = plus; i < plus + minus; ++i) t(i, i) = -1;
  return t;
}

namespace detail {

inline std::function<Matrix<Q>(const Matrix<Q>&)> trace_condition() {
  return [](const Matrix<Q>& x) { return Matrix<Q>(1, 1, {x.trace()}); };
}

/// X^T F + F X = 0.
inline std::function<Matrix<Q>(const Matrix<Q>&)> preserves_form(Matrix<Q> f) {
  return [f](const Matrix<Q>& x) { return x.transpose() * f + f * x; };
}

inline MatrixLieAlgebra special_linear(std::size_t n) { return algebra_cut_by(n, {trace_condition()}); }

inline void require_size(std::size_t m, std::size_t lo, std::size_t hi, const std::string& family) {
  if (m < lo || m > hi)
    throw Unsupported("family " + family + " supports sizes " + std::to_string(lo) + ".." + std::to_string(hi));
}

}  // namespace detail

/// diag(sl_n + sl_n, sl_n): block-diagonal 2n x 2n matrices, theta swaps the blocks.
inline SymmetricPair diagonal_pair(std::size_t n) {
  detail::require_size(n, 2, 4, "diag-sl");
  const std::size_t big = 2 * n;
  auto off_blocks = [n](const Matrix<Q>& x) {
    return hstack(x.submatrix(0, n, n, n), x.submatrix(n, 0, n, n).transpose());
  };
  auto traces = [n](const Matrix<Q>& x) {
    return Matrix<Q>(1, 2, {x.submatrix(0, 0, n, n).trace(), x.submatrix(n, n, n, n).trace()});
  };
  MatrixLieAlgebra g = algebra_cut_by(big, {off_blocks, traces});
  Matrix<Q> swap(big, big);
  swap.set_block(0, n, Matrix<Q>::identity(n));
  swap.set_block(n, 0, Matrix<Q>::identity(n));
  return pair_from_map("diag-sl(" + std::to_string(n) + ")", std::move(g),
                       [swap](const Matrix<Q>& x) { return swap * x * swap; });
}

/// (sl_m, so_m) for the split form J = antidiag(1, ..., 1): theta(A) = -J A^T J.
inline SymmetricPair sl_so_pair(std::size_t m) {
  detail::require_size(m, 2, 4, "sl-so");
  const Matrix<Q> j = antidiag(m);
  return pair_from_map("sl-so(" + std::to_string(m) + ")", detail::special_linear(m),
                       [j](const Matrix<Q>& a) { return -(j * a.transpose() * j); });
}

/// (sl_2m, s(gl_m + gl_m)): theta = Ad diag(I_m, -I_m).
inline SymmetricPair sl_slsl_pair(std::size_t m) {
  detail::require_size(m, 1, 4, "sl-slsl");
  const Matrix<Q> t = sign_diagonal(m, m);
  return pair_from_map("sl-slsl(" + std::to_string(m) + ")", detail::special_linear(2 * m),
                       [t](const Matrix<Q>& x) { return t * x * t; });
}

/// (sp_2m, gl_m) for Omega = [[0, I], [-I, 0]]: theta = Ad diag(I_m, -I_m).
inline SymmetricPair sp_gl_pair(std::size_t m) {
  detail::require_size(m, 1, 4, "sp-gl");
  Matrix<Q> omega(2 * m, 2 * m);
  omega.set_block(0, m, Matrix<Q>::identity(m));
  omega.set_block(m, 0, -Matrix<Q>::identity(m));
  const Matrix<Q> t = sign_diagonal(m, m);
  return pair_from_map("sp-gl(" + std::to_string(m) + ")", algebra_cut_by(2 * m, {detail::preserves_form(omega)}),
                       [t](const Matrix<Q>& x) { return t * x * t; });
}

/// (so_{2m+k}, so_{m+k} + so_m) for Q = diag(antidiag_{m+k}, antidiag_m):
/// theta = Ad diag(I_{m+k}, -I_m).
inline SymmetricPair so_so_pair(std::size_t m, std::size_t k) {
  const std::string family = "so-so-k" + std::to_string(k);
  if (k > 2) throw Unsupported("so-so pairs need k in {0, 1, 2}");
  detail::require_size(m, 1, 4, family);
  if (m == 1 && k == 0) throw Unsupported("so_2 is abelian; use m >= 2 for so-so-k0");
  const Matrix<Q> form = block_diagonal<Q>({antidiag(m + k), antidiag(m)});
  const Matrix<Q> t = sign_diagonal(m + k, m);
  return pair_from_map(family + "(" + std::to_string(m) + ")",
                       algebra_cut_by(2 * m + k, {detail::preserves_form(form)}),
                       [t](const Matrix<Q>& x) { return t * x * t; });
}

inline const std::vector<std::string>& catalog_families() {
  static const std::vector<std::string> names{"diag-sl", "sl-so", "sl-slsl", "sp-gl", "so-so-k0", "so-so-k1",
                                              "so-so-k2"};
  return names;
}

inline SymmetricPair catalog(const std::string& family, std::size_t size) {
  if (family == "diag-sl") return diagonal_pair(size);
  if (family == "sl-so") return sl_so_pair(size);
  if (family == "sl-slsl") return sl_slsl_pair(size);
  if (family == "sp-gl") return sp_gl_pair(size);
  if (family == "so-so-k0") return so_so_pair(size, 0);
  if (family == "so-so-k1") return so_so_pair(size, 1);
  if (family == "so-so-k2") return so_so_pair(size, 2);
  throw Unsupported("unknown family '" + family + "'");
}

// ------------------------------------------------------- nilpotent elements

struct NilpotentRep {
  std::string label;
  Matrix<Q> x;
};

inline NilpotentRep make_nilpotent_rep(const SymmetricPair& p, std::string label, Matrix<Q> x) {
  if (!p.in_gsigma(x)) throw InvariantViolation("in_gsigma", label + " is not in g^sigma");
  if (!is_nilpotent(x)) throw InvariantViolation("nilpotent", label + " is not nilpotent");
  return {std::move(label), std::move(x)};
}

/// {y in g^sigma : [x, y] = 0}, in coordinates.
inline Subspace<Q> centralizer_in_gsigma(const SymmetricPair& p, const Matrix<Q>& x) {
  const Matrix<Q> ad = p.g().ad(x);
  return intersection(kernel(ad), p.gsigma());
}

inline Subspace<Q> centralizer_in_h(const SymmetricPair& p, const Matrix<Q>& x) {
  return intersection(kernel(p.g().ad(x)), p.h());
}

/// x is distinguished iff every element of ((g_s)^sigma)^x is nilpotent.
inline bool is_distinguished(const SymmetricPair& p, const Matrix<Q>& x) {
  const Subspace<Q> c = intersection(kernel(p.g().ad(x)), p.gs_sigma());
  return subspace_all_nilpotent(p.g().elements(c));
}

struct GradedTriple {
  Matrix<Q> e, h, f;
};

/// All graded triples through x obtained from the base solution and from the
/// base solution shifted by each basis vector of the free part of the first
/// linear system. The first entry is the canonical triple.
inline std::vector<GradedTriple> graded_sl2_triples(const SymmetricPair& p, const Matrix<Q>& x) {
  if (x.is_zero()) throw NoGradedTriple("x = 0 has no graded sl2 triple");
  if (!p.in_gsigma(x)) throw NoGradedTriple("x is not in g^sigma");
  const MatrixLieAlgebra& g = p.g();
  const Matrix<Q> adx = g.ad(x);
  const Matrix<Q>& s = p.gsigma().basis();
  const Vector<Q> xc = g.coords(x);
  // z = S c in g^sigma with [[x, z], x] = -ad_x^2 z = 2x; then h = [x, z] lies in h
  const auto zsol = solve_affine(adx * adx * s * Q(-1), xc * Q(2));
  if (!zsol) throw NoGradedTriple("no h in [x, g^sigma] with [h, x] = 2x");
  std::vector<Vector<Q>> zs{zsol->particular};
  for (const auto& k : zsol->homogeneous.basis_vectors()) zs.push_back(zsol->particular + k);
  std::vector<GradedTriple> out;
  for (const auto& zc : zs) {
    const Vector<Q> hc = adx * (s * zc);
    const Matrix<Q> h = g.element(hc);
    const Matrix<Q> adh = g.ad(h);
    // f = S c with [x, f] = h and [h, f] + 2f = 0
    const Matrix<Q> lhs = vstack(adx * s, (adh + Matrix<Q>::identity(g.dim()) * Q(2)) * s);
    Vector<Q> rhs = hc;
    rhs.resize(2 * g.dim(), Q(0));
    const auto fsol = solve_affine(lhs, rhs);
    if (!fsol) {
      if (out.empty()) throw NoGradedTriple("no f in g^sigma completing the triple");
      continue;
    }
    GradedTriple t{x, h, g.element(s * fsol->particular)};
    if (commutator(t.h, t.e) != t.e * Q(2) || commutator(t.h, t.f) != t.f * Q(-2) || commutator(t.e, t.f) != t.h ||
        !p.in_h(t.h) || !p.in_gsigma(t.f))
      throw NoGradedTriple("solved triple fails the bracket relations");
    out.push_back(std::move(t));
  }
  return out;
}

inline GradedTriple graded_sl2_triple(const SymmetricPair& p, const Matrix<Q>& x) {
  return graded_sl2_triples(p, x).front();
}

/// g under ad e, ad h, ad f with V_0 = h and V_1 = g^sigma.
inline GradedSl2Module adjoint_graded_module(const SymmetricPair& p, const GradedTriple& t) {
  const MatrixLieAlgebra& g = p.g();
  return GradedSl2Module(g.ad(t.e), g.ad(t.h), g.ad(t.f), p.h(), p.gsigma());
}

inline long defect_of_nilpotent(const SymmetricPair& p, const Matrix<Q>& x) {
  return defect_definitional(adjoint_graded_module(p, graded_sl2_triple(p, x)));
}

/// Sum of (lambda + 2) over adjoint summands with w (-1)^lambda = -1, minus dim g^sigma.
inline long sakellaridis_margin(const SymmetricPair& p, const Matrix<Q>& x) {
  const GradedDecomposition d = decompose(adjoint_graded_module(p, graded_sl2_triple(p, x)));
  long total = 0;
  for (const auto& [s, mult] : d.multiplicities())
    if ((s.lambda % 2 == 0 ? s.w : -s.w) == -1) total += static_cast<long>(mult) * (s.lambda + 2);
  return total - static_cast<long>(p.gsigma().dim());
}

struct RepFinding {
  std::string label;
  std::vector<std::size_t> jordan;
  bool distinguished = false;
  bool has_triple = false;
  long defect = 0;
  long margin = 0;
  long delta_value = 0;
  bool delta_identity = true;
  bool triple_independent = true;
  GradedDecomposition decomposition;
};

inline RepFinding analyze_rep(const SymmetricPair& p, const NilpotentRep& rep) {
  RepFinding r;
  r.label = rep.label;
  r.jordan = jordan_type(rep.x);
  r.distinguished = is_distinguished(p, rep.x);
  if (rep.x.is_zero()) return r;
  const auto triples = graded_sl2_triples(p, rep.x);
  r.has_triple = true;
  const GradedSl2Module m = adjoint_graded_module(p, triples.front());
  r.decomposition = decompose(m);
  r.defect = defect_definitional(m);
  r.margin = sakellaridis_margin(p, rep.x);
  r.delta_value = delta(r.decomposition);
  r.delta_identity = verify_delta_identity(r.decomposition);
  for (std::size_t i = 1; i < triples.size(); ++i)
    if (defect_definitional(adjoint_graded_module(p, triples[i])) != r.defect) r.triple_independent = false;
  return r;
}

struct NegativeDefectReport {
  std::vector<RepFinding> findings;
  bool pass = true;
};

/// Passes iff every distinguished representative has negative defect.
inline NegativeDefectReport check_negative_distinguished_defect(const SymmetricPair& p,
                                                                const std::vector<NilpotentRep>& reps) {
  NegativeDefectReport out;
  for (const auto& rep : reps) {
    RepFinding f = analyze_rep(p, rep);
    if (f.distinguished && (!f.has_triple || f.defect >= 0)) out.pass = false;
    out.findings.push_back(std::move(f));
  }
  return out;
}

// -------------------------------------------------- representative lists

namespace detail {

/// Basis change P with P^T F P = antidiag(m), where F is the block form
/// sum_i eps_i antidiag(k_i), odd blocks taking eps = +1, -1, +1, ... so the
/// anisotropic middles pair off into hyperbolic planes.
inline Matrix<Q> split_basis_for_blocks(const std::vector<std::size_t>& parts, const std::vector<int>& eps) {
  std::size_t m = 0;
  for (auto k : parts) m += k;
  std::vector<std::pair<Vector<Q>, Vector<Q>>> hyperbolic;
  std::vector<std::pair<Vector<Q>, int>> middles;
  std::size_t offset = 0;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    const std::size_t k = parts[b];
    for (std::size_t a = 0; 2 * (a + 1) <= k; ++a) {
      Vector<Q> u(m, Q(0)), w(m, Q(0));
      u[offset + a] = 1;
      w[offset + k - 1 - a] = Q(eps[b]);
      hyperbolic.emplace_back(u, w);
    }
    if (k % 2 == 1) {
      Vector<Q> c(m, Q(0));
      c[offset + k / 2] = 1;
      middles.emplace_back(c, eps[b]);
    }
    offset += k;
  }
  std::optional<Vector<Q>> anisotropic;
  for (std::size_t i = 0; i < middles.size();) {
    if (i + 1 < middles.size() && middles[i].second == 1 && middles[i + 1].second == -1) {
      const Vector<Q>& a = middles[i].first;
      const Vector<Q>& b = middles[i + 1].first;
      hyperbolic.emplace_back(a + b, (a - b) * Q("1/2"));
      i += 2;
    } else {
      if (anisotropic || middles[i].second != 1) throw Error("block form is not split");
      anisotropic = middles[i].first;
      ++i;
    }
  }
  Matrix<Q> p(m, m);
  const std::size_t half = hyperbolic.size();
  for (std::size_t j = 0; j < half; ++j) {
    for (std::size_t r = 0; r < m; ++r) {
      p(r, j) = hyperbolic[j].first[r];
      p(r, m - 1 - j) = hyperbolic[j].second[r];
    }
  }
  if (anisotropic)
    for (std::size_t r = 0; r < m; ++r) p(r, half) = (*anisotropic)[r];
  return p;
}

}  // namespace detail

/// (J_lambda, -J_lambda) for every partition lambda of n.
inline std::vector<NilpotentRep> diagonal_representatives(const SymmetricPair& p, std::size_t n) {
  std::vector<NilpotentRep> out;
  for (const auto& parts : partitions(n)) {
    const Matrix<Q> j = nilpotent_of_type(parts);
    out.push_back(make_nilpotent_rep(p, partition_label(parts), block_diagonal<Q>({j, -j})));
  }
  return out;
}

/// One J-self-adjoint nilpotent of each Jordan type for the split form
/// J = antidiag(1, ..., 1) on Q^m.
inline std::vector<NilpotentRep> sl_so_representatives(const SymmetricPair& p, std::size_t m) {
  std::vector<NilpotentRep> out;
  const Matrix<Q> j = antidiag(m);
  for (const auto& parts : partitions(m)) {
    std::vector<int> eps;
    int next = 1;
    std::vector<Matrix<Q>> forms;
    for (auto k : parts) {
      int e = 1;
      if (k % 2 == 1) {
        e = next;
        next = -next;
      }
      eps.push_back(e);
      forms.push_back(antidiag(k) * Q(e));
    }
    const Matrix<Q> f = block_diagonal(forms);
    const Matrix<Q> basis = detail::split_basis_for_blocks(parts, eps);
    if (basis.transpose() * f * basis != j) throw Error("split basis construction failed");
    const Matrix<Q> x = inverse(basis) * nilpotent_of_type(parts) * basis;
    if (jordan_type(x) != parts) throw Error("conjugated representative changed Jordan type");
    out.push_back(make_nilpotent_rep(p, partition_label(parts), x));
  }
  return out;
}

/// Nilpotent elements of g^sigma sampled from positive root-space chambers of
/// rational diagonal elements of h, plus nilpotent basis vectors of g^sigma.
/// Duplicates by (Jordan type, dim (g^sigma)^x, dim h^x) are dropped. Not a
/// complete orbit list.
inline std::vector<NilpotentRep> sampled_representatives(const SymmetricPair& p, std::uint64_t seed,
                                                         int chambers = 12, int combos = 3) {
  const MatrixLieAlgebra& g = p.g();
  const std::size_t n = g.matrix_size();
  std::mt19937_64 rng(seed);
  std::vector<Matrix<Q>> candidates;
  // diagonal elements of h
  const std::vector<Matrix<Q>> hb = g.elements(p.h());
  Matrix<Q> offdiag(n * n - n, hb.size());
  {
    std::size_t r = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        for (std::size_t c = 0; c < hb.size(); ++c) offdiag(r, c) = hb[c](a, b);
        ++r;
      }
  }
  const Subspace<Q> diag_coeffs = hb.empty() ? Subspace<Q>::zero(0) : kernel(offdiag);
  std::vector<Matrix<Q>> torus;
  for (const auto& c : diag_coeffs.basis_vectors()) {
    Matrix<Q> t(n, n);
    for (std::size_t i = 0; i < hb.size(); ++i) t += hb[i] * c[i];
    torus.push_back(t);
  }
  std::vector<Vector<Q>> gsigma_flat;
  for (const auto& s : g.elements(p.gsigma())) gsigma_flat.push_back(s.vec());
  const Subspace<Q> gsigma_mats = Subspace<Q>::span(n * n, gsigma_flat);
  std::uniform_int_distribution<long> coef(-20, 20), small(1, 3);
  for (int c = 0; c < (torus.empty() ? 0 : chambers); ++c) {
    Matrix<Q> s(n, n);
    for (const auto& t : torus) s += t * Q(coef(rng));
    std::vector<Vector<Q>> positive;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (s(a, a) > s(b, b)) {
          Vector<Q> v(n * n, Q(0));
          v[a * n + b] = 1;
          positive.push_back(v);
        }
    const Subspace<Q> nplus = intersection(Subspace<Q>::span(n * n, positive), gsigma_mats);
    if (nplus.dim() == 0) continue;
    for (const auto& v : nplus.basis_vectors()) candidates.push_back(unvec(v, n));
    for (int k = 0; k < combos; ++k) {
      Vector<Q> coeffs(nplus.dim());
      for (auto& x : coeffs) x = Q(small(rng)) * Q(k % 2 == 0 ? 1 : ((coef(rng) % 2 == 0) ? 1 : -1));
      candidates.push_back(unvec(nplus.combination(coeffs), n));
    }
  }
  for (const auto& s : g.elements(p.gsigma()))
    if (is_nilpotent(s)) candidates.push_back(s);

  std::vector<NilpotentRep> out{make_nilpotent_rep(p, "0", Matrix<Q>(n, n))};
  std::set<std::tuple<std::vector<std::size_t>, std::size_t, std::size_t>> seen;
  seen.insert({jordan_type(Matrix<Q>(n, n)), p.gsigma().dim(), p.h().dim()});
  for (auto& x : candidates) {
    if (!is_nilpotent(x)) continue;
    auto key = std::make_tuple(jordan_type(x), centralizer_in_gsigma(p, x).dim(), centralizer_in_h(p, x).dim());
    if (!seen.insert(key).second) continue;
    const std::string label = partition_label(std::get<0>(key)) + "/c" + std::to_string(std::get<1>(key)) + "/h" +
                              std::to_string(std::get<2>(key));
    out.push_back(make_nilpotent_rep(p, label, std::move(x)));
  }
  return out;
}

/// Representative lists for the diagonal and (sl, so) families.
inline std::vector<NilpotentRep> nilpotent_representatives(const SymmetricPair& p, const std::string& family,
                                                           std::size_t size) {
  if (family == "diag-sl") return diagonal_representatives(p, size);
  if (family == "sl-so") return sl_so_representatives(p, size);
  throw Unsupported("no representative list for family '" + family + "'; use sampled_representatives");
}

}  // namespace coiso
