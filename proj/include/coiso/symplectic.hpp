#pragma once

// Symplectic vector spaces with a fixed Lagrangian, and the coisotropic /
// weakly coisotropic tests for linear subspaces and for tangent spaces of
// sampled polynomial varieties.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "coiso/errors.hpp"
#include "coiso/linalg.hpp"
#include "coiso/polynomial.hpp"

namespace coiso {

/// omega(u, v) = u^T * gram * v. The Gram matrix is antisymmetric and
/// nondegenerate, and `lagrangian` is isotropic of half dimension.
template <ExactField S>
class SymplecticSpace {
 public:
  SymplecticSpace(Matrix<S> gram, Subspace<S> lagrangian)
      : gram_(std::move(gram)), lagrangian_(std::move(lagrangian)) {
    if (!gram_.is_square() || gram_.rows() % 2 != 0)
      throw InvariantViolation("even_dimension", "Gram matrix must be square of even size");
    if (gram_.transpose() != -gram_)
      throw InvariantViolation("antisymmetric", "Gram matrix is not antisymmetric");
    if (rank(gram_) != gram_.rows())
      throw InvariantViolation("nondegenerate", "Gram matrix is singular");
    if (lagrangian_.ambient_dim() != gram_.rows() || lagrangian_.dim() * 2 != gram_.rows())
      throw InvariantViolation("lagrangian", "Lagrangian must have half the dimension");
    const Matrix<S>& l = lagrangian_.basis();
    if (!(l.transpose() * gram_ * l).is_zero())
      throw InvariantViolation("lagrangian", "form does not vanish on the Lagrangian");
  }

  /// F^{2m} with omega(e_i, e_{m+i}) = 1 and L = span(e_{m+1}, ..., e_{2m}).
  static SymplecticSpace standard(std::size_t m) {
    Matrix<S> gram(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      gram(i, m + i) = S(1);
      gram(m + i, i) = S(-1);
    }
    std::vector<Vector<S>> l;
    for (std::size_t i = 0; i < m; ++i) {
      Vector<S> v(2 * m, S(0));
      v[m + i] = S(1);
      l.push_back(v);
    }
    return SymplecticSpace(gram, Subspace<S>::span(2 * m, l));
  }

  std::size_t dim() const { return gram_.rows(); }
  std::size_t half_dim() const { return gram_.rows() / 2; }
  const Matrix<S>& gram() const { return gram_; }
  const Subspace<S>& lagrangian() const { return lagrangian_; }

  S omega(const Vector<S>& u, const Vector<S>& v) const { return dot(u, gram_ * v); }

 private:
  Matrix<S> gram_;
  Subspace<S> lagrangian_;
};

template <ExactField S>
void require_in_space(const SymplecticSpace<S>& space, const Subspace<S>& z) {
  if (z.ambient_dim() != space.dim())
    throw DimensionMismatch("subspace of dimension-" + std::to_string(z.ambient_dim()) +
                            " space used in a dimension-" + std::to_string(space.dim()) +
                            " symplectic space");
}

/// Z^perp = {v : omega(v, z) = 0 for all z in Z}.
template <ExactField S>
Subspace<S> symplectic_complement(const SymplecticSpace<S>& space, const Subspace<S>& z) {
  require_in_space(space, z);
  if (z.dim() == 0) return Subspace<S>::full(space.dim());
  return kernel(z.basis().transpose() * space.gram());
}

template <ExactField S>
bool is_coisotropic_linear(const SymplecticSpace<S>& space, const Subspace<S>& z) {
  return z.contains(symplectic_complement(space, z));
}

/// p(Z^perp) in p(Z) for the projection p : V -> V/L, i.e. Z^perp in Z + L.
template <ExactField S>
bool is_weakly_coisotropic_linear(const SymplecticSpace<S>& space, const Subspace<S>& z) {
  return sum(z, space.lagrangian()).contains(symplectic_complement(space, z));
}

/// The second form of the condition: p(Z)^perp in Z cap L, where p(Z)^perp
/// is taken inside L through the pairing L x V/L -> F induced by omega.
template <ExactField S>
bool is_weakly_coisotropic_dual_form(const SymplecticSpace<S>& space, const Subspace<S>& z) {
  require_in_space(space, z);
  const Matrix<S>& l = space.lagrangian().basis();
  // coefficient vectors c with omega(L c, z) = 0 for every basis vector z
  const Subspace<S> coeffs = z.dim() == 0 ? Subspace<S>::full(l.cols())
                                          : kernel(z.basis().transpose() * space.gram().transpose() * l);
  const Subspace<S> pz_perp = image(l, coeffs);
  return intersection(z, space.lagrangian()).contains(pz_perp);
}

/// Subvariety given by polynomial equations together with exact points on it.
template <ExactField S>
class PolyVarietySample {
 public:
  PolyVarietySample(std::vector<MultiPolynomial<S>> polynomials, std::vector<Vector<S>> points,
                    std::size_t expected_codim, std::size_t ambient)
      : polys_(std::move(polynomials)), points_(std::move(points)), codim_(expected_codim),
        ambient_(ambient) {
    for (const auto& f : polys_)
      if (f.num_vars() != ambient_) throw DimensionMismatch("polynomial in wrong number of variables");
    for (const auto& x : points_) require_on_variety(x);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t expected_codim() const { return codim_; }
  const std::vector<MultiPolynomial<S>>& polynomials() const { return polys_; }
  const std::vector<Vector<S>>& points() const { return points_; }

  void require_on_variety(const Vector<S>& x) const {
    if (x.size() != ambient_) throw DimensionMismatch("point has wrong length");
    for (const auto& f : polys_)
      if (!is_zero(f.evaluate(x)))
        throw InvariantViolation("point_on_variety", "point " + to_string(x) + " is not on the variety");
  }

 private:
  std::vector<MultiPolynomial<S>> polys_;
  std::vector<Vector<S>> points_;
  std::size_t codim_;
  std::size_t ambient_;
};

/// Kernel of the Jacobian at a point whose Jacobian rank certifies smoothness.
template <ExactField S>
Subspace<S> tangent_space(const PolyVarietySample<S>& sample, const Vector<S>& point) {
  sample.require_on_variety(point);
  if (sample.polynomials().empty()) {
    if (sample.expected_codim() != 0) throw SingularPoint("no equations but positive codimension");
    return Subspace<S>::full(sample.ambient_dim());
  }
  const Matrix<S> j = jacobian(sample.polynomials(), point);
  const std::size_t r = rank(j);
  if (r < sample.expected_codim())
    throw SingularPoint("Jacobian rank " + std::to_string(r) + " below codimension " +
                        std::to_string(sample.expected_codim()) + " at " + to_string(point));
  if (r > sample.expected_codim())
    throw InvariantViolation("expected_codim", "Jacobian rank exceeds the stated codimension");
  return kernel(j);
}

template <ExactField S>
bool is_weakly_coisotropic_at(const SymplecticSpace<S>& space, const PolyVarietySample<S>& sample,
                              const Vector<S>& point) {
  return is_weakly_coisotropic_linear(space, tangent_space(sample, point));
}

/// The pieces passing the linear weakly-coisotropic test, in input order.
template <ExactField S>
std::vector<Subspace<S>> filter_weakly_coisotropic_pieces(const SymplecticSpace<S>& space,
                                                          const std::vector<Subspace<S>>& pieces) {
  std::vector<Subspace<S>> out;
  for (const auto& z : pieces)
    if (is_weakly_coisotropic_linear(space, z)) out.push_back(z);
  return out;
}

/// Span of k random vectors with entries in [-2, 2]; may have dimension < k.
template <ExactField S, class Rng>
Subspace<S> random_subspace(Rng& rng, std::size_t ambient, std::size_t k) {
  std::uniform_int_distribution<long> d(-2, 2);
  std::vector<Vector<S>> vs;
  for (std::size_t i = 0; i < k; ++i) {
    Vector<S> v(ambient, S(0));
    for (auto& x : v) x = S(d(rng));
    vs.push_back(std::move(v));
  }
  return Subspace<S>::span(ambient, vs);
}

/// Random subspace for property sweeps. Plain random spans are almost never
/// coisotropic, so a third of the draws are U + U^perp (always coisotropic)
/// and a third are U + L (always weakly coisotropic).
template <ExactField S, class Rng>
Subspace<S> random_test_subspace(Rng& rng, const SymplecticSpace<S>& space) {
  std::uniform_int_distribution<std::size_t> kind(0, 2), size(0, space.dim());
  const Subspace<S> u = random_subspace<S>(rng, space.dim(), size(rng));
  switch (kind(rng)) {
    case 0: return u;
    case 1: return sum(u, symplectic_complement(space, u));
    default: return sum(u, space.lagrangian());
  }
}

}  // namespace coiso
