#include <gtest/gtest.h>

#include <random>

#include "coiso/linalg.hpp"

using namespace coiso;

using Q = Rational;
using F5 = Fp<5>;
using F7 = Fp<7>;
using F11 = Fp<11>;
using F13 = Fp<13>;

namespace {

Vector<Q> vq(std::initializer_list<long> xs) {
  Vector<Q> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

template <class S>
Matrix<S> random_small(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  Matrix<S> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = S(d(rng));
  return m;
}

/// Product of integer elementary matrices: unimodular, so its inverse is
/// integral too.
Matrix<Q> random_unimodular(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> coef(-2, 2);
  Matrix<Q> p = Matrix<Q>::identity(n);
  for (int k = 0; k < 6; ++k) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Matrix<Q> e = Matrix<Q>::identity(n);
    e(i, j) = coef(rng);
    p = p * e;
  }
  return p;
}

template <class S>
Matrix<S> reduce_mod(const Matrix<Q>& m) {
  Matrix<S> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = S(m(i, j).get_num().get_si());
  return out;
}

/// Brute force over all of F_p^k.
template <class S>
bool all_nilpotent_exhaustive(const std::vector<Matrix<S>>& basis) {
  const long p = field_traits<S>::characteristic;
  const std::size_t n = basis.front().rows();
  std::vector<long> c(basis.size(), 0);
  while (true) {
    Matrix<S> m(n, n);
    for (std::size_t i = 0; i < basis.size(); ++i) m += basis[i] * S(c[i]);
    if (!(matrix_power(m, n)).is_zero()) return false;
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == p) c[i++] = 0;
    if (i == c.size()) return true;
  }
}

}  // namespace

TEST(Kernel, IdentityHasZeroKernel) {
  EXPECT_EQ(kernel(Matrix<Q>::identity(2)).dim(), 0u);
}

TEST(Kernel, JordanBlockKernelIsFirstAxis) {
  const Subspace<Q> k = kernel(jordan_block<Q>(2));
  EXPECT_EQ(k, Subspace<Q>::span(2, {vq({1, 0})}));
}

TEST(Kernel, AllOnesTwoByTwo) {
  const Matrix<Q> m{{1, 1}, {1, 1}};
  const Subspace<Q> k = kernel(m);
  EXPECT_EQ(k, Subspace<Q>::span(2, {vq({1, -1})}));
  EXPECT_EQ(k.basis_vector(0), vq({1, -1}));
}

TEST(Kernel, CanonicalFormMakesEqualSpansIdentical) {
  const Subspace<Q> a = Subspace<Q>::span(3, {vq({1, 2, 3}), vq({0, 1, 1})});
  const Subspace<Q> b = Subspace<Q>::span(3, {vq({1, 3, 4}), vq({2, 5, 7}), vq({1, 1, 2})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.basis(), b.basis());
}

TEST(Kernel, RandomMatricesSatisfyInvariants) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const std::size_t r = dim(rng), c = dim(rng);
    Matrix<Q> m = random_small<Q>(rng, r, c, -2, 2);
    if (t % 3 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Q(3);
    const Subspace<Q> k = kernel(m);
    EXPECT_EQ(k.dim(), c - rank(m));
    for (const auto& v : k.basis_vectors()) {
      for (const auto& x : m * v) EXPECT_EQ(x, 0);
    }
    // canonical: re-spanning the basis reproduces it exactly
    EXPECT_EQ(Subspace<Q>::span(k.basis()).basis(), k.basis());
  }
}

TEST(SolveAffine, IdentitySystem) {
  const auto sol = solve_affine(Matrix<Q>::identity(2), vq({1, 0}));
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->particular, vq({1, 0}));
  EXPECT_EQ(sol->homogeneous.dim(), 0u);
}

TEST(SolveAffine, ZeroSystemGivesFullSpace) {
  const auto sol = solve_affine(Matrix<Q>(2, 2), vq({0, 0}));
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->particular, vq({0, 0}));
  EXPECT_EQ(sol->homogeneous, Subspace<Q>::full(2));
}

TEST(SolveAffine, SingleEquation) {
  const auto sol = solve_affine(Matrix<Q>{{1, 1}}, vq({2}));
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->particular, vq({2, 0}));
  EXPECT_EQ(sol->homogeneous, Subspace<Q>::span(2, {vq({1, -1})}));
}

TEST(SolveAffine, InconsistentReturnsNothing) {
  EXPECT_FALSE(solve_affine(Matrix<Q>{{1, 1}, {1, 1}}, vq({1, 2})));
  EXPECT_FALSE(solve_affine(Matrix<Q>(2, 2), vq({0, 1})));
  EXPECT_THROW(solve_affine(Matrix<Q>(2, 2), vq({0})), DimensionMismatch);
}

TEST(SolveAffine, ReturnedSolutionsAreExact) {
  std::mt19937_64 rng(5);
  int solved = 0;
  for (int t = 0; t < 200; ++t) {
    const Matrix<Q> m = random_small<Q>(rng, 3 + t % 3, 4, -3, 3);
    Vector<Q> b(m.rows());
    std::uniform_int_distribution<long> d(-4, 4);
    for (auto& x : b) x = d(rng);
    if (t % 2 == 0) b = m * Vector<Q>{Q(1), Q(-2), Q(0), Q(3)};
    if (auto sol = solve_affine(m, b)) {
      ++solved;
      EXPECT_EQ(m * sol->particular, b);
      EXPECT_EQ(sol->homogeneous, kernel(m));
    }
  }
  EXPECT_GE(solved, 100);
}

TEST(Subspace, IntersectionSumAndPreimage) {
  const Subspace<Q> xy = Subspace<Q>::span(3, {vq({1, 0, 0}), vq({0, 1, 0})});
  const Subspace<Q> yz = Subspace<Q>::span(3, {vq({0, 1, 0}), vq({0, 0, 1})});
  EXPECT_EQ(intersection(xy, yz), Subspace<Q>::span(3, {vq({0, 1, 0})}));
  EXPECT_EQ(sum(xy, yz), Subspace<Q>::full(3));
  EXPECT_TRUE(xy.contains(vq({2, -1, 0})));
  EXPECT_FALSE(xy.contains(vq({0, 0, 1})));
  // J maps e2 -> e1, e3 -> e2: preimage of span(e1) is span(e1, e2)
  const Subspace<Q> e1 = Subspace<Q>::span(3, {vq({1, 0, 0})});
  EXPECT_EQ(preimage(jordan_block<Q>(3), e1), xy);
  EXPECT_EQ(annihilator(xy), Subspace<Q>::span(3, {vq({0, 0, 1})}));
}

TEST(Nilpotent, Examples) {
  EXPECT_TRUE(is_nilpotent(jordan_block<Q>(2)));
  EXPECT_FALSE(is_nilpotent(Matrix<Q>::identity(2)));
  const Matrix<Q> upper{{0, 1, 1}, {0, 0, 1}, {0, 0, 0}};
  EXPECT_TRUE(is_nilpotent(upper));
  EXPECT_TRUE(is_nilpotent(jordan_block<F5>(4)));
  EXPECT_THROW(is_nilpotent(Matrix<Q>(2, 3)), DimensionMismatch);
}

TEST(Nilpotent, AgreesWithCharacteristicPolynomial) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + t % 5;
    Matrix<Q> m = random_small<Q>(rng, n, n, -2, 2);
    if (t % 2 == 0) {
      // strictly upper triangular conjugated by a unimodular matrix
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) m(i, j) = 0;
      const Matrix<Q> p = random_unimodular(rng, n);
      m = p * m * inverse(p);
    }
    Polynomial1<Q> xn(n + 1, Q(0));
    xn[n] = 1;
    EXPECT_EQ(is_nilpotent(m), characteristic_polynomial(m) == xn) << m.to_string();
  }
}

TEST(CharacteristicPolynomial, KnownValues) {
  // [[0,1],[-1,0]] -> x^2 + 1
  EXPECT_EQ(characteristic_polynomial(Matrix<Q>{{0, 1}, {-1, 0}}), (Polynomial1<Q>{1, 0, 1}));
  // companion matrix of x^3 - 2x + 5
  const Matrix<Q> comp{{0, 0, -5}, {1, 0, 2}, {0, 1, 0}};
  EXPECT_EQ(characteristic_polynomial(comp), (Polynomial1<Q>{5, -2, 0, 1}));
  // first column zero below the diagonal forces the row/column swap path
  const Matrix<Q> swap{{1, 2, 3}, {0, 4, 5}, {6, 7, 8}};
  // det M = -15, principal 2x2 minors sum to -9
  EXPECT_EQ(characteristic_polynomial(swap), (Polynomial1<Q>{15, -9, -13, 1}));
}

TEST(Semisimple, Examples) {
  EXPECT_FALSE(is_semisimple(jordan_block<Q>(2)));
  EXPECT_TRUE(is_semisimple(Matrix<Q>{{1, 0}, {0, 2}}));
  EXPECT_TRUE(is_semisimple(Matrix<Q>{{0, 1}, {-1, 0}}));
  EXPECT_TRUE(is_semisimple(Matrix<Q>(3, 3)));
  // Jordan block with eigenvalue 2
  EXPECT_FALSE(is_semisimple(Matrix<Q>{{2, 1}, {0, 2}}));
  EXPECT_THROW(is_semisimple(jordan_block<F5>(2)), Unsupported);
  EXPECT_EQ(minimal_polynomial(Matrix<Q>{{0, 1}, {-1, 0}}), (Polynomial1<Q>{1, 0, 1}));
}

TEST(AllNilpotent, Examples) {
  const Matrix<Q> j2 = jordan_block<Q>(2);
  EXPECT_TRUE(subspace_all_nilpotent(std::vector<Matrix<Q>>{j2}));
  EXPECT_FALSE(subspace_all_nilpotent(std::vector<Matrix<Q>>{j2, Matrix<Q>{{1, 0}, {0, -1}}}));
  std::vector<Matrix<Q>> upper;
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    Matrix<Q> e(3, 3);
    e(i, j) = 1;
    upper.push_back(e);
  }
  EXPECT_TRUE(subspace_all_nilpotent(upper));
  EXPECT_TRUE(subspace_all_nilpotent(std::vector<Matrix<Q>>{}));
}

TEST(AllNilpotent, SpanOfNilpotentsNeedNotBeNilpotent) {
  // E12 and E21 are nilpotent but E12 + E21 is not
  EXPECT_FALSE(subspace_all_nilpotent(std::vector<Matrix<Q>>{Matrix<Q>{{0, 1}, {0, 0}}, Matrix<Q>{{0, 0}, {1, 0}}}));
}

// Spans of dimension <= 2 in 3x3 matrices: the grid certificate over Q must
// agree with exhaustive enumeration over F_p for p > 3. A polynomial of
// degree <= 3 with integer coefficients vanishes on all of F_p^k iff p divides
// every coefficient, so "nilpotent over all of F_7, F_11 and F_13" is
// equivalent to "nilpotent over Q" for these small-entry inputs.
TEST(AllNilpotent, AgreesWithFiniteFieldEnumeration) {
  std::mt19937_64 rng(2024);
  int positives = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = 1 + t % 2;
    std::vector<Matrix<Q>> basis;
    const Matrix<Q> p = random_unimodular(rng, 3);
    const Matrix<Q> pinv = inverse(p);
    for (std::size_t i = 0; i < k; ++i) {
      Matrix<Q> m = random_small<Q>(rng, 3, 3, -1, 1);
      if (t % 3 != 0) {
        for (std::size_t r = 0; r < 3; ++r)
          for (std::size_t c = 0; c <= r; ++c) m(r, c) = 0;
        m = p * m * pinv;
      }
      basis.push_back(m);
    }
    const bool over_q = subspace_all_nilpotent(basis);
    auto mod = [&](auto tag) {
      using S = decltype(tag);
      std::vector<Matrix<S>> b;
      for (const auto& m : basis) b.push_back(reduce_mod<S>(m));
      return all_nilpotent_exhaustive(b);
    };
    const bool over_fp = mod(F7{}) && mod(F11{}) && mod(F13{});
    EXPECT_EQ(over_q, over_fp) << "trial " << t;
    positives += over_q;
  }
  EXPECT_GT(positives, 50);
}

TEST(AllNilpotent, FiniteFieldBackendSmallPrimeUsesFullEnumeration) {
  using F2 = Fp<2>;
  // over F_2 with n = 2 >= p the box enumeration is used
  std::vector<Matrix<F2>> basis{Matrix<F2>{{0, 1}, {0, 0}}, Matrix<F2>{{0, 0}, {1, 0}}};
  EXPECT_FALSE(subspace_all_nilpotent(basis));
  EXPECT_TRUE(subspace_all_nilpotent(std::vector<Matrix<F2>>{Matrix<F2>{{1, 1}, {1, 1}}}));
}

TEST(FiniteField, ArithmeticAndPointEnumeration) {
  EXPECT_EQ(F7(3) * F7(5), F7(1));
  EXPECT_EQ(F7(3).inverse(), F7(5));
  EXPECT_EQ(F7(-1), F7(6));
  EXPECT_THROW(F7(0).inverse(), Error);
  const Subspace<F5> plane = Subspace<F5>::span(3, {Vector<F5>{1, 0, 2}, Vector<F5>{0, 1, 1}});
  std::size_t count = 0;
  for_each_point(plane, [&](const Vector<F5>& v) {
    EXPECT_TRUE(plane.contains(v));
    ++count;
    return true;
  });
  EXPECT_EQ(count, 25u);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(field_traits<Q>::parse("6/4"), Q(3, 2));
  EXPECT_EQ(field_traits<Q>::to_string(Q(-3, 2)), "-3/2");
  EXPECT_EQ(field_traits<Q>::to_string(Q(4)), "4");
  EXPECT_THROW(field_traits<Q>::parse("1/0"), Error);
  EXPECT_THROW(field_traits<Q>::parse("abc"), Error);
}
