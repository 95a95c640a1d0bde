#include <gtest/gtest.h>

#include "coiso/sympair.hpp"

using namespace coiso;

namespace {

Matrix<Q> E() { return Matrix<Q>{{0, 1}, {0, 0}}; }
Matrix<Q> H() { return Matrix<Q>{{1, 0}, {0, -1}}; }
Matrix<Q> F() { return Matrix<Q>{{0, 0}, {1, 0}}; }
Matrix<Q> pair2(const Matrix<Q>& a, const Matrix<Q>& b) { return block_diagonal<Q>({a, b}); }

Subspace<Q> coords_span(const SymmetricPair& p, std::initializer_list<Matrix<Q>> xs) {
  std::vector<Vector<Q>> vs;
  for (const auto& x : xs) vs.push_back(p.g().coords(x));
  return Subspace<Q>::span(p.g().dim(), vs);
}

}  // namespace

TEST(Catalog, Dimensions) {
  struct Case {
    std::string family;
    std::size_t size, dim_g, dim_h;
  };
  // dim h: sl_n; so_m; s(gl_m + gl_m); gl_m; so_{m+k} + so_m
  const std::vector<Case> cases{
      {"diag-sl", 2, 6, 3},  {"diag-sl", 3, 16, 8},  {"sl-so", 2, 3, 1},    {"sl-so", 3, 8, 3},
      {"sl-so", 4, 15, 6},   {"sl-slsl", 1, 3, 1},   {"sl-slsl", 2, 15, 7}, {"sp-gl", 1, 3, 1},
      {"sp-gl", 2, 10, 4},   {"so-so-k0", 2, 6, 2},  {"so-so-k1", 1, 3, 1}, {"so-so-k1", 2, 10, 4},
      {"so-so-k2", 1, 6, 3}, {"so-so-k2", 2, 15, 7},
  };
  for (const auto& c : cases) {
    const SymmetricPair p = catalog(c.family, c.size);
    EXPECT_EQ(p.g().dim(), c.dim_g) << p.name();
    EXPECT_EQ(p.h().dim(), c.dim_h) << p.name();
    EXPECT_EQ(p.gsigma().dim(), c.dim_g - c.dim_h) << p.name();
  }
}

TEST(Catalog, RejectsUnsupported) {
  EXPECT_THROW(catalog("nope", 2), Unsupported);
  EXPECT_THROW(catalog("diag-sl", 9), Unsupported);
  EXPECT_THROW(catalog("so-so-k0", 1), Unsupported);
}

TEST(Catalog, DiagSl2EigenspaceShape) {
  const SymmetricPair p = catalog("diag-sl", 2);
  EXPECT_EQ(p.gsigma(), coords_span(p, {pair2(E(), -E()), pair2(H(), -H()), pair2(F(), -F())}));
  EXPECT_EQ(p.h(), coords_span(p, {pair2(E(), E()), pair2(H(), H()), pair2(F(), F())}));
}

TEST(Catalog, SlSo2SplitForm) {
  const SymmetricPair p = catalog("sl-so", 2);
  EXPECT_EQ(p.gsigma(), coords_span(p, {E(), F()}));
  EXPECT_EQ(p.h(), coords_span(p, {H()}));
  // with the definite form so_2 = {[[0,b],[-b,0]]}, g^sigma = {[[a,b],[b,-a]]}
  // whose nilpotents satisfy a^2 + b^2 = 0: only zero over Q
  const MatrixLieAlgebra sl2 = detail::special_linear(2);
  const SymmetricPair definite =
      pair_from_map("sl-so-definite", sl2, [](const Matrix<Q>& a) { return -a.transpose(); });
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      const Matrix<Q> x{{a, b}, {b, -a}};
      ASSERT_TRUE(definite.in_gsigma(x));
      EXPECT_EQ(is_nilpotent(x), a == 0 && b == 0);
    }
}

TEST(Validation, NamesFailedInvariant) {
  const MatrixLieAlgebra sl2 = detail::special_linear(2);
  auto expect_violation = [&](const Matrix<Q>& theta, const std::string& name) {
    try {
      SymmetricPair("bad", sl2, theta);
      ADD_FAILURE() << "expected " << name;
    } catch (const InvariantViolation& e) {
      EXPECT_EQ(e.invariant(), name);
    }
  };
  expect_violation(Matrix<Q>::identity(3) * Q(2), "theta_involution");
  // some transposition of two basis vectors is an involution but not an automorphism
  bool found = false;
  for (std::size_t i = 0; i < 3 && !found; ++i)
    for (std::size_t j = i + 1; j < 3 && !found; ++j) {
      Matrix<Q> s = Matrix<Q>::identity(3);
      s(i, i) = s(j, j) = 0;
      s(i, j) = s(j, i) = 1;
      try {
        SymmetricPair("bad", sl2, s);
      } catch (const InvariantViolation& e) {
        EXPECT_EQ(e.invariant(), "theta_automorphism");
        found = true;
      }
    }
  EXPECT_TRUE(found);
  expect_violation(Matrix<Q>::identity(2), "theta_shape");
  // E and F without H do not close under the bracket
  EXPECT_THROW(SymmetricPair("open", MatrixLieAlgebra(2, {E(), F()}), Matrix<Q>::identity(2)), InvariantViolation);
  try {
    MatrixLieAlgebra(2, {E(), E() * Q(2)});
    FAIL();
  } catch (const InvariantViolation& e) {
    EXPECT_EQ(e.invariant(), "basis_independent");
  }
  // strictly upper triangular 3x3: closed, theta = 1, trace form zero
  Matrix<Q> e12(3, 3), e13(3, 3), e23(3, 3);
  e12(0, 1) = e13(0, 2) = e23(1, 2) = 1;
  try {
    SymmetricPair("nil", MatrixLieAlgebra(3, {e12, e13, e23}), Matrix<Q>::identity(3));
    FAIL();
  } catch (const InvariantViolation& e) {
    EXPECT_EQ(e.invariant(), "trace_form_nondegenerate");
  }
}

TEST(Centralizer, Examples) {
  const SymmetricPair d2 = catalog("diag-sl", 2);
  EXPECT_EQ(centralizer_in_gsigma(d2, Matrix<Q>(4, 4)), d2.gsigma());
  EXPECT_EQ(centralizer_in_gsigma(d2, pair2(E(), -E())), coords_span(d2, {pair2(E(), -E())}));
  const SymmetricPair s2 = catalog("sl-so", 2);
  EXPECT_EQ(centralizer_in_gsigma(s2, E()), coords_span(s2, {E()}));
}

TEST(Triple, DiagSl2) {
  const SymmetricPair p = catalog("diag-sl", 2);
  const GradedTriple t = graded_sl2_triple(p, pair2(E(), -E()));
  EXPECT_EQ(t.h, pair2(H(), H()));
  EXPECT_EQ(t.f, pair2(F(), -F()));
  EXPECT_THROW(graded_sl2_triple(p, Matrix<Q>(4, 4)), NoGradedTriple);
  EXPECT_THROW(graded_sl2_triple(p, pair2(E(), E())), NoGradedTriple);
}

TEST(Triple, SlSo2) {
  const SymmetricPair p = catalog("sl-so", 2);
  const GradedTriple t = graded_sl2_triple(p, E());
  EXPECT_EQ(t.h, H());
  EXPECT_EQ(t.f, F());
}

TEST(AdjointModule, Examples) {
  const SymmetricPair d2 = catalog("diag-sl", 2);
  const auto m = adjoint_graded_module(d2, graded_sl2_triple(d2, pair2(E(), -E())));
  EXPECT_EQ(decompose(m), (GradedDecomposition{{2, 1}, {2, -1}}));
  EXPECT_EQ(defect_of_nilpotent(d2, pair2(E(), -E())), -1);
  EXPECT_EQ(sakellaridis_margin(d2, pair2(E(), -E())), 1);
  const SymmetricPair s2 = catalog("sl-so", 2);
  EXPECT_EQ(decompose(adjoint_graded_module(s2, graded_sl2_triple(s2, E()))), (GradedDecomposition{{2, -1}}));
  EXPECT_EQ(defect_of_nilpotent(s2, E()), -2);
  EXPECT_EQ(sakellaridis_margin(s2, E()), 2);
}

TEST(Representatives, Lists) {
  const SymmetricPair d2 = catalog("diag-sl", 2);
  const auto r2 = nilpotent_representatives(d2, "diag-sl", 2);
  ASSERT_EQ(r2.size(), 2u);
  EXPECT_EQ(r2[0].x, pair2(E(), -E()));
  EXPECT_TRUE(r2[1].x.is_zero());
  EXPECT_EQ(nilpotent_representatives(catalog("diag-sl", 3), "diag-sl", 3).size(), 3u);
  const SymmetricPair s2 = catalog("sl-so", 2);
  const auto q2 = nilpotent_representatives(s2, "sl-so", 2);
  ASSERT_EQ(q2.size(), 2u);
  EXPECT_EQ(q2[0].x, E());
  EXPECT_TRUE(q2[1].x.is_zero());
  EXPECT_THROW(nilpotent_representatives(catalog("sp-gl", 2), "sp-gl", 2), Unsupported);
}

TEST(Representatives, SlSoCoverEveryJordanType) {
  for (std::size_t m = 2; m <= 4; ++m) {
    const SymmetricPair p = catalog("sl-so", m);
    const auto reps = nilpotent_representatives(p, "sl-so", m);
    const auto parts = partitions(m);
    ASSERT_EQ(reps.size(), parts.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      EXPECT_EQ(jordan_type(reps[i].x), parts[i]);
      EXPECT_TRUE(p.in_gsigma(reps[i].x));
    }
  }
}

TEST(Distinguished, Examples) {
  const SymmetricPair d3 = catalog("diag-sl", 3);
  const Matrix<Q> reg = nilpotent_of_type({3});
  const Matrix<Q> sub = nilpotent_of_type({2, 1});
  EXPECT_TRUE(is_distinguished(d3, block_diagonal<Q>({reg, -reg})));
  EXPECT_FALSE(is_distinguished(d3, block_diagonal<Q>({sub, -sub})));
  EXPECT_FALSE(is_distinguished(d3, Matrix<Q>(6, 6)));
}

TEST(Distinguished, GroupCaseIsExactlyRegular) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const SymmetricPair p = catalog("diag-sl", n);
    for (const auto& rep : nilpotent_representatives(p, "diag-sl", n))
      EXPECT_EQ(is_distinguished(p, rep.x), rep.label == std::to_string(n)) << p.name() << " " << rep.label;
  }
}

// Hand-derived values for regular nilpotents. In the group case the adjoint
// module is sum_{k=1}^{n-1} (V_{2k}^+ + V_{2k}^-), so the defect is -(n-1) and
// the margin n-1. For (sl_m, so_m) every highest-weight vector x^k is odd, so
// the module is sum_{k=1}^{m-1} V_{2k}^-, defect -(m-1)(m+2)/2.
TEST(Defect, RegularClosedForms) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const SymmetricPair p = catalog("diag-sl", n);
    const Matrix<Q> j = nilpotent_of_type({n});
    const Matrix<Q> x = block_diagonal<Q>({j, -j});
    const long expected = -static_cast<long>(n - 1);
    EXPECT_EQ(defect_of_nilpotent(p, x), expected);
    EXPECT_EQ(sakellaridis_margin(p, x), -expected);
  }
  for (std::size_t m = 2; m <= 4; ++m) {
    const SymmetricPair p = catalog("sl-so", m);
    const auto reps = nilpotent_representatives(p, "sl-so", m);
    const long expected = -static_cast<long>((m - 1) * (m + 2) / 2);
    EXPECT_EQ(defect_of_nilpotent(p, reps.front().x), expected);
    EXPECT_EQ(sakellaridis_margin(p, reps.front().x), -expected);
  }
}

TEST(Defect, TripleIndependence) {
  for (const auto& [family, size] : std::vector<std::pair<std::string, std::size_t>>{{"diag-sl", 3}, {"sl-so", 4}}) {
    const SymmetricPair p = catalog(family, size);
    for (const auto& rep : nilpotent_representatives(p, family, size)) {
      if (rep.x.is_zero()) continue;
      const auto triples = graded_sl2_triples(p, rep.x);
      const long d0 = defect_definitional(adjoint_graded_module(p, triples.front()));
      for (const auto& t : triples) EXPECT_EQ(defect_definitional(adjoint_graded_module(p, t)), d0);
    }
  }
  // an explicitly conjugated triple: Ad(exp(ad n)) with n in h^x nilpotent
  const SymmetricPair p = catalog("diag-sl", 2);
  const Matrix<Q> g = pair2(Matrix<Q>{{1, 1}, {0, 1}}, Matrix<Q>{{1, 1}, {0, 1}});
  const Matrix<Q> gi = inverse(g);
  const GradedTriple t = graded_sl2_triple(p, pair2(E(), -E()));
  const GradedTriple c{g * t.e * gi, g * t.h * gi, g * t.f * gi};
  EXPECT_EQ(c.e, t.e);
  EXPECT_NE(c.h, t.h);
  EXPECT_EQ(defect_definitional(adjoint_graded_module(p, c)), defect_definitional(adjoint_graded_module(p, t)));
}

TEST(NegativeDefect, Examples) {
  const SymmetricPair d2 = catalog("diag-sl", 2);
  const auto r = check_negative_distinguished_defect(d2, nilpotent_representatives(d2, "diag-sl", 2));
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.findings.size(), 2u);
  EXPECT_TRUE(r.findings[0].distinguished);
  EXPECT_EQ(r.findings[0].defect, -1);
  EXPECT_FALSE(r.findings[1].distinguished);
  EXPECT_TRUE(check_negative_distinguished_defect(d2, {}).pass);
  const SymmetricPair d3 = catalog("diag-sl", 3);
  const auto r3 = check_negative_distinguished_defect(d3, nilpotent_representatives(d3, "diag-sl", 3));
  EXPECT_TRUE(r3.pass);
  EXPECT_EQ(std::count_if(r3.findings.begin(), r3.findings.end(), [](const auto& f) { return f.distinguished; }), 1);
}

TEST(NegativeDefect, NiceSweepWithCrossModuleIdentities) {
  for (const auto& [family, size] : std::vector<std::pair<std::string, std::size_t>>{
           {"diag-sl", 2}, {"diag-sl", 3}, {"sl-so", 2}, {"sl-so", 3}, {"sl-so", 4}}) {
    const SymmetricPair p = catalog(family, size);
    const auto report = check_negative_distinguished_defect(p, nilpotent_representatives(p, family, size));
    EXPECT_TRUE(report.pass) << p.name();
    for (const auto& f : report.findings) {
      if (!f.has_triple) continue;
      EXPECT_EQ(f.margin, f.delta_value) << p.name() << " " << f.label;
      EXPECT_EQ(f.margin, -f.defect) << p.name() << " " << f.label;
      EXPECT_TRUE(f.delta_identity);
      EXPECT_TRUE(f.triple_independent);
      EXPECT_EQ(dual(f.decomposition), f.decomposition);
      if (f.distinguished) {
        EXPECT_GT(f.margin, 0);
      }
    }
  }
}

TEST(Sampler, FindsValidNilpotents) {
  for (const auto& [family, size] : std::vector<std::pair<std::string, std::size_t>>{
           {"sl-slsl", 2}, {"sp-gl", 2}, {"so-so-k0", 2}, {"so-so-k1", 2}, {"so-so-k2", 1}, {"diag-sl", 3}}) {
    const SymmetricPair p = catalog(family, size);
    const auto reps = sampled_representatives(p, 1);
    EXPECT_GE(reps.size(), 2u) << p.name();
    bool any_distinguished = false;
    for (const auto& rep : reps) {
      EXPECT_TRUE(p.in_gsigma(rep.x));
      EXPECT_TRUE(is_nilpotent(rep.x));
      any_distinguished = any_distinguished || is_distinguished(p, rep.x);
    }
    EXPECT_TRUE(any_distinguished) << p.name();
    if (family == "diag-sl") {
      EXPECT_EQ(reps.size(), 3u);
    }
  }
}
