#include <gtest/gtest.h>

#include <set>
#include <utility>

#include "qfock/qfock.hpp"
#include "support.hpp"

using namespace qfock;
using qtest::Gen;

namespace {

BivarPoly random_bivar(Gen& g, int degree) {
  BivarPoly p;
  for (int a = 0; a <= degree; ++a) {
    for (int b = 0; a + b <= degree; ++b) p.add_term(a, b, cplx(g.uniform(-1, 1), g.uniform(-1, 1)));
  }
  return p;
}

}  // namespace

TEST(ZqMonomial, LowOrders) {
  const QContext ctx(0.5);
  EXPECT_EQ(zq_monomial(0, ctx), BivarPoly::constant(1.0));
  const auto z2 = zq_monomial(2, ctx);
  const cplx v = evaluate(z2, 1.0, 1.0);
  EXPECT_NEAR(v.real(), 0.5, 1e-15);
  EXPECT_NEAR(v.imag(), 1.5, 1e-15);
  EXPECT_THROW(zq_monomial(-1, ctx), DomainError);
}

TEST(ZqMonomial, PolynomialMatchesRunningProduct) {
  const QContext ctx(0.7);
  Gen g(21);
  const auto p = zq_monomial(5, ctx);
  for (int i = 0; i < 10; ++i) {
    const double x = g.uniform(-2, 2), y = g.uniform(-2, 2);
    EXPECT_LT(std::abs(evaluate(p, x, y) - zq_value(5, x, y, ctx)), 1e-12);
  }
}

TEST(ZqConjugate, LowOrdersAndSigns) {
  const QContext ctx(0.5);
  const auto c1 = zq_conjugate_monomial(1, ctx);
  EXPECT_EQ(c1.coeff(1, 0), cplx(1.0));
  EXPECT_EQ(c1.coeff(0, 1), cplx(0.0, -1.0));
  const cplx direct = (cplx(1, -(-1.0))) * cplx(1, -0.5 * -1.0) * cplx(1, -0.25 * -1.0) * cplx(1, -0.125 * -1.0);
  EXPECT_LT(std::abs(evaluate(zq_conjugate_monomial(4, ctx), 1.0, -1.0) - direct), 1e-14);
  EXPECT_LT(std::abs(evaluate(zq_conjugate_monomial(4, ctx), 1.0, -1.0) - std::conj(zq_value(4, 1.0, -1.0, ctx))),
            1e-14);
}

TEST(ComplexDerivatives, ConstantsVanish) {
  const QContext ctx(0.5);
  EXPECT_TRUE(dz(BivarPoly::constant(2.0), ctx).is_zero());
  EXPECT_TRUE(dzbar(BivarPoly::constant(2.0), ctx).is_zero());
}

TEST(ComplexDerivatives, MonomialRule) {
  const QContext ctx(0.5);
  // x^2 y -> ([2] x y - i [1]_{1/q} x^2) / 2
  const auto d = dz(BivarPoly::monomial(2, 1), ctx);
  EXPECT_NEAR(std::abs(d.coeff(1, 1) - cplx(0.75)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(d.coeff(2, 0) - cplx(0.0, -0.5)), 0.0, 1e-15);
}

TEST(Analyticity, HoldsUpToThirty) {
  for (double q : qtest::kQs) {
    const QContext ctx(q);
    for (int n = 0; n <= 30; ++n) {
      const auto r = analyticity_residual(n, ctx);
      EXPECT_LT(r.dzbar, 1e-12) << q << " " << n;
      EXPECT_LT(r.dz, 1e-12) << q << " " << n;
    }
  }
}

TEST(Expansion, FirstFactor) {
  const QContext ctx(0.5);
  const auto z2 = zq_monomial_zbar(2, ctx);
  EXPECT_NEAR(z2.coeff(2, 0).real(), 0.75, 1e-15);
  EXPECT_NEAR(z2.coeff(1, 1).real(), 0.25, 1e-15);
  EXPECT_EQ(z2.size(), 2u);
}

TEST(Expansion, CoefficientsSumToOne) {
  for (double q : qtest::kQs) {
    for (int n = 0; n <= 15; ++n) {
      const auto coeffs = zq_expansion_coeffs(n, QContext(q));
      cplx s = 0.0;
      for (const auto& [e, c] : coeffs.terms()) s += c;
      EXPECT_NEAR(s.real(), 1.0, 1e-12);
    }
  }
}

TEST(Expansion, AgreesWithProductAtRandomPoints) {
  const QContext ctx(0.3);
  Gen g(22);
  for (int n = 0; n <= 12; ++n) {
    const auto p = zq_monomial_zbar(n + 1, ctx);
    for (int i = 0; i < 10; ++i) {
      const cplx z(g.uniform(-1.5, 1.5), g.uniform(-1.5, 1.5));
      const cplx exact = zq_value(n + 1, z, ctx);
      EXPECT_LT(std::abs(evaluate(p, z) - exact), 1e-12 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST(Domination, Examples) {
  const QContext ctx(0.5);
  EXPECT_NEAR(std::abs(zq_value(2, 0.0, 1.0, ctx)), 0.5, 1e-16);
  EXPECT_NEAR(std::abs(zq_value(7, -1.3, 0.0, ctx)), std::pow(1.3, 7), 1e-12);
  Gen g(23);
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < 1000; ++i) pts.emplace_back(g.uniform(-3, 3), g.uniform(-3, 3));
  for (int n = 0; n <= 10; ++n) EXPECT_TRUE(modulus_domination_check(n, pts, ctx).all_pass()) << n;
}

TEST(BasisConversion, RoundTrip) {
  Gen g(24);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = random_bivar(g, g.integer(0, 10));
    EXPECT_LT(max_coeff_gap(to_xy_basis(to_zbar_basis(p)), p), 1e-12);
  }
}

TEST(ComplexHermite, LowOrders) {
  // H_{1,1} = z zbar - 1
  const auto h = complex_hermite(1, 1);
  EXPECT_EQ(h.coeff(1, 1), cplx(1.0));
  EXPECT_EQ(h.coeff(0, 0), cplx(-1.0));
  EXPECT_NEAR(gaussian_inner(complex_hermite(1, 0), complex_hermite(1, 0)).real(), M_PI, 1e-14);
}

TEST(ComplexHermite, OrthogonalUnderGaussian) {
  double fact[7] = {1, 1, 2, 6, 24, 120, 720};
  for (int p = 0; p <= 6; ++p)
    for (int r = 0; r <= 6; ++r)
      for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
          const cplx v = gaussian_inner(complex_hermite(p, r), complex_hermite(m, n));
          const double want = (p == m && r == n) ? M_PI * fact[p] * fact[r] : 0.0;
          EXPECT_LT(std::abs(v - want), 1e-12 * std::max(1.0, want));
        }
}

TEST(ComplexHermite, MonomialRoundTrip) {
  for (int p = 0; p <= 6; ++p)
    for (int r = 0; p + r <= 6; ++r) {
      const auto m = ZBarBasisPoly::monomial(p, r);
      EXPECT_LT(max_coeff_gap(from_hermite_expansion(to_hermite_expansion(m)), m), 1e-10);
    }
}

TEST(MixedGram, FullRankAtDegreeFour) {
  const auto g = mixed_basis_gram(4, QContext(0.5));
  EXPECT_EQ(g.size(), 15);
  EXPECT_TRUE(g.full_rank());
  EXPECT_GT(g.min_eigenvalue, 0.0);
  EXPECT_EQ(g.labels.front(), "0,0");
  EXPECT_LT(g.hermitian_defect, 1e-12 * g.max_eigenvalue);
}

TEST(MixedGram, ApproachesClassicalGram) {
  const auto a = mixed_basis_gram(3, QContext(0.999));
  const auto b = classical_monomial_gram(3);
  ASSERT_EQ(a.size(), b.size());
  // Entries scale like pi k! h!, so compare them relative to the diagonal.
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) {
      const double scale = std::sqrt(b.matrix(i, i).real() * b.matrix(j, j).real());
      EXPECT_LT(std::abs(a.matrix(i, j) - b.matrix(i, j)) / scale, 1e-2) << a.labels[i] << " " << a.labels[j];
    }
}

TEST(MixedGram, NonsingularUpToSix) {
  for (double q : qtest::kQs) {
    for (int N = 1; N <= 6; ++N) {
      const auto g = mixed_basis_gram(N, QContext(q));
      EXPECT_GT(g.min_eigenvalue, 1e-10 * g.trace) << q << " " << N;
    }
  }
}

TEST(Elliptic, MonomialsIndependent) {
  for (int n = 0; n <= 8; ++n) {
    const auto r = elliptic_independence_check(n, 2.0);
    EXPECT_TRUE(r.independent()) << n;
    EXPECT_EQ(r.rank, n + 1);
  }
}

TEST(QGrid, SingleSeedDepthZero) {
  const auto g = qgrid_generate({{1.0, 2.0}}, 0, QContext(0.5));
  ASSERT_EQ(g.points.size(), 1u);
  EXPECT_EQ(g.points[0].x, 1.0);
  EXPECT_EQ(g.points[0].y, 2.0);
}

TEST(QGrid, HandEnumeratedDepthOne) {
  const auto g = qgrid_generate({{1.0, 1.0}}, 1, QContext(0.5));
  std::set<std::pair<double, double>> got;
  for (const auto& p : g.points) got.emplace(p.x, p.y);
  const std::set<std::pair<double, double>> want{{1, 1}, {0.5, 1}, {1, 2}, {0.5, 2}};
  EXPECT_EQ(got, want);
  EXPECT_TRUE(g.closure_holds());
}

TEST(QGrid, SharedLatticeDeduplicates) {
  const auto g = qgrid_generate({{1.0, 1.0}, {0.5, 1.0}}, 1, QContext(0.5));
  EXPECT_EQ(g.generated, 8u);
  EXPECT_EQ(g.points.size(), 6u);
}

TEST(QGrid, ReferenceFigureCounts) {
  const auto g = qgrid_generate(figure1_seeds(), 6, QContext(0.6));
  EXPECT_EQ(figure1_seeds().size(), 9u);
  EXPECT_EQ(g.per_seed(), 49u);
  EXPECT_EQ(g.generated, 441u);
  EXPECT_TRUE(g.closure_holds());
}
