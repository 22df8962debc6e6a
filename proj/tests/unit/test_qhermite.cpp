#include <gtest/gtest.h>

#include "qfock/qfock.hpp"
#include "support.hpp"

using namespace qfock;
using qtest::rel;

namespace {

double coeff_rel_gap(const RealPoly& a, const RealPoly& b) {
  return max_coeff_gap(a, b) / std::max(a.max_abs_coeff(), b.max_abs_coeff());
}

double node_inner(const QHermiteFunction& f, const QHermiteFunction& g, const JacksonNodes& nodes) {
  double s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) s += nodes.weight(i) * f.values[i] * g.values[i];
  return s;
}

}  // namespace

TEST(QHermite, FirstPolynomials) {
  const QContext ctx(0.5);
  const auto H = qhermite_recurrence(2, ctx);
  EXPECT_EQ(H[0].poly, RealPoly::constant(1.0));
  EXPECT_EQ(H[1].poly, RealPoly::monomial(1, 1.5));
  EXPECT_DOUBLE_EQ(H[2].a(0), 2.25);
  EXPECT_DOUBLE_EQ(H[2].a(1), -0.375);
  EXPECT_EQ(H[2].poly.coeff(1), 0.0);
}

TEST(QHermite, HigherDegreesMatchRationalOracle) {
  // Exact rational arithmetic at q = 1/2.
  const QContext ctx(0.5);
  const RealPoly h4({63.0 / 1024, 0, -945.0 / 512, 0, 81.0 / 16});
  const RealPoly h5({0, 5859.0 / 32768, 0, -12555.0 / 4096, 0, 243.0 / 32});
  EXPECT_LT(coeff_rel_gap(qhermite_explicit(4, ctx).poly, h4), 1e-15);
  EXPECT_LT(coeff_rel_gap(qhermite_explicit(5, ctx).poly, h5), 1e-15);
  EXPECT_LT(coeff_rel_gap(qhermite_recurrence(5, ctx)[5].poly, h5), 1e-15);
}

TEST(QHermite, UnshiftedRecurrenceDisagreesFromDegreeTwo) {
  const QContext ctx(0.5);
  const auto literal = qhermite_recurrence(4, ctx, 0);
  EXPECT_LT(coeff_rel_gap(literal[1].poly, qhermite_explicit(1, ctx).poly), 1e-15);
  EXPECT_DOUBLE_EQ(literal[2].poly.coeff(0), -0.75);
  for (int k = 2; k <= 4; ++k) EXPECT_GT(coeff_rel_gap(literal[k].poly, qhermite_explicit(k, ctx).poly), 1e-2) << k;
}

TEST(QHermite, ExplicitEqualsRecurrence) {
  for (double q : qtest::kQs) {
    const QContext ctx(q);
    const auto H = qhermite_recurrence(12, ctx);
    for (int k = 0; k <= 12; ++k) EXPECT_LT(coeff_rel_gap(qhermite_explicit(k, ctx).poly, H[k].poly), 1e-10);
  }
}

TEST(QHermite, Parity) {
  for (double q : qtest::kQs) {
    const auto H = qhermite_recurrence(12, QContext(q));
    for (const auto& h : H) {
      for (int m = 0; m <= h.k; ++m) {
        if ((h.k - m) % 2) EXPECT_EQ(h.poly.coeff(m), 0.0);
      }
    }
  }
}

TEST(QHermite, Annihilation) {
  EXPECT_EQ(qhermite_annihilate(1, QContext(0.5)).abs, 0.0);
  EXPECT_LT(qhermite_annihilate(5, QContext(0.5)).rel(), 1e-10);
  EXPECT_LT(qhermite_annihilate(10, QContext(0.9)).rel(), 1e-9);
}

TEST(QHermite, Creation) {
  const auto c1 = qhermite_create(1, QContext(0.5));
  EXPECT_EQ(c1.left.abs, 0.0);
  EXPECT_EQ(c1.right.abs, 0.0);
  for (double q : {0.5, 0.9}) {
    const auto c = qhermite_create(6, QContext(q));
    EXPECT_LT(c.left.rel(), 1e-10);
    EXPECT_LT(c.right.rel(), 1e-10);
  }
}

TEST(QHermite, EigenEquation) {
  const QContext ctx(0.5);
  EXPECT_EQ(qhermite_eigencheck(0, ctx).abs, 0.0);
  EXPECT_DOUBLE_EQ(qhermite_eigenvalue(1, ctx), 2.0);
  EXPECT_LT(qhermite_eigencheck(8, ctx).rel(), 1e-9);
  for (double q : qtest::kQs)
    for (int k = 0; k <= 10; ++k) EXPECT_LT(qhermite_eigencheck(k, QContext(q)).rel(), 1e-9) << q << " " << k;
}

TEST(QHermite, NormClosedForm) {
  // Lambda_k with Gamma_{q^2}(1/2) from mpmath at 50 digits.
  struct Row {
    double q, l0, l5, l8;
  };
  for (const Row& r : {Row{0.3, 0.58457464087923502382, 2.7615643674074277286e-10, 4.9906948788565149915e-22},
                       Row{0.5, 0.9477970008047077303, 0.000065455177223324046636, 1.024807778650219653e-10},
                       Row{0.9, 1.6156094535009594857, 352.67458044656574165, 26863.439798252704151}}) {
    const QContext ctx(r.q);
    EXPECT_LT(rel(hermite_norm(0, ctx), r.l0), 1e-12);
    EXPECT_LT(rel(hermite_norm(5, ctx), r.l5), 1e-12);
    EXPECT_LT(rel(hermite_norm(8, ctx), r.l8), 1e-12);
  }
}

TEST(QHermite, WeightRelation) {
  const QContext ctx(0.5);
  for (int k : {1, 4}) {
    const auto w = weight_relation_check(k, ctx);
    EXPECT_LT(w.max_residual, 1e-7) << k;
    EXPECT_GT(w.nodes_checked, 0);
    EXPECT_NEAR(w.endpoint_lhs, w.endpoint_rhs, 1e-12);
  }
}

TEST(QHermite, WeightRelationFailsForMixedReading) {
  const QContext ctx(0.5);
  EXPECT_GT(weight_relation_check(4, ctx, mixed_weight_variant(ctx)).max_residual, 1e-6);
}

TEST(QHermite, WeightDerivativeNeedsDilatedWeight) {
  for (double q : qtest::kQs) {
    const QContext ctx(q);
    for (double t : {0.3, 0.5, 0.9}) {
      // Undilated right-hand side fails for both readings of e_{q^2}.
      EXPECT_GT(weight_derivative_residual(t, ctx, canonical_weight_variant(ctx), false), 1e-3);
      EXPECT_GT(weight_derivative_residual(t, ctx, mixed_weight_variant(ctx), false), 1e-3);
      EXPECT_LT(weight_derivative_residual(t, ctx, canonical_weight_variant(ctx), true), 1e-12);
    }
  }
}

TEST(QHermite, NodeWeightsVanishAtEndpoint) {
  const QContext ctx(0.5);
  const JacksonNodes nodes(ctx);
  const auto w = hermite_node_weights(nodes);
  EXPECT_EQ(w[JacksonNodes::index(0, false)], 0.0L);
  EXPECT_EQ(w[JacksonNodes::index(0, true)], 0.0L);
  EXPECT_NEAR(static_cast<double>(w.back()), 1.0, 1e-12);
}

TEST(QHermite, Orthogonality) {
  const QContext ctx(0.5);
  const double lmax = hermite_norm(0, ctx);
  for (int k = 0; k <= 8; ++k)
    for (int l = 0; l <= 8; ++l) {
      const auto v = qhermite_orthogonality(k, l, ctx);
      if (k == l) {
        EXPECT_LT(v.gap, 1e-6);
      } else {
        EXPECT_LT(std::abs(v.value), 1e-8 * lmax);
      }
    }
  EXPECT_LT(std::abs(qhermite_orthogonality(0, 0, ctx).value / hermite_norm(0, ctx) - 1.0), 1e-6);
  EXPECT_LT(qhermite_orthogonality(5, 5, ctx).gap, 1e-6);
}

TEST(QHermite, GramDiagonalAcrossQ) {
  for (double q : qtest::kQs) {
    const auto g = hermite_gram(8, QContext(q));
    EXPECT_LT(g.max_normalized_deviation, 1e-6) << q;
  }
}

TEST(QHermite, NormalizedFunctions) {
  const QContext ctx(0.5);
  const JacksonNodes nodes(ctx);
  const auto f = qhermite_functions(5, nodes, ctx);
  EXPECT_NEAR(node_inner(f[0], f[0], nodes), 1.0, 1e-6);
  EXPECT_LT(std::abs(node_inner(f[2], f[5], nodes)), 1e-8);
  EXPECT_EQ(f[3].values[JacksonNodes::index(0, false)], 0.0);
}

TEST(QHermite, ClassicalLimitAtOneMinusMicro) {
  EXPECT_LT(checks::hermite_classical_limit(5, 1.0 - 1e-6), 1e-3);
}

TEST(QHermite, ClassicalGapIsFirstOrderInOneMinusQ) {
  const double a = checks::hermite_classical_limit(5, 0.999);
  const double b = checks::hermite_classical_limit(5, 0.9999);
  EXPECT_GT(a, 1e-3);
  EXPECT_NEAR(a / b, 10.0, 0.5);
}
