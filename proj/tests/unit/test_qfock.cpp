#include <gtest/gtest.h>

#include "qfock/qfock.hpp"
#include "support.hpp"

using namespace qfock;
using qtest::Gen;

namespace {

FockElement random_element(Gen& g, int degree, const QContext& ctx) {
  return FockElement(g.complexes(degree + 1, 1.0), ctx);
}

}  // namespace

TEST(Fock, BasisIsOrthogonalWithFactorialNorms) {
  for (double q : qtest::kQs) {
    const QContext ctx(q);
    for (int n = 0; n <= 20; ++n)
      for (int m = 0; m <= 20; ++m) {
        const cplx v = fischer_inner(FockElement::basis(n, ctx), FockElement::basis(m, ctx));
        EXPECT_EQ(v, cplx(n == m ? q_factorial(n, ctx) : 0.0));
      }
  }
}

TEST(Fock, NormOfSimpleElement) {
  const QContext ctx(0.5);
  EXPECT_DOUBLE_EQ(FockElement({1.0, 1.0}, ctx).norm2(), 2.0);
}

TEST(Fock, NormIsPositive) {
  Gen g(31);
  const QContext ctx(0.5);
  for (int i = 0; i < 100; ++i) EXPECT_GT(random_element(g, g.integer(0, 12), ctx).norm2(), 0.0);
  EXPECT_EQ(FockElement::zero(ctx).norm2(), 0.0);
}

TEST(Fock, MixingDeformationsThrows) {
  EXPECT_THROW(FockElement::basis(1, QContext(0.5)) + FockElement::basis(1, QContext(0.3)), ConfigError);
  EXPECT_THROW(fischer_inner(FockElement::basis(1, QContext(0.5)), FockElement::basis(1, QContext(0.3))),
               ConfigError);
}

TEST(Fock, EvaluateUsesRunningProducts) {
  const QContext ctx(0.5);
  const FockElement f({1.0, 2.0, cplx(0, 1)}, ctx);
  const cplx z(0.3, -0.7);
  const cplx want = 1.0 + 2.0 * zq_value(1, z, ctx) + cplx(0, 1) * zq_value(2, z, ctx);
  EXPECT_LT(std::abs(evaluate(f, z) - want), 1e-15);
  EXPECT_LT(std::abs(evaluate(to_polynomial(f), z.real(), z.imag()) - want), 1e-14);
}

TEST(Kernel, SecondArgumentZero) {
  for (double q : qtest::kQs) {
    const auto k = kernel_eval(cplx(0.1, 0.2), 0.0, QContext(q));
    EXPECT_EQ(k.value, cplx(1.0));
  }
}

TEST(Kernel, DomainChecked) {
  const QContext ctx(0.5);
  EXPECT_THROW(kernel_eval(0.1, 2.0, ctx), DomainError);
  EXPECT_THROW(kernel_eval(0.1, cplx(0, 2.5), ctx), DomainError);
  EXPECT_NO_THROW(kernel_eval(0.1, 1.9, ctx));
}

TEST(Kernel, TailBoundIsSmall) {
  const auto k = kernel_eval(cplx(0.4, 0.3), cplx(-0.5, 0.2), QContext(0.5));
  EXPECT_LT(k.tail_bound, 1e-12 * std::abs(k.value));
  EXPECT_GT(k.N, 0);
}

TEST(Kernel, Reproducing) {
  Gen g(32);
  for (double q : qtest::kQs) {
    const QContext ctx(q);
    for (int i = 0; i < 10; ++i) {
      const auto f = random_element(g, 8, ctx);
      const cplx w = g.complex_in_disc(0.9);
      EXPECT_LT(reproducing_check(f, w), 1e-8) << q;
    }
  }
}

TEST(Kernel, ClassicalLimit) {
  Gen g(33);
  const QContext ctx(0.999);
  for (int i = 0; i < 20; ++i) {
    const cplx z = g.complex_in_disc(0.5), w = g.complex_in_disc(0.5);
    EXPECT_LT(std::abs(kernel_eval(z, w, ctx).value - std::exp(z * std::conj(w))), 1e-3);
  }
}

TEST(Operators, PositionRaisesAndMomentumLowers) {
  const QContext ctx(0.5);
  const auto x = position_apply(FockElement::basis(3, ctx));
  EXPECT_EQ(x.coeff(4), cplx(1.0));
  EXPECT_EQ(x.coeff(3), cplx(0.0));
  const auto p = momentum_apply(FockElement::basis(3, ctx));
  EXPECT_NEAR(std::abs(p.coeff(2) - cplx(0, -1.75)), 0.0, 1e-15);
  EXPECT_TRUE(momentum_apply(FockElement::basis(0, ctx)).norm2() == 0.0);
}

TEST(Operators, CoefficientActionMatchesPolynomialAction) {
  Gen g(34);
  for (double q : qtest::kQs) {
    const QContext ctx(q);
    for (int n = 0; n <= 10; ++n) {
      const auto f = random_element(g, n, ctx);
      const auto poly = to_polynomial(f);
      const auto xp = position_apply(poly, ctx);
      const auto pp = momentum_apply(poly, ctx);
      for (int i = 0; i < 5; ++i) {
        const cplx z(g.uniform(-1, 1), g.uniform(-1, 1));
        EXPECT_LT(std::abs(evaluate(position_apply(f), z) - evaluate(xp, z.real(), z.imag())), 1e-12);
        EXPECT_LT(std::abs(evaluate(momentum_apply(f), z) - evaluate(pp, z.real(), z.imag())), 1e-12);
      }
    }
  }
}

TEST(Operators, Commutator) {
  EXPECT_NEAR(commutator_check(0, QContext(0.5)).factor.real(), 1.0, 1e-15);
  EXPECT_NEAR(commutator_check(3, QContext(0.5)).factor.real(), 0.125, 1e-15);
  const auto r = commutator_check(10, QContext(0.9));
  EXPECT_LT(r.gap(), 1e-12);
  EXPECT_NEAR(r.expected, std::pow(0.9, 10), 1e-15);
  for (double q : qtest::kQs)
    for (int n = 0; n <= 20; ++n) EXPECT_LT(commutator_check(n, QContext(q)).gap(), 1e-12) << q << " " << n;
}

TEST(Operators, Adjointness) {
  const QContext ctx(0.5);
  EXPECT_EQ(fischer_inner(dz_apply(FockElement::basis(1, ctx)), FockElement::basis(0, ctx)), cplx(1.0));
  EXPECT_EQ(adjoint_check(FockElement::basis(1, ctx), FockElement::basis(0, ctx)), 0.0);
  EXPECT_EQ(adjoint_check(FockElement::basis(0, ctx) * 3.0, FockElement::basis(2, ctx)), 0.0);
  Gen g(35);
  for (int i = 0; i < 20; ++i) {
    EXPECT_LT(adjoint_check(random_element(g, 10, ctx), random_element(g, 10, ctx)), 1e-10);
  }
}

TEST(Operators, OscillatorPairIsNotAdjoint) {
  const QContext ctx(0.5);
  EXPECT_GT(oscillator_adjoint_gap(FockElement::basis(0, ctx), FockElement::basis(1, ctx)), 1e-3);
}
