#include <gtest/gtest.h>

#include "qfock/qfock.hpp"
#include "support.hpp"

using namespace qfock;
using qtest::Gen;

namespace {

JacksonFunction random_span(Gen& g, const BargmannKernelTable& table, int modes) {
  JacksonFunction f = JacksonFunction::zero(table.nodes());
  for (int n = 0; n < modes; ++n) f += table.hermite_function(n) * cplx(g.uniform(-1, 1), g.uniform(-1, 1));
  return f;
}

}  // namespace

class BargmannTest : public ::testing::Test {
 protected:
  QContext ctx{0.5};
  BargmannKernelTable table{16, ctx};
};

TEST_F(BargmannTest, BasisImage) {
  for (int m = 0; m <= 10; ++m) {
    const auto F = bargmann_forward(table.hermite_function(m), table);
    for (int n = 0; n < F.size(); ++n) {
      const double want = n == m ? 1.0 / std::sqrt(q_factorial(m, ctx)) : 0.0;
      EXPECT_LT(std::abs(F.coeff(n) - want), 1e-8) << m << " " << n;
    }
  }
}

TEST_F(BargmannTest, ZeroAndSum) {
  EXPECT_EQ(bargmann_forward(JacksonFunction::zero(table.nodes()), table).norm2(), 0.0);
  const auto F = bargmann_forward(table.hermite_function(0) + table.hermite_function(1), table);
  EXPECT_NEAR(std::abs(F.coeff(0) - 1.0), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(F.coeff(1) - 1.0), 0.0, 1e-8);
}

TEST_F(BargmannTest, UnitarityGram) {
  EXPECT_LT(bargmann_unitarity_gram(1, ctx).max_abs_deviation, 1e-7);
  const auto g = bargmann_unitarity_gram(9, ctx);
  EXPECT_EQ(g.size(), 9);
  EXPECT_LT(g.max_abs_deviation, 1e-7);
}

TEST_F(BargmannTest, Parseval) {
  Gen g(41);
  for (int i = 0; i < 10; ++i) {
    const auto f = random_span(g, table, 9);
    const double lhs = bargmann_forward(f, table).norm2();
    const double rhs = l2_inner(f, f).real();
    EXPECT_LT(std::abs(std::sqrt(lhs) - std::sqrt(rhs)), 1e-7);
  }
}

TEST_F(BargmannTest, Linearity) {
  Gen g(42);
  const auto f = random_span(g, table, 16);
  const auto h = random_span(g, table, 16);
  const cplx alpha(0.7, -1.2);
  const auto lhs = bargmann_forward(alpha * f + h, table);
  const auto rhs = alpha * bargmann_forward(f, table) + bargmann_forward(h, table);
  EXPECT_LT(std::sqrt((lhs - rhs).norm2()), 1e-10);
}

TEST_F(BargmannTest, AdjointInvertsOnTheSpan) {
  Gen g(43);
  const auto f = random_span(g, table, 8);
  const auto back = bargmann_adjoint(bargmann_forward(f, table), table);
  double err = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i) err = std::max(err, std::abs(back.values[i] - f.values[i]));
  EXPECT_LT(err, 1e-7);
}

TEST_F(BargmannTest, CoherentStateAtOrigin) {
  const auto phi = coherent_state(0.0, table);
  const auto h0 = table.hermite_function(0);
  double err = 0.0;
  for (std::size_t i = 0; i < phi.values.size(); ++i) err = std::max(err, std::abs(phi.values[i] - h0.values[i]));
  EXPECT_LT(err, 1e-15);
}

TEST_F(BargmannTest, CoherentOverlaps) {
  Gen g(44);
  for (int i = 0; i < 5; ++i) {
    const cplx z = g.complex_in_disc(0.4), w = g.complex_in_disc(0.4);
    const auto pz = coherent_state(z, table);
    const auto pw = coherent_state(w, table);
    EXPECT_LT(std::abs(l2_inner(pz, pw) - kernel_eval(z, w, ctx).value), 1e-6);
    for (int n = 0; n < 6; ++n) {
      const cplx want = zq_value(n, z, ctx) / std::sqrt(q_factorial(n, ctx));
      EXPECT_LT(std::abs(l2_inner(pz, table.hermite_function(n)) - want), 1e-7);
    }
  }
}

TEST_F(BargmannTest, CoherentStateDomain) {
  EXPECT_THROW(coherent_state(2.0, table), DomainError);
}

TEST_F(BargmannTest, TensorBasisImage) {
  const int K = 6;
  for (int k = 0; k < K; ++k)
    for (int h = 0; h < K; ++h) {
      const auto& a = table.hermite(k).values;
      const auto& b = table.hermite(h).values;
      TensorJacksonFunction F(a.size(), b.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) F(i, j) = a[i] * b[j];
      const auto T = tensor_forward(F, table);
      Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(T.c.rows(), T.c.cols());
      want(k, h) = 1.0;
      EXPECT_LT((T.c - want).cwiseAbs().maxCoeff(), 1e-7) << k << " " << h;
    }
}

TEST_F(BargmannTest, TensorUnitarity) {
  const BargmannKernelTable small(5, ctx);
  const auto g = tensor_unitarity_gram(small);
  EXPECT_EQ(g.size(), 25);
  EXPECT_LT(g.max_abs_deviation, 1e-6);
}

TEST(BargmannAcrossQ, UnitarityAndBasisImage) {
  for (double q : qtest::kQs) {
    const QContext ctx(q);
    EXPECT_LT(checks::bargmann_unitarity(9, ctx), 1e-7) << q;
    EXPECT_LT(checks::bargmann_basis_image(10, 16, ctx), 1e-7) << q;
  }
}
