#include <benchmark/benchmark.h>

#include "qfock/qfock.hpp"

using namespace qfock;

static void BM_QExpSmall(benchmark::State& state) {
  const QContext ctx(0.5);
  const auto v = QExpVariant::small(0.5);
  double x = -1.3;
  for (auto _ : state) benchmark::DoNotOptimize(q_exp(v, x, ctx));
}
BENCHMARK(BM_QExpSmall);

static void BM_QGamma(benchmark::State& state) {
  const QContext ctx(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(q_gamma(2.7, ctx));
}
BENCHMARK(BM_QGamma);

static void BM_JacksonIntegral(benchmark::State& state) {
  const QContext ctx(0.9);
  const JacksonQuadrature quad(0.0, 1.0, static_cast<int>(state.range(0)), ctx, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jackson_integral([](double t) { return t * t * t; }, quad).value);
  }
}
BENCHMARK(BM_JacksonIntegral)->Arg(50)->Arg(400);

static void BM_ZqMonomial(benchmark::State& state) {
  const QContext ctx(0.5);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zq_monomial(n, ctx));
}
BENCHMARK(BM_ZqMonomial)->Arg(10)->Arg(30);

static void BM_Analyticity(benchmark::State& state) {
  const QContext ctx(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(analyticity_residual(30, ctx));
}
BENCHMARK(BM_Analyticity);

static void BM_MixedGram(benchmark::State& state) {
  const QContext ctx(0.5);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mixed_basis_gram(N, ctx));
}
BENCHMARK(BM_MixedGram)->Arg(3)->Arg(6);

static void BM_HermiteGram(benchmark::State& state) {
  const QContext ctx(0.5);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hermite_gram(k, ctx));
}
BENCHMARK(BM_HermiteGram)->Arg(8)->Arg(15);

static void BM_KernelEval(benchmark::State& state) {
  const QContext ctx(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_eval(cplx(0.4, 0.3), cplx(-0.5, 0.2), ctx));
}
BENCHMARK(BM_KernelEval);

static void BM_BargmannTable(benchmark::State& state) {
  const QContext ctx(0.5);
  const int modes = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(BargmannKernelTable(modes, ctx));
}
BENCHMARK(BM_BargmannTable)->Arg(9)->Arg(16);

static void BM_BargmannForward(benchmark::State& state) {
  const QContext ctx(0.5);
  const BargmannKernelTable table(16, ctx);
  auto f = table.hermite_function(3) + table.hermite_function(7) * cplx(0.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(bargmann_forward(f, table));
}
BENCHMARK(BM_BargmannForward);

static void BM_VerificationSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_verification(VerifyConfig{}));
}
BENCHMARK(BM_VerificationSuite)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
