#include "qfock/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "qfock/analytic.hpp"
#include "qfock/bargmann.hpp"
#include "qfock/complex_hermite.hpp"
#include "qfock/elliptic.hpp"
#include "qfock/fock.hpp"
#include "qfock/jackson.hpp"
#include "qfock/qexp.hpp"
#include "qfock/qgamma.hpp"
#include "qfock/qgrid.hpp"
#include "qfock/qhermite.hpp"
#include "qfock/qnumbers.hpp"

namespace qfock {
namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

cplx random_point(Rng& rng, double r) { return {uniform(rng, -r, r), uniform(rng, -r, r)}; }

FockElement random_fock(Rng& rng, int degree, const QContext& ctx) {
  std::vector<cplx> a(static_cast<std::size_t>(degree) + 1);
  for (auto& c : a) c = random_point(rng, 1.0);
  return FockElement(std::move(a), ctx);
}

double physicists_hermite_coeff(int k, int m) {
  // H_k(t) = sum_j (-1)^j k! / (j! (k-2j)!) (2t)^{k-2j}
  if (m > k || (k - m) % 2 != 0) return 0.0;
  const int j = (k - m) / 2;
  const double sign = j % 2 == 0 ? 1.0 : -1.0;
  return sign * std::tgamma(k + 1.0) / (std::tgamma(j + 1.0) * std::tgamma(m + 1.0)) * std::pow(2.0, m);
}

}  // namespace

namespace checks {

double qnumber_sum(int n_max, const QContext& ctx) {
  double worst = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    double s = 0.0;
    for (int m = 0; m < n; ++m) s += std::pow(ctx.q(), m);
    worst = std::max(worst, std::abs(q_number(n, ctx) - s) / s);
  }
  return worst;
}

double bracket_gap(int n_max, const QContext& ctx) {
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) worst = std::max(worst, std::abs(q_bracket_gap(n, ctx) - std::pow(ctx.q(), n)));
  return worst;
}

double binomial_pascal(int n_max, const QContext& ctx) {
  const double q = ctx.q();
  std::vector<std::vector<double>> P(n_max + 1);
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    P[n].assign(n + 1, 1.0);
    for (int k = 1; k < n; ++k) P[n][k] = P[n - 1][k - 1] + std::pow(q, k) * P[n - 1][k];
    for (int k = 0; k <= n; ++k) worst = std::max(worst, std::abs(q_binomial(n, k, ctx) - P[n][k]) / P[n][k]);
  }
  return worst;
}

double jackson_ftc(int trials, int degree, std::uint64_t seed, const QContext& ctx) {
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = uniform(rng, -1.0, 1.0);
    const RealPoly p(c);
    const double a = uniform(rng, 0.05, 1.0);
    const double b = uniform(rng, a + 0.1, 1.95);
    auto dp = [&](double x) { return q_derivative([&](double s) { return p(s); }, x, ctx); };
    const auto v = jackson_integral(dp, JacksonQuadrature(a, b, ctx));
    worst = std::max(worst, std::abs(v.value - (p(b) - p(a))));
  }
  return worst;
}

double qexp_inverse(int trials, std::uint64_t seed, const QContext& ctx) {
  Rng rng(seed);
  const double r = 0.9 / (1.0 - ctx.q());
  const auto E = QExpVariant::big(ctx.q());
  const auto e = QExpVariant::small(ctx.q());
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    const double t = uniform(rng, -r, r);
    worst = std::max(worst, std::abs(q_exp(E, t, ctx) * q_exp(e, -t, ctx) - 1.0));
  }
  return worst;
}

double qexp_derivative_big(int trials, std::uint64_t seed, const QContext& ctx) {
  Rng rng(seed);
  const double r = 0.9 / (1.0 - ctx.q());
  const auto E = QExpVariant::big(ctx.q());
  auto f = [&](double x) { return q_exp(E, x, ctx); };
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    double x = uniform(rng, 0.05, r) * (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0);
    const double v = f(x);
    worst = std::max(worst, std::abs(q_derivative(f, x, ctx) - v) / std::max(1.0, std::abs(v)));
  }
  return worst;
}

double qexp_derivative_small(int trials, std::uint64_t seed, const QContext& ctx) {
  Rng rng(seed);
  const double r = 0.9 / (1.0 - ctx.q());
  const auto e = QExpVariant::small(ctx.q());
  auto f = [&](double x) { return q_exp(e, x, ctx); };
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    double x = uniform(rng, 0.05, r) * (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0);
    const double v = f(ctx.q() * x);
    worst = std::max(worst, std::abs(q_derivative(f, x, ctx) - v) / std::max(1.0, std::abs(v)));
  }
  return worst;
}

double qexp_zeros(int k_max, const QContext& ctx) {
  const double q = ctx.q();
  const auto e = QExpVariant::small(q);
  double worst = 0.0;
  for (int k = 0; k <= k_max; ++k) worst = std::max(worst, std::abs(q_exp(e, std::pow(q, -k) / (q - 1.0), ctx)));
  return worst;
}

double gamma_functional(int trials, std::uint64_t seed, const QContext& ctx) {
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    const double t = uniform(rng, 0.1, 5.0);
    const double ratio = q_gamma(t + 1.0, ctx) / q_gamma(t, ctx);
    const double b = q_number(t, ctx);
    worst = std::max(worst, std::abs(ratio - b) / b);
  }
  return worst;
}

double gamma_integral(const QContext& ctx) {
  const double g = q_gamma(2.0, ctx);
  return std::abs(q_gamma_integral(2.0, ctx) - g) / g;
}

double gamma_moment(double nu, const QContext& ctx) {
  const auto m = q_gamma_moment_check(nu, ctx);
  return m.skipped ? std::numeric_limits<double>::quiet_NaN() : m.rel_gap;
}

double weight_derivative(const QContext& ctx) {
  const auto v = canonical_weight_variant(ctx);
  double worst = 0.0;
  for (double t = ctx.lambda() * ctx.q(); t > 1e-3; t *= ctx.q()) {
    worst = std::max({worst, weight_derivative_residual(t, ctx, v, true),
                      weight_derivative_residual(-t, ctx, v, true)});
  }
  return worst;
}

double analytic_dzbar(int n_max, const QContext& ctx) {
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) worst = std::max(worst, analyticity_residual(n, ctx).dzbar);
  return worst;
}

double analytic_dz(int n_max, const QContext& ctx) {
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) worst = std::max(worst, analyticity_residual(n, ctx).dz);
  return worst;
}

double expansion_vs_product(int n_max, int points, std::uint64_t seed, const QContext& ctx) {
  Rng rng(seed);
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const auto C = zq_expansion_coeffs(n, ctx);
    for (int i = 0; i < points; ++i) {
      const cplx z = random_point(rng, 1.5);
      const cplx lhs = z * evaluate(C, z);
      const cplx rhs = zq_value(n + 1, z, ctx);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::pow(std::abs(z), n + 1)));
    }
  }
  return worst;
}

double expansion_coefficient_sum(int n_max, const QContext& ctx) {
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    cplx s = 0.0;
    const auto C = zq_expansion_coeffs(n, ctx);
    for (const auto& [e, c] : C.terms()) s += c;
    worst = std::max(worst, std::abs(s - 1.0));
  }
  return worst;
}

double domination(int n_max, int points, std::uint64_t seed, const QContext& ctx) {
  Rng rng(seed);
  std::vector<std::pair<double, double>> samples;
  for (int i = 0; i < points; ++i) samples.emplace_back(uniform(rng, -3.0, 3.0), uniform(rng, -3.0, 3.0));
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const auto r = modulus_domination_check(n, samples, ctx);
    worst = std::max(worst, r.failures ? r.worst_ratio - 1.0 : 0.0);
  }
  return worst;
}

double complex_hermite_orthogonality(int max_index) {
  std::vector<ZBarBasisPoly> H;
  std::vector<std::pair<int, int>> idx;
  for (int p = 0; p <= max_index; ++p) {
    for (int r = 0; r <= max_index; ++r) {
      H.push_back(complex_hermite(p, r));
      idx.emplace_back(p, r);
    }
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < H.size(); ++a) {
    for (std::size_t b = 0; b < H.size(); ++b) {
      const auto [p, r] = idx[a];
      const auto [m, n] = idx[b];
      const double fp = std::tgamma(p + 1.0) * std::tgamma(r + 1.0);
      const double fm = std::tgamma(m + 1.0) * std::tgamma(n + 1.0);
      const double target = a == b ? std::numbers::pi * fp : 0.0;
      worst = std::max(worst, std::abs(gaussian_inner(H[a], H[b]) - target) / (std::numbers::pi * std::sqrt(fp * fm)));
    }
  }
  return worst;
}

double hermite_roundtrip(int N) {
  double worst = 0.0;
  for (int d = 0; d <= N; ++d) {
    for (int p = 0; p <= d; ++p) {
      const auto m = ZBarBasisPoly::monomial(p, d - p);
      worst = std::max(worst, max_coeff_gap(from_hermite_expansion(to_hermite_expansion(m)), m));
    }
  }
  return worst;
}

double mixed_gram_min_ratio(int N_max, const QContext& ctx) {
  double worst = std::numeric_limits<double>::infinity();
  for (int N = 1; N <= N_max; ++N) {
    const auto g = mixed_basis_gram(N, ctx);
    worst = std::min(worst, g.min_eigenvalue / g.trace);
  }
  return worst;
}

double elliptic_min_singular_ratio(int n_max) {
  double worst = std::numeric_limits<double>::infinity();
  for (double p : {0.5, 1.0, 2.0}) {
    for (int n = 0; n <= n_max; ++n) {
      const auto r = elliptic_independence_check(n, p);
      worst = std::min(worst, r.min_singular / r.max_singular);
    }
  }
  return worst;
}

double hermite_explicit_vs_recurrence(int k_max, const QContext& ctx) {
  const auto rec = qhermite_recurrence(k_max, ctx);
  double worst = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    const auto ex = qhermite_explicit(k, ctx);
    for (int m = 0; m <= k; ++m) {
      const double r = rec[k].poly.coeff(m);
      const double e = ex.poly.coeff(m);
      worst = std::max(worst, r != 0.0 ? std::abs(e - r) / std::abs(r) : std::abs(e));
    }
  }
  return worst;
}

double hermite_annihilate(int k_max, const QContext& ctx) {
  double worst = 0.0;
  for (int k = 1; k <= k_max; ++k) worst = std::max(worst, qhermite_annihilate(k, ctx).rel());
  return worst;
}

double hermite_create(int k_max, const QContext& ctx) {
  double worst = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    const auto r = qhermite_create(k, ctx);
    worst = std::max({worst, r.left.rel(), r.right.rel()});
  }
  return worst;
}

double hermite_eigen(int k_max, const QContext& ctx) {
  double worst = 0.0;
  for (int k = 0; k <= k_max; ++k) worst = std::max(worst, qhermite_eigencheck(k, ctx).rel());
  return worst;
}

double hermite_weight_relation(int k_max, const QContext& ctx) {
  double worst = 0.0;
  for (int k = 1; k <= k_max; ++k) worst = std::max(worst, weight_relation_check(k, ctx).max_residual);
  return worst;
}

double hermite_orthogonality(int k_max, const QContext& ctx) {
  return hermite_gram(k_max, ctx).max_normalized_deviation;
}

double hermite_classical_limit(int k_max, double q) {
  const QContext ctx(q);
  const auto H = qhermite_recurrence(k_max, ctx);
  double worst = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    for (int m = 0; m <= k; ++m) {
      const double c = physicists_hermite_coeff(k, m);
      const double d = std::abs(H[k].poly.coeff(m) - c);
      worst = std::max(worst, c != 0.0 ? d / std::abs(c) : d);
    }
  }
  return worst;
}

double hermite_parity(int k_max, const QContext& ctx) {
  const auto H = qhermite_recurrence(k_max, ctx);
  double worst = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    const RealPoly mirrored = H[k].poly.reflect() * (k % 2 == 0 ? 1.0 : -1.0);
    worst = std::max(worst, max_coeff_gap(mirrored, H[k].poly));
  }
  return worst;
}

double fock_basis_orthogonality(int n_max, const QContext& ctx) {
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n_max; ++m) {
      const cplx v = fischer_inner(FockElement::basis(n, ctx), FockElement::basis(m, ctx));
      const double target = n == m ? q_factorial(n, ctx) : 0.0;
      worst = std::max(worst, std::abs(v - target) / q_factorial(std::max(n, m), ctx));
    }
  }
  return worst;
}

double fock_min_norm(int trials, std::uint64_t seed, const QContext& ctx) {
  Rng rng(seed);
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < trials; ++i) {
    const int degree = static_cast<int>(uniform(rng, 0.0, 11.0));
    auto f = random_fock(rng, degree, ctx);
    worst = std::min(worst, fischer_inner(f, f).real());
  }
  return worst;
}

double fock_reproducing(int points, std::uint64_t seed, const QContext& ctx) {
  Rng rng(seed);
  const double r = 0.9 / (1.0 - ctx.q()) / std::numbers::sqrt2;
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const auto f = random_fock(rng, 8, ctx);
    const cplx w = random_point(rng, r);
    const cplx direct = evaluate(to_polynomial(f), w.real(), w.imag());
    worst = std::max(worst, reproducing_check(f, w) / std::max(1.0, std::abs(direct)));
    worst = std::max(worst, std::abs(evaluate(f, w) - direct) / std::max(1.0, std::abs(direct)));
  }
  return worst;
}

double fock_commutator(int n_max, const QContext& ctx) {
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) worst = std::max(worst, commutator_check(n, ctx).gap());
  return worst;
}

double fock_adjoint(int trials, std::uint64_t seed, const QContext& ctx) {
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    const auto R = random_fock(rng, 10, ctx);
    const auto Q = random_fock(rng, 10, ctx);
    worst = std::max(worst, adjoint_check(R, Q));
  }
  return worst;
}

double fock_oscillator_gap(const QContext& ctx) {
  return oscillator_adjoint_gap(FockElement::basis(0, ctx), FockElement::basis(1, ctx));
}

double fock_kernel_classical(int points, std::uint64_t seed, double q) {
  const QContext ctx(q);
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    cplx z, w;
    do z = random_point(rng, 0.5); while (std::abs(z) > 0.5);
    do w = random_point(rng, 0.5); while (std::abs(w) > 0.5);
    worst = std::max(worst, std::abs(kernel_eval(z, w, ctx).value - std::exp(z * std::conj(w))));
  }
  return worst;
}

double fock_operator_polynomial(int n_max, int points, std::uint64_t seed, const QContext& ctx) {
  Rng rng(seed);
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const auto e = FockElement::basis(n, ctx);
    const auto p = to_polynomial(e);
    const auto px = to_polynomial(position_apply(e));
    const auto pp = to_polynomial(momentum_apply(e));
    const auto qx = position_apply(p, ctx);
    const auto qp = momentum_apply(p, ctx);
    for (int i = 0; i < points; ++i) {
      const cplx z = random_point(rng, 1.0);
      worst = std::max(worst, std::abs(evaluate(px, z.real(), z.imag()) - evaluate(qx, z.real(), z.imag())));
      worst = std::max(worst, std::abs(evaluate(pp, z.real(), z.imag()) - evaluate(qp, z.real(), z.imag())));
    }
  }
  return worst;
}

double bargmann_basis_image(int m_max, int modes, const QContext& ctx) {
  const BargmannKernelTable table(modes, ctx);
  double worst = 0.0;
  for (int m = 0; m <= std::min(m_max, modes - 1); ++m) {
    const auto b = bargmann_forward(table.hermite_function(m), table);
    for (int n = 0; n < b.size(); ++n) {
      const double target = n == m ? table.inv_sqrt_factorial(m) : 0.0;
      worst = std::max(worst, std::abs(b.coeff(n) - target));
    }
  }
  return worst;
}

double bargmann_unitarity(int modes, const QContext& ctx) {
  return bargmann_unitarity_gram(modes, ctx).max_abs_deviation;
}

double bargmann_parseval(int trials, int modes, std::uint64_t seed, const QContext& ctx) {
  const BargmannKernelTable table(modes, ctx);
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    auto f = JacksonFunction::zero(table.nodes());
    for (int n = 0; n < modes; ++n) f += table.hermite_function(n) * random_point(rng, 1.0);
    const double lhs = std::sqrt(bargmann_forward(f, table).norm2());
    const double rhs = std::sqrt(l2_inner(f, f).real());
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, rhs));
  }
  return worst;
}

double bargmann_linearity(int modes, std::uint64_t seed, const QContext& ctx) {
  const BargmannKernelTable table(modes, ctx);
  Rng rng(seed);
  auto f = JacksonFunction::zero(table.nodes());
  auto g = JacksonFunction::zero(table.nodes());
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    f.values[i] = random_point(rng, 1.0);
    g.values[i] = random_point(rng, 1.0);
  }
  const cplx alpha = random_point(rng, 2.0);
  const auto lhs = bargmann_forward(f * alpha + g, table);
  const auto rhs = bargmann_forward(f, table) * alpha + bargmann_forward(g, table);
  double worst = 0.0;
  for (int n = 0; n < modes; ++n) worst = std::max(worst, std::abs(lhs.coeff(n) - rhs.coeff(n)));
  return worst;
}

double bargmann_coherent_overlap(int points, int modes, std::uint64_t seed, const QContext& ctx) {
  const BargmannKernelTable table(modes, ctx);
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const cplx z = random_point(rng, 0.5);
    const cplx w = random_point(rng, 0.5);
    const cplx overlap = l2_inner(coherent_state(z, table), coherent_state(w, table));
    worst = std::max(worst, std::abs(overlap - kernel_eval(z, w, ctx).value));
    for (int n = 0; n < modes; ++n) {
      const cplx proj = l2_inner(coherent_state(z, table), table.hermite_function(n));
      worst = std::max(worst, std::abs(proj - zq_value(n, z, ctx) * table.inv_sqrt_factorial(n)));
    }
  }
  return worst;
}

double tensor_basis_image(int k_max, const QContext& ctx) {
  const BargmannKernelTable table(k_max + 1, ctx);
  double worst = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    for (int h = 0; h <= k_max; ++h) {
      const auto& u = table.hermite(k).values;
      const auto& v = table.hermite(h).values;
      const auto n = static_cast<Eigen::Index>(u.size());
      const Eigen::VectorXcd uc = Eigen::Map<const Eigen::VectorXd>(u.data(), n).cast<cplx>();
      const Eigen::VectorXcd vc = Eigen::Map<const Eigen::VectorXd>(v.data(), n).cast<cplx>();
      auto c = tensor_forward(uc * vc.transpose(), table).c;
      c(k, h) -= 1.0;
      worst = std::max(worst, c.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double tensor_unitarity(int k_max, const QContext& ctx) {
  return tensor_unitarity_gram(BargmannKernelTable(k_max + 1, ctx)).max_abs_deviation;
}

double tensor_factorization(int modes, std::uint64_t seed, const QContext& ctx) {
  const BargmannKernelTable table(modes, ctx);
  Rng rng(seed);
  const auto n = static_cast<Eigen::Index>(table.nodes().size());
  auto u = JacksonFunction::zero(table.nodes());
  auto v = JacksonFunction::zero(table.nodes());
  for (int k = 0; k < modes; ++k) {
    u += table.hermite_function(k) * random_point(rng, 1.0);
    v += table.hermite_function(k) * random_point(rng, 1.0);
  }
  const Eigen::VectorXcd uc = Eigen::Map<const Eigen::VectorXcd>(u.values.data(), n);
  const Eigen::VectorXcd vc = Eigen::Map<const Eigen::VectorXcd>(v.values.data(), n);
  const auto c = tensor_forward(uc * vc.transpose(), table).c;
  const auto bu = bargmann_forward(u, table);
  const auto bv = bargmann_forward(v, table);
  double worst = 0.0;
  // B^(2) uses the normalized basis; undo the 1/sqrt([n]!) of the 1-D images.
  for (int k = 0; k < modes; ++k) {
    for (int h = 0; h < modes; ++h) {
      const cplx outer = bu.coeff(k) / table.inv_sqrt_factorial(k) * bv.coeff(h) / table.inv_sqrt_factorial(h);
      worst = std::max(worst, std::abs(c(k, h) - outer));
    }
  }
  return worst;
}

}  // namespace checks

bool VerificationSuiteResult::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const VerifyEntry& e) { return e.pass; });
}

int VerificationSuiteResult::failures() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const VerifyEntry& e) { return !e.pass; }));
}

QContext verify_context(const VerifyConfig& config) {
  if (config.modes < 1) throw ConfigError("modes must be >= 1");
  if (config.tol && !(*config.tol > 0.0)) throw ConfigError("tol must be > 0");
  TruncationPolicy policy;
  policy.quad_max_level = config.depth;
  return QContext(config.q, policy);
}

VerificationSuiteResult run_verification(const VerifyConfig& config) {
  const QContext ctx = verify_context(config);
  const std::uint64_t seed = config.seed;
  const int modes = config.modes;

  VerificationSuiteResult out;
  out.config = config;
  auto add = [&](std::string name, std::string anchor, std::function<double()> residual, double tol,
                 std::string note = {}) {
    VerifyEntry e{std::move(name), std::move(anchor), 0.0, config.tol.value_or(tol), false, false, false,
                  std::move(note)};
    try {
      e.residual = residual();
      e.pass = e.residual <= e.tol;
    } catch (const std::exception& ex) {
      e.residual = std::numeric_limits<double>::infinity();
      e.note = std::string("error: ") + ex.what();
    }
    out.entries.push_back(std::move(e));
  };
  // Lower-bound entries pass when the value exceeds the threshold; the
  // global tolerance override does not apply to them.
  auto add_lower = [&](std::string name, std::string anchor, std::function<double()> value, double bound,
                       std::string note) {
    VerifyEntry e{std::move(name), std::move(anchor), 0.0, bound, false, false, true, std::move(note)};
    try {
      e.residual = value();
      e.pass = e.residual > bound;
    } catch (const std::exception& ex) {
      e.residual = std::numeric_limits<double>::quiet_NaN();
      e.note = std::string("error: ") + ex.what();
    }
    out.entries.push_back(std::move(e));
  };

  add("qcore.qnumber_sum", "[n]_q = sum_{m<n} q^m, n<=50", [&] { return checks::qnumber_sum(50, ctx); }, 1e-12);
  add("qcore.bracket_gap", "[n+1]_q - [n]_q = q^n, n<=30", [&] { return checks::bracket_gap(30, ctx); }, 1e-14);
  add("qcore.binomial_pascal", "[n k]_q factorial = q-Pascal recursion, n<=20",
      [&] { return checks::binomial_pascal(20, ctx); }, 1e-12);
  add("qcore.jackson_ftc", "J int_a^b D_q p d_q t = p(b) - p(a), deg<=8",
      [&] { return checks::jackson_ftc(20, 8, seed, ctx); }, 1e-9);
  add("qcore.qexp_inverse", "E_q(t) e_q(-t) = 1", [&] { return checks::qexp_inverse(20, seed, ctx); }, 1e-8);
  add("qcore.qexp_derivative_E", "D_q E_q = E_q", [&] { return checks::qexp_derivative_big(20, seed, ctx); }, 1e-8);
  add("qcore.qexp_derivative_e", "D_q e_q(x) = e_q(qx)", [&] { return checks::qexp_derivative_small(20, seed, ctx); },
      1e-8);
  add("qcore.qexp_zeros", "e_q(q^{-k}/(q-1)) = 0, k<=3", [&] { return checks::qexp_zeros(3, ctx); }, 1e-6);
  add("qcore.weight_derivative", "D_t e_{q^2}(-t^2) = -(q+1) t e_{q^2}(-q^2 t^2)",
      [&] { return checks::weight_derivative(ctx); }, 1e-8);
  add("qcore.gamma_functional", "Gamma_q(t+1) = [t]_q Gamma_q(t)",
      [&] { return checks::gamma_functional(20, seed, ctx); }, 1e-9);
  add("qcore.gamma_integral", "Gamma_q(2) = J int_0^{1/(1-q)} t e_q(-qt) d_q t",
      [&] { return checks::gamma_integral(ctx); }, 1e-5);
  for (int nu : {1, 2, 3, 5}) {
    const std::string name = "qcore.gamma_moment_nu" + std::to_string(nu);
    const std::string anchor = "J int t^{nu-1} e_{q^2}(-t^2) d_q t = 2/(q+1) q^nu Gamma_{q^2}(nu/2)";
    const auto m = q_gamma_moment_check(nu, ctx);
    if (m.skipped) {
      out.entries.push_back({name, anchor, 0.0, 1e-5, true, true, false, "skipped: " + m.note});
    } else {
      add(name, anchor, [m] { return m.rel_gap; }, 1e-5);
    }
  }

  add("qcomplex.dzbar_annihilates", "D_zbar z_q^n = 0, n<=30", [&] { return checks::analytic_dzbar(30, ctx); }, 1e-12,
      "coefficient residual relative to the contributing terms");
  add("qcomplex.dz_lowers", "D_z z_q^n = [n]_q z_q^{n-1}, n<=30", [&] { return checks::analytic_dz(30, ctx); }, 1e-12,
      "coefficient residual relative to the contributing terms");
  add("qcomplex.expansion_vs_product", "z_q^{n+1} = z sum C_ij z^i zbar^j, n<=12",
      [&] { return checks::expansion_vs_product(12, 10, seed, ctx); }, 1e-12);
  add("qcomplex.expansion_sum", "sum_{i+j=n} C_ij = 1, n<=15", [&] { return checks::expansion_coefficient_sum(15, ctx); },
      1e-12);
  add("qcomplex.domination", "|z_q^n| <= |z|^n, n<=10", [&] { return checks::domination(10, 1000, seed, ctx); }, 1e-12);
  add("qcomplex.hermite_orthogonality", "<H_pr, H_mn> = pi p! r! delta delta, p,r<=6",
      [&] { return checks::complex_hermite_orthogonality(6); }, 1e-12);
  add("qcomplex.hermite_roundtrip", "z^p zbar^r -> H_pr expansion -> z^p zbar^r, N<=6",
      [&] { return checks::hermite_roundtrip(6); }, 1e-10);
  add_lower("qcomplex.mixed_gram_nonsingular", "min eig / trace of Gram{z_q^k zbar_q^h}, k+h<=6",
            [&] { return checks::mixed_gram_min_ratio(6, ctx); }, 1e-10, "lower bound");
  add_lower("qcomplex.elliptic_independence", "{w^j wbar^k}_{j+k=n} independent, n<=8",
            [&] { return checks::elliptic_min_singular_ratio(8); }, 1e-10, "lower bound on singular value ratio");
  add_lower("qcomplex.figure1_count", "(depth+1)^2 grid points per seed, 9 seeds, depth 6, q=0.6",
            [&] {
              const auto g = qgrid_generate(figure1_seeds(), 6, QContext(0.6));
              return (g.generated == 9 * 49 && g.per_seed() == 49 && g.closure_holds()) ? 1.0 : 0.0;
            },
            0.5, "1 when the count and the closure property hold");

  add("qhermite.explicit_vs_recurrence", "explicit H_k = recurrence H_k, k<=12",
      [&] { return checks::hermite_explicit_vs_recurrence(12, ctx); }, 1e-10);
  add("qhermite.annihilation", "D_t H_k = (q+1)[k]_q H_{k-1}, k<=10", [&] { return checks::hermite_annihilate(10, ctx); },
      1e-9);
  add("qhermite.creation", "H_k = ((q+1)t - q^k D) H_{k-1}; H_k(qt) = q^k ((q+1)t - D) H_{k-1}, k<=10",
      [&] { return checks::hermite_create(10, ctx); }, 1e-9);
  add("qhermite.eigen_equation", "(D^2 - (q+1) t D) H_k = -(q+1) [k]_q q^{-k} H_k(qt), k<=10",
      [&] { return checks::hermite_eigen(10, ctx); }, 1e-9);
  add("qhermite.parity", "H_k(-t) = (-1)^k H_k(t), k<=12", [&] { return checks::hermite_parity(12, ctx); }, 0.0);
  add("qhermite.weight_relation", "H_k(qt) e(-q^2 t^2) = -q^k D_t[H_{k-1} e(-t^2)], k<=4",
      [&] { return checks::hermite_weight_relation(4, ctx); }, 1e-7);
  add("qhermite.orthogonality", "J int H_k H_l e_{q^2}(-t^2) d_q t = delta_kl Lambda_k, k,l<=8",
      [&] { return checks::hermite_orthogonality(8, ctx); }, 1e-6);
  add("qhermite.classical_limit", "H_k -> physicists' Hermite at q = 1 - 1e-6, k<=5",
      [&] { return checks::hermite_classical_limit(5, 1.0 - 1e-6); }, 1e-3);

  add("qfock.basis_orthogonality", "<z_q^n, z_q^m>_F = [n]_q! delta_nm, n,m<=20",
      [&] { return checks::fock_basis_orthogonality(20, ctx); }, 1e-15);
  add_lower("qfock.positivity", "<f,f>_F > 0, 100 random f", [&] { return checks::fock_min_norm(100, seed, ctx); }, 0.0,
            "lower bound");
  add("qfock.reproducing", "<f, K_q(., w)>_F = f(w_q)", [&] { return checks::fock_reproducing(10, seed, ctx); }, 1e-8);
  add("qfock.commutator", "[a, a^dagger] z_q^n = [D_z, X_q] z_q^n = q^n z_q^n, n<=20",
      [&] { return checks::fock_commutator(20, ctx); }, 1e-12);
  add("qfock.adjoint", "<D_z R, Q>_F = <R, X_q Q>_F", [&] { return checks::fock_adjoint(10, seed, ctx); }, 1e-10);
  add_lower("qfock.oscillator_not_adjoint", "|<a 1, z>_F - <1, a^dagger z>_F|",
            [&] { return checks::fock_oscillator_gap(ctx); }, 1e-3, "lower bound");
  add("qfock.operator_polynomial", "coefficient X_q, P_q = polynomial z o M_q^y, -i D_z, n<=10",
      [&] { return checks::fock_operator_polynomial(10, 5, seed, ctx); }, 1e-12);
  add("qfock.kernel_classical", "K_q(z,w) -> exp(z wbar) at q=0.999, |z|,|w|<=0.5",
      [&] { return checks::fock_kernel_classical(10, seed, 0.999); }, 1e-3);

  const int image_modes = std::max(modes, 1);
  add("qbargmann.basis_image", "B_q H~_m = z_q^m / sqrt([m]_q!), m<=10",
      [&] { return checks::bargmann_basis_image(10, image_modes, ctx); }, 1e-7);
  add("qbargmann.unitarity", "Gram{B_q H~_m}_F = I, m<=8",
      [&] { return checks::bargmann_unitarity(std::min(modes, 9), ctx); }, 1e-7);
  add("qbargmann.parseval", "||B_q f||_F = ||f||_{L2_q}",
      [&] { return checks::bargmann_parseval(10, std::min(modes, 9), seed, ctx); }, 1e-7);
  add("qbargmann.linearity", "B_q(alpha f + g) = alpha B_q f + B_q g",
      [&] { return checks::bargmann_linearity(modes, seed, ctx); }, 1e-10);
  add("qbargmann.coherent_overlap", "<Phi_z, Phi_w> = K_q(z,w); <Phi_z, H~_n> = z_q^n/sqrt([n]!)",
      [&] { return checks::bargmann_coherent_overlap(5, modes, seed, ctx); }, 1e-6);
  add("qbargmann.tensor_basis_image", "B^(2)(H~_k x H~_h) = e_kh, k,h<=4",
      [&] { return checks::tensor_basis_image(4, ctx); }, 1e-7);
  add("qbargmann.tensor_unitarity", "Gram{B^(2)(H~_k x H~_h)} = I, k,h<=4",
      [&] { return checks::tensor_unitarity(4, ctx); }, 1e-6);
  add("qbargmann.tensor_factorization", "B^(2)(u x v) = B_q u (x) B_q v",
      [&] { return checks::tensor_factorization(5, seed, ctx); }, 1e-8);

  std::sort(out.entries.begin(), out.entries.end(),
            [](const VerifyEntry& a, const VerifyEntry& b) { return a.name < b.name; });
  return out;
}

}  // namespace qfock
