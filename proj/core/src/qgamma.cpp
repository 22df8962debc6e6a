#include "qfock/qgamma.hpp"

#include <cmath>

#include "qfock/jackson.hpp"
#include "qfock/qexp.hpp"

namespace qfock {

double q_gamma(double t, double base, const QContext& ctx) {
  if (!(t > 0.0)) throw DomainError("q_gamma: t must be positive");
  if (!(base > 0.0 && base < 1.0)) throw DomainError("q_gamma: base must lie in (0,1)");
  // Accumulate in log space; each factor is 1 + O(b^k).
  double log_g = (1.0 - t) * std::log1p(-base);
  double bk = 1.0;  // b^k
  const double bt = std::pow(base, t);
  for (int k = 0; k < ctx.series_max_terms(); ++k) {
    log_g += std::log1p(-bk * base) - std::log1p(-bk * bt);
    if (bk < ctx.series_term_tol()) break;
    bk *= base;
  }
  return std::exp(log_g);
}

double q_gamma(double t, const QContext& ctx) { return q_gamma(t, ctx.q(), ctx); }

double q_gamma_integral(double z, const QContext& ctx) {
  if (!(z > 0.0)) throw DomainError("q_gamma_integral: z must be positive");
  const double q = ctx.q();
  const auto e_q = QExpVariant::small(q);
  auto integrand = [&](double t) { return std::pow(t, z - 1.0) * q_exp(e_q, -q * t, ctx); };
  // cutoff 0: the integrand is smooth and the node count is governed by the level.
  JacksonQuadrature quad(0.0, 1.0 / (1.0 - q), ctx, 0.0);
  return jackson_integral(integrand, quad).value;
}

MomentCheck q_gamma_moment_check(double nu, const QContext& ctx) {
  if (!(nu > 0.0)) throw DomainError("q_gamma_moment_check: nu must be positive");
  const double q = ctx.q();
  MomentCheck out;
  out.nu = nu;
  out.lambda = ctx.lambda();
  out.rhs = 2.0 / (q + 1.0) * std::pow(q, nu) * q_gamma(nu / 2.0, q * q, ctx);

  const bool integer = std::floor(nu) == nu;
  if (integer && static_cast<long long>(nu) % 2 == 0) {
    out.skipped = true;
    out.note = "even nu: t^{nu-1} is odd, the symmetric Jackson sum vanishes by parity";
    return out;
  }

  const auto weight = canonical_weight_variant(ctx);
  JacksonNodes nodes(ctx);
  out.lhs = nodes.integrate([&](double t) {
    const double power = integer ? std::pow(t, nu - 1.0) : std::pow(std::abs(t), nu - 1.0);
    return power * q_exp(weight, -t * t, ctx);
  });
  if (!integer) out.note = "non-integer nu: |t|^{nu-1} used on the negative half";
  out.rel_gap = std::abs(out.lhs - out.rhs) / std::abs(out.rhs);
  return out;
}

}  // namespace qfock
