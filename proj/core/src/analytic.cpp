#include "qfock/analytic.hpp"

#include <cmath>

#include "qfock/qnumbers.hpp"

namespace qfock {
namespace {

// prod_{l<n} (x + sign i q^l y), expanded factor by factor on a dense
// triangle. No cleanup: the y-heavy coefficients are tiny (q^{b(b-1)/2}) but
// D_zbar multiplies them by [b]_{1/q}, so they must survive.
BivarPoly product_monomial(int n, double q, double sign) {
  // c[b] = coefficient of x^{m-b} y^b after m factors.
  std::vector<cplx> c{1.0};
  double ql = 1.0;
  for (int l = 0; l < n; ++l) {
    std::vector<cplx> next(c.size() + 1, 0.0);
    const cplx iy(0.0, sign * ql);
    for (std::size_t b = 0; b < c.size(); ++b) {
      next[b] += c[b];
      next[b + 1] += iy * c[b];
    }
    c = std::move(next);
    ql *= q;
  }
  BivarPoly p;
  for (int b = 0; b <= n; ++b) p.add_term(n - b, b, c[b]);
  return p;
}

BivarPoly complex_derivative(const BivarPoly& p, const QContext& ctx, double sign) {
  const double q = ctx.q();
  const double inv_q = 1.0 / q;
  const cplx half_i(0.0, 0.5 * sign);
  BivarPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e.first > 0) out.add_term(e.first - 1, e.second, 0.5 * q_number(e.first, q) * c);
    if (e.second > 0) out.add_term(e.first, e.second - 1, half_i * q_number(e.second, inv_q) * c);
  }
  return out;
}

}  // namespace

BivarPoly zq_monomial(int n, const QContext& ctx) {
  if (n < 0) throw DomainError("zq_monomial: n must be non-negative");
  return product_monomial(n, ctx.q(), +1.0);
}

BivarPoly zq_conjugate_monomial(int n, const QContext& ctx) {
  if (n < 0) throw DomainError("zq_conjugate_monomial: n must be non-negative");
  return product_monomial(n, ctx.q(), -1.0);
}

cplx zq_value(int n, double x, double y, const QContext& ctx) {
  cplx v = 1.0;
  double ql = 1.0;
  for (int l = 0; l < n; ++l) {
    v *= cplx(x, ql * y);
    ql *= ctx.q();
  }
  return v;
}

BivarPoly dz(const BivarPoly& p, const QContext& ctx) { return complex_derivative(p, ctx, -1.0); }

BivarPoly dzbar(const BivarPoly& p, const QContext& ctx) { return complex_derivative(p, ctx, +1.0); }

ZBarBasisPoly zq_expansion_coeffs(int n, const QContext& ctx) {
  if (n < 0) throw DomainError("zq_expansion_coeffs: n must be non-negative");
  // c[i] holds the coefficient of z^i zbar^{m-i} after m factors.
  std::vector<double> c{1.0};
  double ql = 1.0;
  for (int l = 1; l <= n; ++l) {
    ql *= ctx.q();
    const double A = 0.5 * (1.0 + ql);
    const double B = 0.5 * (1.0 - ql);
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += A * c[i];
      next[i] += B * c[i];
    }
    c = std::move(next);
  }
  ZBarBasisPoly out;
  for (int i = 0; i <= n; ++i) out.add_term(i, n - i, c[i]);
  return out;
}

ZBarBasisPoly zq_monomial_zbar(int n, const QContext& ctx) {
  if (n < 0) throw DomainError("zq_monomial_zbar: n must be non-negative");
  if (n == 0) return ZBarBasisPoly::constant(1.0);
  ZBarBasisPoly out;
  const auto cofactor = zq_expansion_coeffs(n - 1, ctx);
  for (const auto& [e, c] : cofactor.terms()) {
    out.add_term(e.first + 1, e.second, c);
  }
  return out;
}

AnalyticityResidual analyticity_residual(int n, const QContext& ctx) {
  if (n < 0) throw DomainError("analyticity_residual: n must be non-negative");
  const double q = ctx.q();
  const double inv_q = 1.0 / q;
  const BivarPoly p = zq_monomial(n, ctx);
  const BivarPoly lower = n > 0 ? zq_monomial(n - 1, ctx) * q_number(n, q) : BivarPoly();
  const BivarPoly rz = dz(p, ctx) - lower;
  const BivarPoly rzb = dzbar(p, ctx);

  // Output coefficient (a, b) of D_z / D_zbar collects 1/2 [a+1]_q c_{a+1,b}
  // and 1/2 [b+1]_{1/q} c_{a,b+1}; their magnitudes set the scale.
  auto scale = [&](int a, int b) {
    return 0.5 * q_number(a + 1, q) * std::abs(p.coeff(a + 1, b)) +
           0.5 * q_number(b + 1, inv_q) * std::abs(p.coeff(a, b + 1));
  };
  AnalyticityResidual r;
  r.n = n;
  for (const auto& [e, c] : rzb.terms()) {
    const double s = scale(e.first, e.second);
    r.dzbar = std::max(r.dzbar, s > 0.0 ? std::abs(c) / s : std::abs(c));
  }
  for (const auto& [e, c] : rz.terms()) {
    const double s = scale(e.first, e.second) + std::abs(lower.coeff(e.first, e.second));
    r.dz = std::max(r.dz, s > 0.0 ? std::abs(c) / s : std::abs(c));
  }
  return r;
}

DominationReport modulus_domination_check(int n, const std::vector<std::pair<double, double>>& samples,
                                          const QContext& ctx) {
  DominationReport r;
  r.n = n;
  r.samples = samples.size();
  for (const auto& [x, y] : samples) {
    const double lhs = std::abs(zq_value(n, x, y, ctx));
    const double rhs = std::pow(std::hypot(x, y), n);
    if (lhs > rhs * (1.0 + 1e-12)) ++r.failures;
    if (rhs > 0.0) r.worst_ratio = std::max(r.worst_ratio, lhs / rhs);
  }
  return r;
}

}  // namespace qfock
