#include "qfock/qexp.hpp"

#include <cmath>
#include <limits>

#include "qfock/qnumbers.hpp"

namespace qfock {

QExpVariant QExpVariant::big(double base) { return {QExpKind::BigE, base, base}; }

QExpVariant QExpVariant::small(double base) { return {QExpKind::SmallE, base, base}; }

QExpVariant QExpVariant::small_mixed(double base, double factorial_base) {
  return {QExpKind::SmallE, base, factorial_base};
}

void QExpVariant::validate() const {
  if (!(base > 0.0 && base < 1.0)) throw ConfigError("QExpVariant: base must lie in (0,1)");
  if (!(factorial_base > 0.0 && factorial_base < 1.0)) {
    throw ConfigError("QExpVariant: factorial_base must lie in (0,1)");
  }
}

QExpVariant canonical_weight_variant(const QContext& ctx) {
  const double q2 = ctx.q() * ctx.q();
  return QExpVariant::small(q2);
}

QExpVariant mixed_weight_variant(const QContext& ctx) {
  return QExpVariant::small_mixed(ctx.q() * ctx.q(), ctx.q());
}

SeriesValue q_exp_series(const QExpVariant& v, double x, const QContext& ctx) {
  v.validate();
  if (v.kind == QExpKind::BigE && !(std::abs(x) < 1.0 / (1.0 - v.factorial_base))) {
    throw DomainError("E_q: |x| must be below 1/(1-q) for the series to converge");
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double tol = ctx.series_term_tol();

  SeriesValue out;
  double sum = 1.0;
  double peak = 1.0;
  // term_j = gauss_j * x^j / [j]!, built incrementally:
  // term_j = term_{j-1} * x * base^{j-1} / [j]  (SmallE)
  double term = 1.0;
  double gauss_step = 1.0;  // base^{j-1}
  int j = 1;
  for (; j < ctx.series_max_terms(); ++j) {
    term *= x / q_number(j, v.factorial_base);
    if (v.kind == QExpKind::SmallE) {
      term *= gauss_step;
      gauss_step *= v.base;
    }
    sum += term;
    const double a = std::abs(term);
    if (a > peak) peak = a;
    if (a < tol * std::abs(sum) || a < eps * eps * peak || a == 0.0) {
      out.converged = true;
      ++j;
      break;
    }
  }
  out.value = sum;
  out.terms = j;
  return out;
}

double q_exp(const QExpVariant& variant, double x, const QContext& ctx) {
  return q_exp_series(variant, x, ctx).value;
}

double q_exp_product(const QExpVariant& v, double x, const QContext& ctx) {
  v.validate();
  if (v.factorial_base != v.base) {
    throw ConfigError("q_exp_product: the Euler product needs factorial_base == base");
  }
  const double b = v.base;
  if (v.kind == QExpKind::BigE && !(std::abs(x) < 1.0 / (1.0 - b))) {
    throw DomainError("E_q: |x| must be below 1/(1-q) for the product to converge");
  }
  const double sign = v.kind == QExpKind::BigE ? -1.0 : 1.0;
  double prod = 1.0;
  double bk = 1.0;
  for (int k = 0; k < ctx.series_max_terms(); ++k) {
    const double step = sign * (1.0 - b) * bk * x;
    prod *= 1.0 + step;
    if (std::abs(step) < ctx.series_term_tol() || prod == 0.0) break;
    bk *= b;
  }
  return v.kind == QExpKind::BigE ? 1.0 / prod : prod;
}

}  // namespace qfock
