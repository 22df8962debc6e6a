#include "qfock/qnumbers.hpp"

#include <cmath>
#include <string>

namespace qfock {

double q_number(double alpha, double base) {
  if (!(base > 0.0)) throw DomainError("q_number: base must be positive");
  if (base == 1.0) return alpha;
  // expm1 keeps full relative accuracy as base -> 1.
  const double lb = std::log(base);
  return std::expm1(alpha * lb) / std::expm1(lb);
}

double q_number(double alpha, const QContext& ctx) { return q_number(alpha, ctx.q()); }

double q_factorial(int n, double base) {
  if (n < 0) throw DomainError("q_factorial: n must be non-negative");
  double r = 1.0;
  for (int m = 1; m <= n; ++m) r *= q_number(m, base);
  return r;
}

double q_factorial(int n, const QContext& ctx) { return q_factorial(n, ctx.q()); }

double q_binomial(int n, int k, double base) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("q_binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
  }
  return q_factorial(n, base) / (q_factorial(n - k, base) * q_factorial(k, base));
}

double q_binomial(int n, int k, const QContext& ctx) { return q_binomial(n, k, ctx.q()); }

double q_bracket_gap(int n, const QContext& ctx) {
  if (n < 0) throw DomainError("q_bracket_gap: n must be non-negative");
  return q_number(n + 1, ctx) - q_number(n, ctx);
}

}  // namespace qfock
