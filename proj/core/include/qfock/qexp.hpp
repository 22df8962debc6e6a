#pragma once

#include "qfock/context.hpp"

namespace qfock {

enum class QExpKind {
  BigE,    ///< E_b(x) = sum x^k / [k]!
  SmallE,  ///< e_b(x) = sum b^{j(j-1)/2} x^j / [j]!
};

/**
 * Selects one of the Jackson q-exponentials.
 *
 * `base` enters the Gaussian factor b^{j(j-1)/2}. `factorial_base` is the
 * base of the [j]! in the denominator. Two readings of e_{q^2} are in
 * circulation: substituting q -> q^2 everywhere (factorial_base = q^2), and
 * the mixed form sum q^{j(j-1)} u^j / [j]_q! (factorial_base = q). Both are
 * representable; canonical_weight_variant() picks the one that satisfies the
 * q-Hermite weight identity.
 */
struct QExpVariant {
  QExpKind kind = QExpKind::SmallE;
  double base = 0.5;
  double factorial_base = 0.5;

  static QExpVariant big(double base);
  static QExpVariant small(double base);
  static QExpVariant small_mixed(double base, double factorial_base);

  /// Throws ConfigError unless both bases lie in (0,1).
  void validate() const;
};

/// e_{q^2} with factorial base q^2, the weight used by the q-Hermite family.
QExpVariant canonical_weight_variant(const QContext& ctx);
/// e_{q^2} with factorial base q, kept for comparison.
QExpVariant mixed_weight_variant(const QContext& ctx);

struct SeriesValue {
  double value = 0.0;
  int terms = 0;
  bool converged = false;
};

/**
 * Partial sum of the defining series. Summation stops once
 * |term| < series_term_tol * |partial sum|, once |term| drops below the
 * rounding floor of the largest term seen, or at series_max_terms.
 *
 * Throws DomainError for BigE when |x| >= 1/(1 - base).
 */
SeriesValue q_exp_series(const QExpVariant& variant, double x, const QContext& ctx);

double q_exp(const QExpVariant& variant, double x, const QContext& ctx);

/// Euler-product form, valid when factorial_base == base:
///   E_b(x) = 1 / prod_{k>=0} (1 - (1-b) b^k x),
///   e_b(x) = prod_{k>=0} (1 + (1-b) b^k x).
/// e_b vanishes exactly at x = b^{-k}/(b - 1); the product reproduces that.
double q_exp_product(const QExpVariant& variant, double x, const QContext& ctx);

}  // namespace qfock
