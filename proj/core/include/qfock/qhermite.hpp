#pragma once

#include <vector>

#include "qfock/context.hpp"
#include "qfock/gram.hpp"
#include "qfock/jackson.hpp"
#include "qfock/qexp.hpp"
#include "qfock/real_poly.hpp"

namespace qfock {

/// H_k^q as a dense polynomial in t. Only exponents k, k-2, ... are nonzero.
struct QHermitePoly {
  int k = 0;
  double q = 0.5;
  RealPoly poly;

  /// a_k^j, the coefficient of t^{k-2j}.
  double a(int j) const { return poly.coeff(k - 2 * j); }
  double operator()(double t) const { return poly(t); }
};

/**
 * H_0 = 1, H_1 = (q+1) t,
 * H_{k+1} = (q+1) t H_k - (q+1) [k]_q q^{k+shift} H_{k-1}.
 *
 * shift = 1 is the recurrence consistent with the explicit formula, the
 * ladder identities and the norms; other shifts are accepted so that tests can
 * show how the family breaks.
 */
std::vector<QHermitePoly> qhermite_recurrence(int k_max, const QContext& ctx, int shift = 1);

/// Coefficients (q+1)^{k-j} [k]! / ([k-2j]! [-2j][-2j+2]...[-2]) on t^{k-2j}.
QHermitePoly qhermite_explicit(int k, const QContext& ctx);
/// The explicit formula in long double; used for node evaluation.
RealPolyLD qhermite_explicit_ld(int k, const QContext& ctx);

struct PolyResidual {
  RealPoly residual;
  double abs = 0.0;    ///< max |coefficient| of the residual
  double scale = 0.0;  ///< max |coefficient| among the compared terms
  double rel() const { return scale > 0.0 ? abs / scale : abs; }
};

/// D_t H_k - (q+1)[k]_q H_{k-1}, k >= 1.
PolyResidual qhermite_annihilate(int k, const QContext& ctx);

struct CreationResidual {
  PolyResidual left;   ///< H_k - ((q+1)t - q^k D) H_{k-1}
  PolyResidual right;  ///< H_k(qt) - q^k ((q+1)t - D) H_{k-1}
};
CreationResidual qhermite_create(int k, const QContext& ctx);

/// lambda_k = [k]_q q^{-k}.
double qhermite_eigenvalue(int k, const QContext& ctx);

/// (D^2 - (q+1) t D) H_k + (q+1) lambda_k H_k(q t), k >= 0.
PolyResidual qhermite_eigencheck(int k, const QContext& ctx);

struct WeightRelation {
  int k = 0;
  double max_residual = 0.0;  ///< over nodes lambda q^j, j >= 1, with |t| >= 1e-3, both signs
  int nodes_checked = 0;
  double endpoint_lhs = 0.0;  ///< H_k(q lambda) e(-q^2 lambda^2)
  double endpoint_rhs = 0.0;  ///< -q^k D[H_{k-1} e(-t^2)] at t = lambda
};

/// H_k(qt) e(-q^2 t^2) = -q^k D_t [H_{k-1}(t) e(-t^2)], with e the chosen
/// e_{q^2} reading evaluated by its series.
WeightRelation weight_relation_check(int k, const QContext& ctx, const QExpVariant& variant);
WeightRelation weight_relation_check(int k, const QContext& ctx);

/// Residual of D_t e(-t^2) + (q+1) t e(-q^{2*dilated} t^2) at t; dilated selects
/// whether the right-hand weight is taken at q t.
double weight_derivative_residual(double t, const QContext& ctx, const QExpVariant& variant, bool dilated);

/**
 * The weight e_{q^2}(-t^2) on the symmetric nodes t = +/- lambda q^j, from
 * its Euler product prod_{m>=j} (1 - q^{2m}). The value at j = 0 is exactly 0.
 * Ordered like JacksonNodes.
 */
std::vector<long double> hermite_node_weights(const JacksonNodes& nodes);

/// Lambda_k = 2 (q+1)^{k-1} q^{(k+1)(k+2)/2} [k]_q! Gamma_{q^2}(1/2).
double hermite_norm(int k, const QContext& ctx);

struct OrthogonalityValue {
  double value = 0.0;
  double target = 0.0;
  double gap = 0.0;  ///< |value - target| / sqrt(Lambda_k Lambda_l)
};

/// J int_{-lambda}^{lambda} H_k H_l e_{q^2}(-t^2) d_q t against delta_{kl} Lambda_k.
OrthogonalityValue qhermite_orthogonality(int k, int l, const QContext& ctx);

/// G_{kl} for k, l <= k_max with target diag(Lambda_k).
GramReport hermite_gram(int k_max, const QContext& ctx);

/// H~_k = H_k sqrt(e_{q^2}(-t^2)) / sqrt(Lambda_k) on the symmetric nodes.
struct QHermiteFunction {
  int k = 0;
  double norm = 0.0;  ///< Lambda_k
  std::vector<double> values;
};

QHermiteFunction qhermite_function(int k, const QContext& ctx);
/// H~_0 .. H~_{k_max} on the same node set.
std::vector<QHermiteFunction> qhermite_functions(int k_max, const JacksonNodes& nodes, const QContext& ctx);

}  // namespace qfock
