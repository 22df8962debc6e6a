#pragma once

#include <utility>
#include <vector>

#include "qfock/context.hpp"
#include "qfock/polynomial.hpp"

namespace qfock {

/// z_q^n = prod_{l<n} (x + i q^l y) as an exact (x, y) polynomial.
BivarPoly zq_monomial(int n, const QContext& ctx);

/// conj(z_q^n) = prod_{l<n} (x - i q^l y).
BivarPoly zq_conjugate_monomial(int n, const QContext& ctx);

/// Running-product value of z_q^n at (x, y); no polynomial expansion.
cplx zq_value(int n, double x, double y, const QContext& ctx);
inline cplx zq_value(int n, cplx z, const QContext& ctx) { return zq_value(n, z.real(), z.imag(), ctx); }

/// D_z = (D_x^q - i D_y^{1/q}) / 2, monomial-wise:
///   x^a y^b -> ([a]_q x^{a-1} y^b - i [b]_{1/q} x^a y^{b-1}) / 2.
BivarPoly dz(const BivarPoly& p, const QContext& ctx);
/// D_zbar = (D_x^q + i D_y^{1/q}) / 2.
BivarPoly dzbar(const BivarPoly& p, const QContext& ctx);

/**
 * Coefficients C_{i,j} (i + j = n) of the factorization
 *   z_q^{n+1} = z * sum_{i+j=n} C_{i,j} z^i zbar^j,
 * built by convolving the factors (A_l z + B_l zbar), A_l = (1+q^l)/2,
 * B_l = (1-q^l)/2, l = 1..n. O(n^2); the 2^n subset sum is never formed.
 * Returned as the cofactor sum_{i+j=n} C_{i,j} z^i zbar^j.
 */
ZBarBasisPoly zq_expansion_coeffs(int n, const QContext& ctx);

/// z_q^n in the (z, zbar) basis (z times the cofactor above, 1 for n = 0).
ZBarBasisPoly zq_monomial_zbar(int n, const QContext& ctx);

/// Largest coefficient residual of D_zbar z_q^n = 0 and
/// D_z z_q^n = [n]_q z_q^{n-1}, each coefficient divided by the size of the
/// terms that produced it.
struct AnalyticityResidual {
  int n = 0;
  double dzbar = 0.0;
  double dz = 0.0;
};
AnalyticityResidual analyticity_residual(int n, const QContext& ctx);

struct DominationReport {
  int n = 0;
  std::size_t samples = 0;
  std::size_t failures = 0;
  double worst_ratio = 0.0;  ///< max |z_q^n| / |z|^n over samples with z != 0
  bool all_pass() const { return failures == 0; }
};

/// Checks |z_q^n(x, y)| <= |z|^n at every sample point (with a relative
/// rounding allowance of 1e-12).
DominationReport modulus_domination_check(int n, const std::vector<std::pair<double, double>>& samples,
                                          const QContext& ctx);

}  // namespace qfock
