#pragma once

#include <string>

#include "qfock/context.hpp"

namespace qfock {

/// Gamma_b(t) from the infinite product
///   (1-b)^{1-t} prod_{k>=0} (1 - b^{k+1}) / (1 - b^{t+k}),
/// truncated once b^k < series_term_tol or at series_max_terms.
/// Throws DomainError for t <= 0.
double q_gamma(double t, double base, const QContext& ctx);
double q_gamma(double t, const QContext& ctx);

/// The Jackson-integral representation
///   J int_0^{1/(1-q)} t^{z-1} e_q(-q t) d_q t,
/// an independent route to Gamma_q(z), z > 0.
double q_gamma_integral(double z, const QContext& ctx);

/// Both sides of
///   J int_{-lambda}^{lambda} t^{nu-1} e_{q^2}(-t^2) d_q t = 2/(q+1) q^nu Gamma_{q^2}(nu/2).
struct MomentCheck {
  double nu = 0.0;
  double lambda = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_gap = 0.0;
  bool skipped = false;
  std::string note;
};

/// For odd integer nu the integrand is even and the signed two-sided sum is
/// compared. Even integer nu makes the signed sum vanish by parity; the entry
/// is returned with skipped = true. Non-integer nu uses |t|^{nu-1}.
MomentCheck q_gamma_moment_check(double nu, const QContext& ctx);

}  // namespace qfock
