#pragma once

#include <stdexcept>
#include <string>

namespace qfock {

/// Raised when an operation is evaluated outside its domain (x = 0 for the
/// black-box q-derivative, |x| outside the E_q disc, t <= 0 for Gamma_q, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for invalid configuration values (q outside (0,1), non-positive
/// truncation limits, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Truncation and tolerance knobs shared by every series and quadrature.
struct TruncationPolicy {
  int series_max_terms = 100000;
  double series_term_tol = 1e-17;
  int quad_max_level = 400;
  double default_tol = 1e-10;
};

/**
 * The deformation parameter q in (0,1) together with the truncation policy.
 *
 * A QContext is an immutable value; the `with_*` helpers return modified
 * copies. Construction validates every field and throws ConfigError.
 */
class QContext {
 public:
  explicit QContext(double q, TruncationPolicy policy = {});

  double q() const noexcept { return q_; }
  int series_max_terms() const noexcept { return policy_.series_max_terms; }
  double series_term_tol() const noexcept { return policy_.series_term_tol; }
  int quad_max_level() const noexcept { return policy_.quad_max_level; }
  double default_tol() const noexcept { return policy_.default_tol; }
  const TruncationPolicy& policy() const noexcept { return policy_; }

  QContext with_q(double q) const { return QContext(q, policy_); }
  QContext with_quad_level(int level) const;
  QContext with_series_terms(int terms) const;

  /// lambda = 1/sqrt(1 - q^2), the half-width of the symmetric Jackson domain.
  double lambda() const noexcept;

  friend bool operator==(const QContext&, const QContext&) = default;

 private:
  double q_;
  TruncationPolicy policy_;
};

}  // namespace qfock
