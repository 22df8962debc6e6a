#include "qfock/context.hpp"

#include <cmath>

namespace qfock {

QContext::QContext(double q, TruncationPolicy policy) : q_(q), policy_(policy) {
  if (!(q > 0.0 && q < 1.0)) {
    throw ConfigError("q must lie in the open interval (0,1), got " + std::to_string(q));
  }
  if (policy_.series_max_terms < 1) throw ConfigError("series_max_terms must be >= 1");
  if (policy_.quad_max_level < 1) throw ConfigError("quad_max_level must be >= 1");
  if (!(policy_.series_term_tol > 0.0)) throw ConfigError("series_term_tol must be > 0");
  if (!(policy_.default_tol > 0.0)) throw ConfigError("default_tol must be > 0");
}

QContext QContext::with_quad_level(int level) const {
  TruncationPolicy p = policy_;
  p.quad_max_level = level;
  return QContext(q_, p);
}

QContext QContext::with_series_terms(int terms) const {
  TruncationPolicy p = policy_;
  p.series_max_terms = terms;
  return QContext(q_, p);
}

double QContext::lambda() const noexcept { return 1.0 / std::sqrt(1.0 - q_ * q_); }

}  // namespace qfock
