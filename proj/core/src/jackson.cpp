#include "qfock/jackson.hpp"

namespace qfock {

JacksonQuadrature::JacksonQuadrature(double a, double b, const QContext& ctx, double cutoff)
    : JacksonQuadrature(a, b, ctx.quad_max_level(), ctx, cutoff) {}

JacksonQuadrature::JacksonQuadrature(double a, double b, int level, const QContext& ctx,
                                     double cutoff)
    : a_(a), b_(b), level_(level), cutoff_(cutoff), ctx_(ctx) {
  if (level < 0) throw ConfigError("JacksonQuadrature: level must be >= 0");
  if (cutoff < 0.0) throw ConfigError("JacksonQuadrature: cutoff must be >= 0");
}

JacksonNodes::JacksonNodes(double lambda, int depth, const QContext& ctx)
    : lambda_(lambda), depth_(depth), q_(ctx.q()) {
  if (!(lambda > 0.0)) throw ConfigError("JacksonNodes: lambda must be positive");
  if (depth < 0) throw ConfigError("JacksonNodes: depth must be >= 0");
  t_.reserve(2 * static_cast<std::size_t>(depth + 1));
  w_.reserve(t_.capacity());
  double qj = 1.0;
  for (int j = 0; j <= depth; ++j) {
    const double t = lambda * qj;
    const double w = (1.0 - q_) * lambda * qj;
    t_.push_back(t);
    w_.push_back(w);
    t_.push_back(-t);
    w_.push_back(w);
    qj *= q_;
  }
}

JacksonNodes::JacksonNodes(const QContext& ctx)
    : JacksonNodes(ctx.lambda(), ctx.quad_max_level(), ctx) {}

}  // namespace qfock
