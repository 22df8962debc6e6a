#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "qfock/context.hpp"

namespace qfock {

/**
 * Jackson q-integral over [a, b], evaluated as [0,b] - [0,a] with
 *   J int_0^a f(t) d_q t = (1-q) a sum_{k=0}^{level} f(a q^k) q^k.
 *
 * Summation stops early once weight * |f| stays below `cutoff` for three
 * consecutive nodes; set cutoff = 0 to always use all level+1 nodes.
 */
class JacksonQuadrature {
 public:
  JacksonQuadrature(double a, double b, const QContext& ctx, double cutoff = 1e-18);
  JacksonQuadrature(double a, double b, int level, const QContext& ctx, double cutoff = 1e-18);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  int level() const noexcept { return level_; }
  double cutoff() const noexcept { return cutoff_; }
  const QContext& ctx() const noexcept { return ctx_; }

 private:
  double a_;
  double b_;
  int level_;
  double cutoff_;
  QContext ctx_;
};

struct QuadratureValue {
  double value = 0.0;
  int nodes_used = 0;   ///< across both half-integrals
  bool truncated = false;  ///< true when the node cap was hit before the cutoff
};

namespace detail {

template <class F>
QuadratureValue jackson_half(F& f, double a, int level, double q, double cutoff) {
  QuadratureValue out;
  if (a == 0.0) return out;
  const double scale = (1.0 - q) * a;
  double qk = 1.0;
  double sum = 0.0;
  int quiet = 0;
  int k = 0;
  for (; k <= level; ++k) {
    const double t = a * qk;
    const double term = f(t) * qk;
    sum += term;
    if (cutoff > 0.0 && std::abs(scale * term) < cutoff) {
      if (++quiet >= 3) {
        ++k;
        break;
      }
    } else {
      quiet = 0;
    }
    qk *= q;
  }
  out.value = scale * sum;
  out.nodes_used = k;
  out.truncated = (k > level) && quiet < 3;
  return out;
}

}  // namespace detail

template <class F>
QuadratureValue jackson_integral(F&& f, const JacksonQuadrature& quad) {
  const double q = quad.ctx().q();
  auto hb = detail::jackson_half(f, quad.b(), quad.level(), q, quad.cutoff());
  auto ha = detail::jackson_half(f, quad.a(), quad.level(), q, quad.cutoff());
  return {hb.value - ha.value, hb.nodes_used + ha.nodes_used, hb.truncated || ha.truncated};
}

/**
 * The symmetric node set {s * lambda * q^j : s = +/-1, 0 <= j <= depth} with
 * Jackson weights (1-q) lambda q^j, so that
 *   J int_{-lambda}^{lambda} f d_q t = sum_j w_j (f(t_j^+) + f(t_j^-)).
 *
 * Flat index i = 2 j + (s < 0): ascending j, the positive node first. Every
 * nodewise sum in the library walks this order.
 */
class JacksonNodes {
 public:
  JacksonNodes(double lambda, int depth, const QContext& ctx);
  /// lambda = 1/sqrt(1-q^2), depth = ctx.quad_max_level().
  explicit JacksonNodes(const QContext& ctx);

  double lambda() const noexcept { return lambda_; }
  int depth() const noexcept { return depth_; }
  double q() const noexcept { return q_; }
  std::size_t size() const noexcept { return t_.size(); }

  /// 0 <= j <= depth
  static std::size_t index(int j, bool negative) { return 2 * static_cast<std::size_t>(j) + (negative ? 1 : 0); }
  static int level_of(std::size_t i) { return static_cast<int>(i / 2); }

  double t(std::size_t i) const { return t_[i]; }
  double weight(std::size_t i) const { return w_[i]; }
  const std::vector<double>& points() const noexcept { return t_; }
  const std::vector<double>& weights() const noexcept { return w_; }

  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < t_.size(); ++i) s += w_[i] * f(t_[i]);
    return s;
  }

  friend bool operator==(const JacksonNodes& a, const JacksonNodes& b) {
    return a.lambda_ == b.lambda_ && a.depth_ == b.depth_ && a.q_ == b.q_;
  }

 private:
  double lambda_;
  int depth_;
  double q_;
  std::vector<double> t_;
  std::vector<double> w_;
};

}  // namespace qfock
