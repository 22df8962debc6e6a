#include "qfock/qhermite.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qfock/qgamma.hpp"
#include "qfock/qnumbers.hpp"

namespace qfock {
namespace {

PolyResidual make_residual(RealPoly residual, std::initializer_list<double> scales) {
  PolyResidual r;
  r.abs = residual.max_abs_coeff();
  for (double s : scales) r.scale = std::max(r.scale, s);
  r.residual = std::move(residual);
  return r;
}

// (q+1) t p - c D p
RealPoly raise(const RealPoly& p, double q, double c) {
  return p.times_t() * (q + 1.0) - p.q_derivative(q) * c;
}

}  // namespace

std::vector<QHermitePoly> qhermite_recurrence(int k_max, const QContext& ctx, int shift) {
  if (k_max < 0) throw DomainError("qhermite_recurrence: k_max must be >= 0");
  const double q = ctx.q();
  std::vector<QHermitePoly> out;
  out.push_back({0, q, RealPoly::constant(1.0)});
  if (k_max == 0) return out;
  out.push_back({1, q, RealPoly::monomial(1, q + 1.0)});
  for (int k = 1; k < k_max; ++k) {
    const double c = (q + 1.0) * q_number(k, q) * std::pow(q, k + shift);
    RealPoly next = out[k].poly.times_t() * (q + 1.0) - out[k - 1].poly * c;
    out.push_back({k + 1, q, std::move(next)});
  }
  return out;
}

RealPolyLD qhermite_explicit_ld(int k, const QContext& ctx) {
  if (k < 0) throw DomainError("qhermite_explicit: k must be >= 0");
  const long double q = ctx.q();
  std::vector<long double> c(static_cast<std::size_t>(k) + 1, 0.0L);
  // ratio_j = [k]! / [k-2j]! / prod_{i<=j} [-2i]
  long double ratio = 1.0L;
  for (int j = 0; 2 * j <= k; ++j) {
    if (j > 0) {
      const int m = k - 2 * j;
      ratio *= q_number_sum<long double>(m + 2, q) * q_number_sum<long double>(m + 1, q);
      const long double neg = (1.0L - std::pow(q, -2.0L * j)) / (1.0L - q);
      ratio /= neg;
    }
    c[k - 2 * j] = std::pow(q + 1.0L, static_cast<long double>(k - j)) * ratio;
  }
  return RealPolyLD(std::move(c));
}

QHermitePoly qhermite_explicit(int k, const QContext& ctx) {
  return {k, ctx.q(), qhermite_explicit_ld(k, ctx).cast<double>()};
}

PolyResidual qhermite_annihilate(int k, const QContext& ctx) {
  if (k < 1) throw DomainError("qhermite_annihilate: k must be >= 1");
  const double q = ctx.q();
  const auto H = qhermite_recurrence(k, ctx);
  const RealPoly lhs = H[k].poly.q_derivative(q);
  const RealPoly rhs = H[k - 1].poly * ((q + 1.0) * q_number(k, q));
  return make_residual(lhs - rhs, {lhs.max_abs_coeff(), rhs.max_abs_coeff()});
}

CreationResidual qhermite_create(int k, const QContext& ctx) {
  if (k < 1) throw DomainError("qhermite_create: k must be >= 1");
  const double q = ctx.q();
  const double qk = std::pow(q, k);
  const auto H = qhermite_recurrence(k, ctx);
  const RealPoly l_rhs = raise(H[k - 1].poly, q, qk);
  const RealPoly r_lhs = H[k].poly.dilate(q);
  const RealPoly r_rhs = raise(H[k - 1].poly, q, 1.0) * qk;
  return {make_residual(H[k].poly - l_rhs, {H[k].poly.max_abs_coeff(), l_rhs.max_abs_coeff()}),
          make_residual(r_lhs - r_rhs, {r_lhs.max_abs_coeff(), r_rhs.max_abs_coeff()})};
}

double qhermite_eigenvalue(int k, const QContext& ctx) {
  return q_number(k, ctx) * std::pow(ctx.q(), -k);
}

PolyResidual qhermite_eigencheck(int k, const QContext& ctx) {
  if (k < 0) throw DomainError("qhermite_eigencheck: k must be >= 0");
  const double q = ctx.q();
  const auto H = qhermite_recurrence(k, ctx);
  const RealPoly& h = H[k].poly;
  const RealPoly d1 = h.q_derivative(q);
  const RealPoly lhs = d1.q_derivative(q) - d1.times_t() * (q + 1.0);
  const RealPoly rhs = h.dilate(q) * (-(q + 1.0) * qhermite_eigenvalue(k, ctx));
  return make_residual(lhs - rhs, {lhs.max_abs_coeff(), rhs.max_abs_coeff()});
}

double weight_derivative_residual(double t, const QContext& ctx, const QExpVariant& variant, bool dilated) {
  const double q = ctx.q();
  auto w = [&](double s) { return q_exp(variant, -s * s, ctx); };
  const double lhs = q_derivative(w, t, ctx);
  const double rhs = -(q + 1.0) * t * w(dilated ? q * t : t);
  return std::abs(lhs - rhs);
}

WeightRelation weight_relation_check(int k, const QContext& ctx, const QExpVariant& variant) {
  if (k < 1) throw DomainError("weight_relation_check: k must be >= 1");
  const double q = ctx.q();
  const double qk = std::pow(q, k);
  const auto H = qhermite_recurrence(k, ctx);
  auto e = [&](double s) { return q_exp(variant, -s * s, ctx); };
  auto g = [&](double t) { return H[k - 1].poly(t) * e(t); };
  auto lhs = [&](double t) { return H[k].poly(q * t) * e(q * t); };
  auto rhs = [&](double t) { return -qk * q_derivative(g, t, ctx); };

  WeightRelation r;
  r.k = k;
  const double lambda = ctx.lambda();
  double t = lambda * q;
  for (int j = 1; j <= ctx.quad_max_level() && t >= 1e-3; ++j, t *= q) {
    for (double s : {t, -t}) {
      r.max_residual = std::max(r.max_residual, std::abs(lhs(s) - rhs(s)));
      ++r.nodes_checked;
    }
  }
  r.endpoint_lhs = lhs(lambda);
  r.endpoint_rhs = rhs(lambda);
  return r;
}

WeightRelation weight_relation_check(int k, const QContext& ctx) {
  return weight_relation_check(k, ctx, canonical_weight_variant(ctx));
}

std::vector<long double> hermite_node_weights(const JacksonNodes& nodes) {
  const long double q2 = static_cast<long double>(nodes.q()) * nodes.q();
  const int depth = nodes.depth();
  // P_j = prod_{m>=j} (1 - q^{2m}), built from the tail inwards.
  std::vector<long double> tail(static_cast<std::size_t>(depth) + 1);
  long double tail_beyond = 1.0L;
  {
    long double q2m = std::pow(q2, static_cast<long double>(depth + 1));
    while (q2m > 1e-40L) {
      tail_beyond *= 1.0L - q2m;
      q2m *= q2;
    }
  }
  long double p = tail_beyond;
  long double q2j = std::pow(q2, static_cast<long double>(depth));
  for (int j = depth; j >= 0; --j) {
    p *= (j == 0) ? 0.0L : 1.0L - q2j;
    tail[j] = p;
    q2j /= q2;
  }
  std::vector<long double> w(nodes.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = tail[JacksonNodes::level_of(i)];
  return w;
}

double hermite_norm(int k, const QContext& ctx) {
  if (k < 0) throw DomainError("hermite_norm: k must be >= 0");
  const double q = ctx.q();
  return 2.0 * std::pow(q + 1.0, k - 1) * std::pow(q, 0.5 * (k + 1) * (k + 2)) * q_factorial(k, ctx) *
         q_gamma(0.5, q * q, ctx);
}

namespace {

constexpr long double kEpsLD = std::numeric_limits<long double>::epsilon();

// g_k(t_j) = H_k(t_j) e_{q^2}(-t_j^2) at the positive nodes t_j = lambda q^j.
//
// Two routes, chosen per node by a running rounding bound:
//  * the polynomial, Horner in long double, bound ~ eps sum |a_m| t^m;
//    it cancels badly next to the endpoint, where H~_k needs H_k far below
//    the size of its terms;
//  * the difference recursion g_k(q t) = q^k (g_{k-1}(qt) - g_{k-1}(t)) / ((1-q) t),
//    which is the weight relation solved for the dilated side; exact at the
//    endpoint (g_k(lambda) = 0) but it divides by t, so it blows up deep
//    in the node set.
// Each level feeds the better of the two into the next recursion step.
std::vector<std::vector<long double>> weighted_hermite_values(int k_max, const JacksonNodes& nodes,
                                                              const QContext& ctx) {
  const int J = nodes.depth();
  const long double q = ctx.q();
  const auto rho_all = hermite_node_weights(nodes);
  std::vector<long double> t(J + 1), rho(J + 1);
  for (int j = 0; j <= J; ++j) {
    t[j] = static_cast<long double>(nodes.t(JacksonNodes::index(j, false)));
    rho[j] = rho_all[JacksonNodes::index(j, false)];
  }

  std::vector<std::vector<long double>> g(k_max + 1);
  g[0] = rho;
  std::vector<long double> err(J + 1);
  for (int j = 0; j <= J; ++j) err[j] = 4 * kEpsLD * rho[j];

  for (int k = 1; k <= k_max; ++k) {
    const auto h = qhermite_explicit_ld(k, ctx);
    const long double qk = std::pow(q, static_cast<long double>(k));
    std::vector<long double> next(J + 1, 0.0L), next_err(J + 1, 0.0L);
    const auto& prev = g[k - 1];
    for (int j = 0; j <= J; ++j) {
      long double poly = 0.0L, poly_abs = 0.0L;
      for (int m = h.degree(); m >= 0; --m) {
        poly = poly * t[j] + h.coeff(m);
        poly_abs = poly_abs * t[j] + std::abs(h.coeff(m));
      }
      const long double poly_val = poly * rho[j];
      const long double poly_err = (k + 2) * kEpsLD * poly_abs * rho[j];
      if (j == 0) {
        next[j] = 0.0L;  // the weight vanishes at the endpoint
        continue;
      }
      const long double f = qk / ((1.0L - q) * t[j - 1]);
      const long double rec_val = f * (prev[j] - prev[j - 1]);
      const long double rec_err =
          f * (err[j] + err[j - 1] + kEpsLD * (std::abs(prev[j]) + std::abs(prev[j - 1]))) +
          kEpsLD * std::abs(rec_val);
      if (rec_err < poly_err) {
        next[j] = rec_val;
        next_err[j] = rec_err;
      } else {
        next[j] = poly_val;
        next_err[j] = poly_err;
      }
    }
    g[k] = std::move(next);
    err = std::move(next_err);
  }
  return g;
}

// sum_i w_i H_k(t_i) H_l(t_i) rho_i = sum_i w_i g_k g_l / rho_i for all k, l <= k_max.
std::vector<std::vector<long double>> weighted_products(int k_max, const QContext& ctx) {
  const JacksonNodes nodes(ctx);
  const auto g = weighted_hermite_values(k_max, nodes, ctx);
  const auto rho = hermite_node_weights(nodes);
  std::vector<std::vector<long double>> G(k_max + 1, std::vector<long double>(k_max + 1, 0.0L));
  for (int k = 0; k <= k_max; ++k) {
    for (int l = 0; l <= k_max; ++l) {
      if ((k + l) % 2 != 0) continue;  // odd integrand: the +/- nodes cancel exactly
      long double s = 0.0L;
      for (int j = 1; j <= nodes.depth(); ++j) {
        const std::size_t i = JacksonNodes::index(j, false);
        s += static_cast<long double>(nodes.weight(i)) * g[k][j] * g[l][j] / rho[i];
      }
      G[k][l] = 2.0L * s;
    }
  }
  return G;
}

}  // namespace

OrthogonalityValue qhermite_orthogonality(int k, int l, const QContext& ctx) {
  if (k < 0 || l < 0) throw DomainError("qhermite_orthogonality: indices must be >= 0");
  const auto G = weighted_products(std::max(k, l), ctx);
  OrthogonalityValue r;
  r.value = static_cast<double>(G[k][l]);
  r.target = k == l ? hermite_norm(k, ctx) : 0.0;
  r.gap = std::abs(r.value - r.target) / std::sqrt(hermite_norm(k, ctx) * hermite_norm(l, ctx));
  return r;
}

GramReport hermite_gram(int k_max, const QContext& ctx) {
  if (k_max < 0) throw DomainError("hermite_gram: k_max must be >= 0");
  const auto G = weighted_products(k_max, ctx);
  const Eigen::Index n = k_max + 1;
  Eigen::MatrixXcd M(n, n);
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(n, n);
  std::vector<std::string> labels;
  for (int k = 0; k <= k_max; ++k) {
    labels.push_back(std::to_string(k));
    T(k, k) = hermite_norm(k, ctx);
    for (int l = 0; l <= k_max; ++l) M(k, l) = static_cast<double>(G[k][l]);
  }
  return make_gram_report("hermite-gram", std::move(labels), std::move(M), std::move(T));
}

std::vector<QHermiteFunction> qhermite_functions(int k_max, const JacksonNodes& nodes, const QContext& ctx) {
  if (k_max < 0) throw DomainError("qhermite_functions: k_max must be >= 0");
  const auto g = weighted_hermite_values(k_max, nodes, ctx);
  const auto rho = hermite_node_weights(nodes);
  std::vector<QHermiteFunction> out;
  for (int k = 0; k <= k_max; ++k) {
    QHermiteFunction f;
    f.k = k;
    f.norm = hermite_norm(k, ctx);
    const long double sqrt_norm = std::sqrt(static_cast<long double>(f.norm));
    const double parity = k % 2 == 0 ? 1.0 : -1.0;
    f.values.assign(nodes.size(), 0.0);
    for (int j = 1; j <= nodes.depth(); ++j) {
      // H~_k = g_k / sqrt(rho Lambda_k); zero at the endpoint.
      const std::size_t i = JacksonNodes::index(j, false);
      const double v = static_cast<double>(g[k][j] / (std::sqrt(rho[i]) * sqrt_norm));
      f.values[i] = v;
      f.values[JacksonNodes::index(j, true)] = parity * v;
    }
    out.push_back(std::move(f));
  }
  return out;
}

QHermiteFunction qhermite_function(int k, const QContext& ctx) {
  return qhermite_functions(k, JacksonNodes(ctx), ctx).back();
}

}  // namespace qfock
