#include "qfock/elliptic.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "qfock/context.hpp"

namespace qfock {

EllipticVariable::EllipticVariable(double p, double x, double y) : p_(p), x_(x), y_(y) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("EllipticVariable: p must be positive and finite");
}

double EllipticVariable::r_p() const { return std::sqrt(modulus2()); }

double EllipticVariable::phi() const { return std::atan2(p_ * y_, x_); }

EllipticVariable EllipticVariable::from_polar(double p, double r_p, double phi) {
  return EllipticVariable(p, r_p * std::cos(phi), r_p * std::sin(phi) / p);
}

EllipticRankReport elliptic_independence_check(int n, double p) {
  if (n < 0) throw DomainError("elliptic_independence_check: n must be >= 0");
  const int m = n + 1;
  Eigen::MatrixXcd V(m, m);
  for (int l = 0; l < m; ++l) {
    const auto w = EllipticVariable::from_polar(p, 1.0, std::numbers::pi * l / (2.0 * m)).w();
    for (int j = 0; j <= n; ++j) V(l, j) = std::pow(w, j) * std::pow(std::conj(w), n - j);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(V);
  const auto& s = svd.singularValues();
  EllipticRankReport r;
  r.n = n;
  r.max_singular = s.maxCoeff();
  r.min_singular = s.minCoeff();
  r.rank = static_cast<int>((s.array() > 1e-10 * r.max_singular).count());
  return r;
}

}  // namespace qfock
