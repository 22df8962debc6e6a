#pragma once

#include <complex>

namespace qfock {

/// Elliptic complex number w = x + i p y, 0 < p < infinity.
class EllipticVariable {
 public:
  EllipticVariable(double p, double x, double y);

  double p() const noexcept { return p_; }
  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }

  std::complex<double> w() const { return {x_, p_ * y_}; }
  /// w wbar = x^2 + p^2 y^2.
  double modulus2() const { return x_ * x_ + p_ * p_ * y_ * y_; }
  double r_p() const;
  /// Angle with cos = x / r_p, sin = p y / r_p.
  double phi() const;

  static EllipticVariable from_polar(double p, double r_p, double phi);

 private:
  double p_;
  double x_;
  double y_;
};

struct EllipticRankReport {
  int n = 0;
  int rank = 0;
  double min_singular = 0.0;
  double max_singular = 0.0;
  bool independent() const { return rank == n + 1; }
};

/**
 * Numerical rank of {w^j wbar^k}_{j+k=n}: the family is sampled at the n+1
 * unit-modulus points phi_l = pi l / (2(n+1)), l = 0..n, and the singular
 * values of the resulting (n+1)x(n+1) matrix are inspected (relative cutoff
 * 1e-10).
 */
EllipticRankReport elliptic_independence_check(int n, double p);

}  // namespace qfock
