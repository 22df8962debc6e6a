#pragma once

#include <utility>

#include "qfock/context.hpp"

namespace qfock {

// Scalar q-numbers. The `base` overloads accept any positive base (q, q^2,
// 1/q); the QContext overloads use ctx.q().

/// [alpha]_b = (1 - b^alpha)/(1 - b); equals alpha when b == 1.
double q_number(double alpha, double base);
double q_number(double alpha, const QContext& ctx);

/// [n]_b! = [1]_b [2]_b ... [n]_b, with [0]_b! = 1.
double q_factorial(int n, double base);
double q_factorial(int n, const QContext& ctx);

/// Gaussian binomial [n choose k]_b via the factorial quotient.
/// Throws DomainError unless 0 <= k <= n.
double q_binomial(int n, int k, double base);
double q_binomial(int n, int k, const QContext& ctx);

/// [n+1]_q - [n]_q, evaluated as the difference of the two brackets.
/// Mathematically equal to q^n.
double q_bracket_gap(int n, const QContext& ctx);

/// Jackson q-derivative (f(qx) - f(x)) / ((q - 1) x) of a black-box function.
/// The quotient is singular at x = 0; polynomial callers should use the
/// exact coefficient rules (RealPoly::q_derivative, dz/dzbar) instead.
template <class F>
double q_derivative(F&& f, double x, const QContext& ctx) {
  if (x == 0.0) {
    throw DomainError("q_derivative: the difference quotient is singular at x = 0");
  }
  const double q = ctx.q();
  return (std::forward<F>(f)(q * x) - f(x)) / ((q - 1.0) * x);
}

/// Dilation M_q f(x) = f(qx).
template <class F>
double q_dilate(F&& f, double x, const QContext& ctx) {
  return std::forward<F>(f)(ctx.q() * x);
}

}  // namespace qfock
