#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qfock/context.hpp"
#include "qfock/fock.hpp"
#include "qfock/gram.hpp"
#include "qfock/jackson.hpp"
#include "qfock/qhermite.hpp"

namespace qfock {

/// A function known on the symmetric Jackson nodes, in JacksonNodes order.
struct JacksonFunction {
  JacksonNodes nodes;
  std::vector<cplx> values;

  static JacksonFunction zero(const JacksonNodes& nodes);
  static JacksonFunction from(const QHermiteFunction& h, const JacksonNodes& nodes);

  JacksonFunction& operator+=(const JacksonFunction& o);
  JacksonFunction& operator*=(cplx s);
  friend JacksonFunction operator+(JacksonFunction a, const JacksonFunction& b) { return a += b; }
  friend JacksonFunction operator*(JacksonFunction a, cplx s) { return a *= s; }
  friend JacksonFunction operator*(cplx s, JacksonFunction a) { return a *= s; }
};

/// J int_{-lambda}^{lambda} f conj(g) d_q t.
cplx l2_inner(const JacksonFunction& f, const JacksonFunction& g);

/**
 * The kernel A(z_q, t) = sum_{n<M} z_q^n / sqrt([n]_q!) H~_n(t), stored as
 * the per-mode Fock factors 1/sqrt([n]!) and the nodewise H~_n.
 * M counts modes: n = 0 .. M-1.
 */
class BargmannKernelTable {
 public:
  static constexpr int kDefaultModes = 16;

  BargmannKernelTable(int modes, const QContext& ctx);
  explicit BargmannKernelTable(const QContext& ctx) : BargmannKernelTable(kDefaultModes, ctx) {}

  int modes() const noexcept { return modes_; }
  const QContext& ctx() const noexcept { return ctx_; }
  const JacksonNodes& nodes() const noexcept { return nodes_; }
  const QHermiteFunction& hermite(int n) const { return hermite_.at(n); }
  double inv_sqrt_factorial(int n) const { return inv_sqrt_fact_.at(n); }
  /// Row n holds w_i H~_n(t_i).
  const Eigen::MatrixXd& weighted_modes() const noexcept { return weighted_; }

  JacksonFunction hermite_function(int n) const;

 private:
  int modes_;
  QContext ctx_;
  JacksonNodes nodes_;
  std::vector<QHermiteFunction> hermite_;
  std::vector<double> inv_sqrt_fact_;
  Eigen::MatrixXd weighted_;
};

/// b_n = (1/sqrt([n]!)) J int f H~_n d_q t, n < M.
FockElement bargmann_forward(const JacksonFunction& f, const BargmannKernelTable& table);
/// The adjoint in the coefficient model: sum_n sqrt([n]!) F_n H~_n.
JacksonFunction bargmann_adjoint(const FockElement& F, const BargmannKernelTable& table);

/// Fischer Gram of {B_q H~_m}_{m<M} with target I.
GramReport bargmann_unitarity_gram(const BargmannKernelTable& table);
GramReport bargmann_unitarity_gram(int modes, const QContext& ctx);

/// Phi_z(t) = A(z_q, t). Throws DomainError unless |z| < 1/(1-q).
JacksonFunction coherent_state(cplx z, const BargmannKernelTable& table);

/// Coefficients c_{k,h} against z_q^k zbar_q^h / sqrt([k]! [h]!).
struct TensorFockElement {
  Eigen::MatrixXcd c;
  double norm2() const { return c.squaredNorm(); }
};

cplx tensor_inner(const TensorFockElement& a, const TensorFockElement& b);

/// F(t_i, s_j) on the product node grid, same ordering on both axes.
using TensorJacksonFunction = Eigen::MatrixXcd;

/// c = (W H~) F (W H~)^T with W the Jackson weights; kernel A (x) A.
TensorFockElement tensor_forward(const TensorJacksonFunction& F, const BargmannKernelTable& table);

/// Gram of {B^(2) (H~_k (x) H~_h)}_{k,h<M} with target I; labels "k,h".
GramReport tensor_unitarity_gram(const BargmannKernelTable& table);

}  // namespace qfock
