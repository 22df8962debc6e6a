#pragma once

#include <vector>

#include "qfock/context.hpp"
#include "qfock/polynomial.hpp"

namespace qfock {

/// Finite element sum_{n<=N} a_n z_q^n of the q-Fock space.
class FockElement {
 public:
  FockElement(std::vector<cplx> coeffs, const QContext& ctx);
  /// The basis element z_q^n.
  static FockElement basis(int n, const QContext& ctx);
  static FockElement zero(const QContext& ctx) { return FockElement({}, ctx); }

  const std::vector<cplx>& coeffs() const noexcept { return a_; }
  cplx coeff(int n) const { return (n >= 0 && n < static_cast<int>(a_.size())) ? a_[n] : cplx(0.0); }
  int size() const { return static_cast<int>(a_.size()); }
  const QContext& ctx() const noexcept { return ctx_; }

  /// sum_n [n]_q! |a_n|^2
  double norm2() const;

  FockElement& operator+=(const FockElement& o);
  FockElement& operator*=(cplx s);
  friend FockElement operator+(FockElement a, const FockElement& b) { return a += b; }
  friend FockElement operator-(FockElement a, const FockElement& b) { return a += b * cplx(-1.0); }
  friend FockElement operator*(FockElement a, cplx s) { return a *= s; }
  friend FockElement operator*(cplx s, FockElement a) { return a *= s; }

 private:
  std::vector<cplx> a_;
  QContext ctx_;
};

/// <f, g>_F = sum_n [n]_q! a_n conj(b_n). Throws ConfigError if q differs.
cplx fischer_inner(const FockElement& f, const FockElement& g);

/// f(z) = sum_n a_n z_q^n(z).
cplx evaluate(const FockElement& f, cplx z);
/// The element as an exact (x, y) polynomial.
BivarPoly to_polynomial(const FockElement& f);

/// X_q: z_q^n -> z_q^{n+1}.
FockElement position_apply(const FockElement& f);
/// D_z: z_q^n -> [n]_q z_q^{n-1}.
FockElement dz_apply(const FockElement& f);
/// P_q = -i D_z.
FockElement momentum_apply(const FockElement& f);
/// a = (X_q + i P_q)/sqrt(2) = (X_q + D_z)/sqrt(2).
FockElement annihilation_apply(const FockElement& f);
/// a^dagger = (X_q - i P_q)/sqrt(2) = (X_q - D_z)/sqrt(2).
FockElement creation_apply(const FockElement& f);

/// X_q = z o M_q^y on polynomials: p(x, y) -> (x + i y) p(x, q y).
BivarPoly position_apply(const BivarPoly& p, const QContext& ctx);
/// -i D_z on polynomials.
BivarPoly momentum_apply(const BivarPoly& p, const QContext& ctx);

struct CommutatorReport {
  int n = 0;
  double expected = 0.0;        ///< q^n
  cplx factor = 0.0;            ///< coefficient of z_q^n in [a, a^dagger] z_q^n
  double off_diagonal = 0.0;    ///< largest other coefficient
  cplx remark_factor = 0.0;     ///< same, through [D_z, X_q]
  double gap() const;           ///< max of both deviations from q^n and off_diagonal
};

CommutatorReport commutator_check(int n, const QContext& ctx);

/// |<D_z R, Q>_F - <R, X_q Q>_F|.
double adjoint_check(const FockElement& R, const FockElement& Q);
/// |<a R, Q>_F - <R, a^dagger Q>_F|; nonzero in general.
double oscillator_adjoint_gap(const FockElement& R, const FockElement& Q);

struct KernelEvaluation {
  cplx z = 0.0;
  cplx w = 0.0;
  int N = 0;  ///< last index included
  cplx value = 0.0;
  double tail_bound = 0.0;
};

/**
 * K_q(z, w) = sum_n z_q^n(z) conj(w_q^n(w)) / [n]_q!, truncated once the
 * dominating tail (|z||w|)^{N+1}/[N+1]! / (1 - |z||w|/[N+2]) falls below
 * 1e-12 times the partial sum. Throws DomainError unless
 * |w| < 1/(1-q) and |z||w| < 1/(1-q).
 */
KernelEvaluation kernel_eval(cplx z, cplx w, const QContext& ctx);

/// K_q(., w) truncated at index N: coefficients conj(w_q^n)/[n]_q!.
FockElement kernel_section(cplx w, int N, const QContext& ctx);

/// |<f, K_q(., w)>_F - f(w)|.
double reproducing_check(const FockElement& f, cplx w);

}  // namespace qfock
