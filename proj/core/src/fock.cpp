#include "qfock/fock.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <numbers>

#include "qfock/analytic.hpp"
#include "qfock/qnumbers.hpp"

namespace qfock {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void require_same_q(const FockElement& f, const FockElement& g) {
  if (f.ctx().q() != g.ctx().q()) throw ConfigError("Fock elements built with different q");
}

}  // namespace

FockElement::FockElement(std::vector<cplx> coeffs, const QContext& ctx) : a_(std::move(coeffs)), ctx_(ctx) {}

FockElement FockElement::basis(int n, const QContext& ctx) {
  if (n < 0) throw DomainError("FockElement::basis: n must be >= 0");
  std::vector<cplx> a(static_cast<std::size_t>(n) + 1, 0.0);
  a[n] = 1.0;
  return FockElement(std::move(a), ctx);
}

double FockElement::norm2() const {
  double s = 0.0;
  double fact = 1.0;
  for (std::size_t n = 0; n < a_.size(); ++n) {
    if (n > 0) fact *= q_number(static_cast<double>(n), ctx_);
    s += fact * std::norm(a_[n]);
  }
  return s;
}

FockElement& FockElement::operator+=(const FockElement& o) {
  require_same_q(*this, o);
  if (o.a_.size() > a_.size()) a_.resize(o.a_.size(), 0.0);
  for (std::size_t n = 0; n < o.a_.size(); ++n) a_[n] += o.a_[n];
  return *this;
}

FockElement& FockElement::operator*=(cplx s) {
  for (auto& c : a_) c *= s;
  return *this;
}

cplx fischer_inner(const FockElement& f, const FockElement& g) {
  require_same_q(f, g);
  const int n_max = std::min(f.size(), g.size());
  cplx s = 0.0;
  double fact = 1.0;
  for (int n = 0; n < n_max; ++n) {
    if (n > 0) fact *= q_number(n, f.ctx());
    s += fact * f.coeff(n) * std::conj(g.coeff(n));
  }
  return s;
}

cplx evaluate(const FockElement& f, cplx z) {
  const double q = f.ctx().q();
  cplx s = 0.0;
  cplx zq = 1.0;
  double ql = 1.0;
  for (int n = 0; n < f.size(); ++n) {
    s += f.coeff(n) * zq;
    zq *= cplx(z.real(), ql * z.imag());
    ql *= q;
  }
  return s;
}

BivarPoly to_polynomial(const FockElement& f) {
  BivarPoly p;
  for (int n = 0; n < f.size(); ++n) {
    if (f.coeff(n) != cplx(0.0)) p += zq_monomial(n, f.ctx()) * f.coeff(n);
  }
  return p;
}

FockElement position_apply(const FockElement& f) {
  std::vector<cplx> a(f.size() + 1, 0.0);
  for (int n = 0; n < f.size(); ++n) a[n + 1] = f.coeff(n);
  return FockElement(std::move(a), f.ctx());
}

FockElement dz_apply(const FockElement& f) {
  if (f.size() <= 1) return FockElement::zero(f.ctx());
  std::vector<cplx> a(f.size() - 1);
  for (int n = 1; n < f.size(); ++n) a[n - 1] = q_number(n, f.ctx()) * f.coeff(n);
  return FockElement(std::move(a), f.ctx());
}

FockElement momentum_apply(const FockElement& f) { return dz_apply(f) * cplx(0.0, -1.0); }

FockElement annihilation_apply(const FockElement& f) {
  return (position_apply(f) + dz_apply(f)) * kInvSqrt2;
}

FockElement creation_apply(const FockElement& f) {
  return (position_apply(f) - dz_apply(f)) * kInvSqrt2;
}

BivarPoly position_apply(const BivarPoly& p, const QContext& ctx) {
  BivarPoly z;
  z.add_term(1, 0, 1.0);
  z.add_term(0, 1, cplx(0.0, 1.0));
  return z * dilate(p, 1.0, ctx.q());
}

BivarPoly momentum_apply(const BivarPoly& p, const QContext& ctx) { return dz(p, ctx) * cplx(0.0, -1.0); }

double CommutatorReport::gap() const {
  return std::max({std::abs(factor - expected), std::abs(remark_factor - expected), off_diagonal});
}

CommutatorReport commutator_check(int n, const QContext& ctx) {
  if (n < 0) throw DomainError("commutator_check: n must be >= 0");
  const auto e = FockElement::basis(n, ctx);
  const auto c = annihilation_apply(creation_apply(e)) - creation_apply(annihilation_apply(e));
  const auto r = dz_apply(position_apply(e)) - position_apply(dz_apply(e));

  CommutatorReport out;
  out.n = n;
  out.expected = std::pow(ctx.q(), n);
  out.factor = c.coeff(n);
  out.remark_factor = r.coeff(n);
  for (int m = 0; m < std::max(c.size(), r.size()); ++m) {
    if (m == n) continue;
    out.off_diagonal = std::max({out.off_diagonal, std::abs(c.coeff(m)), std::abs(r.coeff(m))});
  }
  return out;
}

double adjoint_check(const FockElement& R, const FockElement& Q) {
  return std::abs(fischer_inner(dz_apply(R), Q) - fischer_inner(R, position_apply(Q)));
}

double oscillator_adjoint_gap(const FockElement& R, const FockElement& Q) {
  return std::abs(fischer_inner(annihilation_apply(R), Q) - fischer_inner(R, creation_apply(Q)));
}

KernelEvaluation kernel_eval(cplx z, cplx w, const QContext& ctx) {
  const double q = ctx.q();
  const double radius = 1.0 / (1.0 - q);
  const double zw = std::abs(z) * std::abs(w);
  if (!(std::abs(w) < radius)) throw DomainError("kernel_eval: |w| must be below 1/(1-q)");
  if (!(zw < radius)) throw DomainError("kernel_eval: |z||w| must be below 1/(1-q)");

  KernelEvaluation out;
  out.z = z;
  out.w = w;
  cplx zq = 1.0;
  cplx wq = 1.0;
  double ql = 1.0;
  double fact = 1.0;
  double bound = 1.0;  // (|z||w|)^n / [n]!
  cplx sum = 0.0;
  for (int n = 0; n < ctx.series_max_terms(); ++n) {
    if (n > 0) {
      zq *= cplx(z.real(), ql * z.imag());
      wq *= cplx(w.real(), ql * w.imag());
      ql *= q;
      const double bn = q_number(n, q);
      fact *= bn;
      bound *= zw / bn;
    }
    sum += zq * std::conj(wq) / fact;
    out.N = n;
    const double next = bound * zw / q_number(n + 1, q);
    const double ratio = zw / q_number(n + 2, q);
    if (next == 0.0) {
      out.tail_bound = 0.0;
      break;
    }
    if (ratio < 1.0) {
      out.tail_bound = next / (1.0 - ratio);
      if (out.tail_bound < 1e-12 * std::abs(sum)) break;
    } else {
      out.tail_bound = std::numeric_limits<double>::infinity();
    }
  }
  out.value = sum;
  return out;
}

FockElement kernel_section(cplx w, int N, const QContext& ctx) {
  if (N < 0) throw DomainError("kernel_section: N must be >= 0");
  std::vector<cplx> a(static_cast<std::size_t>(N) + 1);
  cplx wq = 1.0;
  double ql = 1.0;
  double fact = 1.0;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) {
      wq *= cplx(w.real(), ql * w.imag());
      ql *= ctx.q();
      fact *= q_number(n, ctx);
    }
    a[n] = std::conj(wq) / fact;
  }
  return FockElement(std::move(a), ctx);
}

double reproducing_check(const FockElement& f, cplx w) {
  const auto K = kernel_section(w, std::max(f.size() - 1, 0), f.ctx());
  return std::abs(fischer_inner(f, K) - evaluate(f, w));
}

}  // namespace qfock
