#include "qfock/polynomial.hpp"

#include <vector>

namespace qfock {
namespace {

std::vector<double> binomial_row(int n) {
  std::vector<double> row(static_cast<std::size_t>(n) + 1, 1.0);
  for (int k = 1; k < n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
  return row;
}

cplx ipow(cplx base, int n) {
  cplx r = 1.0;
  for (int k = 0; k < n; ++k) r *= base;
  return r;
}

}  // namespace

cplx evaluate(const BivarPoly& p, double x, double y) {
  cplx s = 0.0;
  for (const auto& [e, c] : p.terms()) s += c * std::pow(x, e.first) * std::pow(y, e.second);
  return s;
}

cplx evaluate(const ZBarBasisPoly& p, cplx z) {
  const cplx zb = std::conj(z);
  cplx s = 0.0;
  for (const auto& [e, c] : p.terms()) s += c * ipow(z, e.first) * ipow(zb, e.second);
  return s;
}

BivarPoly conj(const BivarPoly& p) {
  BivarPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e.first, e.second, std::conj(c));
  return r;
}

ZBarBasisPoly conj(const ZBarBasisPoly& p) {
  ZBarBasisPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e.second, e.first, std::conj(c));
  return r;
}

BivarPoly dilate(const BivarPoly& p, double sx, double sy) {
  BivarPoly r;
  for (const auto& [e, c] : p.terms()) {
    r.add_term(e.first, e.second, c * std::pow(sx, e.first) * std::pow(sy, e.second));
  }
  return r;
}

ZBarBasisPoly to_zbar_basis(const BivarPoly& p) {
  // x^a = 2^{-a} sum_r C(a,r) z^r zbar^{a-r}
  // y^b = (2i)^{-b} sum_s C(b,s) (-1)^{b-s} z^s zbar^{b-s}
  ZBarBasisPoly out;
  const cplx two_i(0.0, 2.0);
  for (const auto& [e, c] : p.terms()) {
    const int a = e.first;
    const int b = e.second;
    const auto ca = binomial_row(a);
    const auto cb = binomial_row(b);
    const cplx scale = c / (std::pow(2.0, a) * ipow(two_i, b));
    for (int r = 0; r <= a; ++r) {
      for (int s = 0; s <= b; ++s) {
        const double sign = ((b - s) % 2 == 0) ? 1.0 : -1.0;
        out.add_term(r + s, (a - r) + (b - s), scale * ca[r] * cb[s] * sign);
      }
    }
  }
  return out;
}

BivarPoly to_xy_basis(const ZBarBasisPoly& p) {
  // z^i = sum_r C(i,r) x^{i-r} (i y)^r,  zbar^j = sum_s C(j,s) x^{j-s} (-i y)^s
  BivarPoly out;
  const cplx I(0.0, 1.0);
  for (const auto& [e, c] : p.terms()) {
    const int i = e.first;
    const int j = e.second;
    const auto ci = binomial_row(i);
    const auto cj = binomial_row(j);
    for (int r = 0; r <= i; ++r) {
      for (int s = 0; s <= j; ++s) {
        const cplx factor = ci[r] * cj[s] * ipow(I, r) * ipow(-I, s);
        out.add_term((i - r) + (j - s), r + s, c * factor);
      }
    }
  }
  return out;
}

}  // namespace qfock
