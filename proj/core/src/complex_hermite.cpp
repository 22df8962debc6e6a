#include "qfock/complex_hermite.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qfock/analytic.hpp"

namespace qfock {
namespace {

double factorial(int n) { return std::tgamma(n + 1.0); }

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::pair<int, int>> mixed_indices(int N) {
  std::vector<std::pair<int, int>> idx;
  for (int d = 0; d <= N; ++d) {
    for (int k = d; k >= 0; --k) idx.emplace_back(k, d - k);
  }
  return idx;
}

GramReport gram_of(const std::string& name, const std::vector<ZBarBasisPoly>& family,
                   const std::vector<std::pair<int, int>>& idx) {
  const auto n = static_cast<Eigen::Index>(family.size());
  Eigen::MatrixXcd G(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) G(i, j) = gaussian_inner(family[i], family[j]);
  }
  std::vector<std::string> labels;
  for (const auto& [k, h] : idx) labels.push_back(std::to_string(k) + "," + std::to_string(h));
  return make_gram_report(name, std::move(labels), std::move(G));
}

}  // namespace

ZBarBasisPoly complex_hermite(int p, int r) {
  if (p < 0 || r < 0) throw DomainError("complex_hermite: indices must be non-negative");
  ZBarBasisPoly out;
  const double pr = factorial(p) * factorial(r);
  for (int k = 0; k <= std::min(p, r); ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    out.add_term(p - k, r - k, sign * pr / (factorial(k) * factorial(p - k) * factorial(r - k)));
  }
  return out;
}

cplx gaussian_inner(const ZBarBasisPoly& f, const ZBarBasisPoly& g) {
  // f conj(g): z^a zbar^b * conj(z^c zbar^d) = z^{a+d} zbar^{b+c}.
  cplx s = 0.0;
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      const int alpha = ef.first + eg.second;
      const int beta = ef.second + eg.first;
      if (alpha == beta) s += cf * std::conj(cg) * factorial(alpha);
    }
  }
  return std::numbers::pi * s;
}

HermiteExpansion to_hermite_expansion(const ZBarBasisPoly& f) {
  HermiteExpansion out;
  for (const auto& [e, c] : f.terms()) {
    const int p = e.first;
    const int r = e.second;
    for (int k = 0; k <= std::min(p, r); ++k) {
      out.add_term(p - k, r - k, c * factorial(k) * binom(p, k) * binom(r, k));
    }
  }
  return out;
}

ZBarBasisPoly from_hermite_expansion(const HermiteExpansion& h) {
  ZBarBasisPoly out;
  for (const auto& [e, c] : h.terms()) out += complex_hermite(e.first, e.second) * c;
  return out;
}

GramReport mixed_basis_gram(int N, const QContext& ctx) {
  if (N < 1) throw DomainError("mixed_basis_gram: N must be >= 1");
  const auto idx = mixed_indices(N);
  std::vector<ZBarBasisPoly> zq(N + 1);
  for (int n = 0; n <= N; ++n) zq[n] = zq_monomial_zbar(n, ctx);
  std::vector<ZBarBasisPoly> family;
  for (const auto& [k, h] : idx) family.push_back(zq[k] * conj(zq[h]));
  return gram_of("mixed-gram", family, idx);
}

GramReport classical_monomial_gram(int N) {
  if (N < 1) throw DomainError("classical_monomial_gram: N must be >= 1");
  const auto idx = mixed_indices(N);
  std::vector<ZBarBasisPoly> family;
  for (const auto& [k, h] : idx) family.push_back(ZBarBasisPoly::monomial(k, h));
  return gram_of("classical-gram", family, idx);
}

}  // namespace qfock
