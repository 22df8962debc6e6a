#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>

namespace qfock {

using cplx = std::complex<double>;

/// Exponent pair of a bivariate monomial.
struct Exponent {
  int first = 0;
  int second = 0;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

// Basis tags: the same sparse container carries polynomials in (x, y), in
// (z, zbar) and expansions over the complex Hermite family H_{p,r}. The tag
// keeps the three from being mixed by accident.
struct XYBasis {};
struct ZZbarBasis {};
struct HermiteBasis {};

/// Coefficient cleanup applied after every polynomial product: terms below
/// this fraction of the largest coefficient are dropped.
inline constexpr double kProductCleanup = 1e-14;

/**
 * Sparse bivariate polynomial with complex coefficients, keyed by exponent
 * pairs. Zero coefficients are never stored.
 */
template <class Basis>
class SparsePoly2 {
 public:
  using Terms = std::map<Exponent, cplx>;

  SparsePoly2() = default;

  static SparsePoly2 constant(cplx c) { return monomial(0, 0, c); }
  static SparsePoly2 monomial(int a, int b, cplx c = 1.0) {
    SparsePoly2 p;
    p.add_term(a, b, c);
    return p;
  }

  void add_term(int a, int b, cplx c) {
    if (a < 0 || b < 0) throw std::invalid_argument("SparsePoly2: negative exponent");
    if (c == cplx(0.0)) return;
    auto [it, inserted] = terms_.try_emplace(Exponent{a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == cplx(0.0)) terms_.erase(it);
    }
  }

  cplx coeff(int a, int b) const {
    auto it = terms_.find(Exponent{a, b});
    return it == terms_.end() ? cplx(0.0) : it->second;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

  /// Drop terms with |c| < rel * max|c|.
  SparsePoly2& cleanup(double rel = kProductCleanup) {
    const double floor = rel * max_abs_coeff();
    std::erase_if(terms_, [floor](const auto& kv) { return std::abs(kv.second) < floor; });
    return *this;
  }

  SparsePoly2& operator+=(const SparsePoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }
  SparsePoly2& operator-=(const SparsePoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
  }
  SparsePoly2& operator*=(cplx s) {
    if (s == cplx(0.0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend SparsePoly2 operator+(SparsePoly2 a, const SparsePoly2& b) { return a += b; }
  friend SparsePoly2 operator-(SparsePoly2 a, const SparsePoly2& b) { return a -= b; }
  friend SparsePoly2 operator-(SparsePoly2 a) { return a *= -1.0; }
  friend SparsePoly2 operator*(SparsePoly2 a, cplx s) { return a *= s; }
  friend SparsePoly2 operator*(cplx s, SparsePoly2 a) { return a *= s; }

  friend SparsePoly2 operator*(const SparsePoly2& a, const SparsePoly2& b) {
    SparsePoly2 r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
      }
    }
    r.cleanup();
    return r;
  }

  friend bool operator==(const SparsePoly2&, const SparsePoly2&) = default;

 private:
  Terms terms_;
};

/// Polynomial in the real coordinates x, y (z = x + i y).
using BivarPoly = SparsePoly2<XYBasis>;
/// Polynomial in z and zbar: key (i, j) stands for z^i zbar^j.
using ZBarBasisPoly = SparsePoly2<ZZbarBasis>;
/// Expansion over the complex Hermite polynomials: key (p, r) stands for H_{p,r}.
using HermiteExpansion = SparsePoly2<HermiteBasis>;

/// max over exponents of |a - b|.
template <class B>
double max_coeff_gap(const SparsePoly2<B>& a, const SparsePoly2<B>& b) {
  double m = 0.0;
  const auto d = a - b;
  for (const auto& [e, c] : d.terms()) m = std::max(m, std::abs(c));
  return m;
}

cplx evaluate(const BivarPoly& p, double x, double y);
cplx evaluate(const ZBarBasisPoly& p, cplx z);

/// Complex conjugate as a function of (x, y): conjugates the coefficients.
BivarPoly conj(const BivarPoly& p);
/// Complex conjugate as a function of z: z^i zbar^j -> conj(c) z^j zbar^i.
ZBarBasisPoly conj(const ZBarBasisPoly& p);

/// p(sx * x, sy * y).
BivarPoly dilate(const BivarPoly& p, double sx, double sy);

/// Rewrite x = (z + zbar)/2, y = (z - zbar)/(2i).
ZBarBasisPoly to_zbar_basis(const BivarPoly& p);
/// Rewrite z = x + i y, zbar = x - i y.
BivarPoly to_xy_basis(const ZBarBasisPoly& p);

}  // namespace qfock
