#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace qfock {

/// [m]_b for a non-negative integer m in the scalar type T, as the finite sum
/// 1 + b + ... + b^{m-1}.
template <class T>
T q_number_sum(int m, T b) {
  T s = 0;
  T bk = 1;
  for (int i = 0; i < m; ++i) {
    s += bk;
    bk *= b;
  }
  return s;
}

/**
 * Dense univariate polynomial sum_m c_m t^m with real coefficients of type T.
 * The zero polynomial has an empty coefficient vector.
 */
template <class T>
class RealPolyT {
 public:
  RealPolyT() = default;
  explicit RealPolyT(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static RealPolyT constant(T c) { return RealPolyT(std::vector<T>{c}); }
  static RealPolyT monomial(int m, T c = 1) {
    std::vector<T> v(static_cast<std::size_t>(m) + 1, T(0));
    v[m] = c;
    return RealPolyT(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  T coeff(int m) const { return (m >= 0 && m < static_cast<int>(c_.size())) ? c_[m] : T(0); }
  const std::vector<T>& coeffs() const noexcept { return c_; }

  T operator()(T t) const {
    T s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * t + *it;
    return s;
  }

  T max_abs_coeff() const {
    T m = 0;
    for (const auto& c : c_) m = std::max(m, static_cast<T>(std::abs(c)));
    return m;
  }

  /// Exact Jackson derivative on coefficients: t^m -> [m]_q t^{m-1}.
  RealPolyT q_derivative(T q) const {
    if (c_.size() <= 1) return {};
    std::vector<T> out(c_.size() - 1);
    for (std::size_t m = 1; m < c_.size(); ++m) out[m - 1] = q_number_sum<T>(static_cast<int>(m), q) * c_[m];
    return RealPolyT(std::move(out));
  }

  /// p(s t): t^m -> s^m t^m.
  RealPolyT dilate(T s) const {
    std::vector<T> out(c_);
    T sm = 1;
    for (auto& c : out) {
      c *= sm;
      sm *= s;
    }
    return RealPolyT(std::move(out));
  }

  RealPolyT times_t() const {
    if (c_.empty()) return {};
    std::vector<T> out(c_.size() + 1, T(0));
    std::copy(c_.begin(), c_.end(), out.begin() + 1);
    return RealPolyT(std::move(out));
  }

  /// p(-t).
  RealPolyT reflect() const { return dilate(T(-1)); }

  RealPolyT& operator+=(const RealPolyT& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  RealPolyT& operator-=(const RealPolyT& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  RealPolyT& operator*=(T s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend RealPolyT operator+(RealPolyT a, const RealPolyT& b) { return a += b; }
  friend RealPolyT operator-(RealPolyT a, const RealPolyT& b) { return a -= b; }
  friend RealPolyT operator*(RealPolyT a, T s) { return a *= s; }
  friend RealPolyT operator*(T s, RealPolyT a) { return a *= s; }

  friend RealPolyT operator*(const RealPolyT& a, const RealPolyT& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return RealPolyT(std::move(out));
  }

  template <class U>
  RealPolyT<U> cast() const {
    std::vector<U> v(c_.begin(), c_.end());
    return RealPolyT<U>(std::move(v));
  }

  friend bool operator==(const RealPolyT&, const RealPolyT&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using RealPoly = RealPolyT<double>;
using RealPolyLD = RealPolyT<long double>;

/// max_m |a_m - b_m|.
template <class T>
T max_coeff_gap(const RealPolyT<T>& a, const RealPolyT<T>& b) {
  return (a - b).max_abs_coeff();
}

extern template class RealPolyT<double>;
extern template class RealPolyT<long double>;

}  // namespace qfock
