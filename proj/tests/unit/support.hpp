#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace qtest {

inline constexpr double kQs[] = {0.3, 0.5, 0.9};

// Hand-rolled generators for property tests; every test seeds its own engine.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }
  std::complex<double> complex_in_disc(double r) {
    const double rho = r * std::sqrt(uniform(0.0, 1.0));
    const double phi = uniform(0.0, 2.0 * M_PI);
    return std::polar(rho, phi);
  }
  std::vector<double> reals(int n, double a, double b) {
    std::vector<double> v(n);
    for (auto& x : v) x = uniform(a, b);
    return v;
  }
  std::vector<std::complex<double>> complexes(int n, double r) {
    std::vector<std::complex<double>> v(n);
    for (auto& z : v) z = {uniform(-r, r), uniform(-r, r)};
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace qtest
