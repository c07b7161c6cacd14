#pragma once

// Test-only helpers: fixed polynomials, seeded generators and oracles that
// do not go through the library's arithmetic.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "samejulia/poly.hpp"

namespace testsupport {

using samejulia::Complex;
using samejulia::Poly;

inline Complex omega3() { return std::polar(1.0, 2.0 * std::numbers::pi / 3.0); }

/// z^5 + z^2 = z^2 (z^3 + 1)
inline Poly quintic_root() { return Poly({0.0, 0.0, 1.0, 0.0, 0.0, 1.0}); }

// Plain convolution on coefficient vectors, independent of Poly::operator*.
inline std::vector<Complex> conv(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// p∘q expanded as Σ c_i q^i with explicit powers (no Horner).
inline std::vector<Complex> expand_compose(const std::vector<Complex>& p, const std::vector<Complex>& q) {
  std::vector<Complex> out(1, 0.0);
  std::vector<Complex> power{1.0};
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (out.size() < power.size()) out.resize(power.size());
    for (std::size_t k = 0; k < power.size(); ++k) out[k] += p[i] * power[k];
    power = conv(power, q);
  }
  return out;
}

inline std::vector<Complex> coeffs(const Poly& p) { return {p.coefficients().begin(), p.coefficients().end()}; }

/// Catalan numbers C_0..C_{count-1} from C_{k+1} = Σ C_i C_{k-i}.
inline std::vector<double> catalan(int count) {
  std::vector<double> c{1.0};
  for (int k = 0; k + 1 < count; ++k) {
    double s = 0.0;
    for (int i = 0; i <= k; ++i) s += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - i)];
    c.push_back(s);
  }
  return c;
}

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }
  Complex in_disc(double radius = 1.0) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
  }
  Complex on_circle() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }
  /// Leading coefficient with modulus in [lo, hi].
  Complex leading(double lo = 0.5, double hi = 1.0) { return std::polar(uniform(lo, hi), uniform(0.0, 2.0 * std::numbers::pi)); }

  Poly poly(int degree) {
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = in_disc();
    c.back() = leading();
    return Poly(std::move(c));
  }
  Poly centered_poly(int degree) {
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = in_disc();
    c.back() = leading();
    c[static_cast<std::size_t>(degree) - 1] = 0.0;
    return Poly(std::move(c));
  }
};

}  // namespace testsupport
