#pragma once

#include <span>
#include <vector>

#include "samejulia/poly.hpp"

namespace samejulia {

/// Truncated power series in w = 1/z: coefficient k multiplies w^k.
/// Serves as the Laurent workspace for expansions at infinity.
class LaurentTail {
 public:
  explicit LaurentTail(int order) : c_(static_cast<std::size_t>(order) + 1) {}
  LaurentTail(std::vector<Complex> c, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  Complex& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  Complex operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }

  friend LaurentTail operator+(const LaurentTail& a, const LaurentTail& b);
  friend LaurentTail operator*(const LaurentTail& a, const LaurentTail& b);
  friend LaurentTail operator*(Complex s, const LaurentTail& a);
  LaurentTail pow(int e) const;
  /// Multiplicative inverse; requires a nonzero constant term.
  LaurentTail inverse() const;
  /// Multiplies by w^k, dropping terms beyond the order.
  LaurentTail shifted(int k) const;

 private:
  std::vector<Complex> c_;
};

/// φ(z) = z + b_0 + b_1/z + ... + b_K/z^K with φ∘f = a φ^n.
struct BoettcherSeries {
  std::vector<Complex> b;  ///< b[0..K]
  Complex leading{1.0};    ///< a, so that L_f(z) = a z^n
  int degree = 0;          ///< n
  double residual = 0.0;   ///< largest coefficient of the functional equation left over

  int order() const { return static_cast<int>(b.size()) - 1; }
  /// Evaluates the truncated series at z.
  Complex operator()(Complex z) const;
};

/// Solves the coefficients one order at a time. Throws InputError for
/// K > max_series_order or degree < 2; NumericError on a non-finite solve.
BoettcherSeries boettcher_series(const Poly& f, int K, const NumericContext& ctx = {});

/// |φ(f(z)) − a φ(z)^n| / |a φ(z)^n| using the truncated series.
double functional_residual(const Poly& f, const BoettcherSeries& phi, Complex z);

/// max_{i<n} |c_i| / |a|.
double coefficient_scale(const Poly& f);

/// Radius beyond which |f(z)| >= 2|z|, so every orbit escapes:
/// max(1, (4/|a|)^{1/(n-1)}, 2 Σ_{i<n}|c_i|/|a|).
double escape_bound(const Poly& f);

struct GreenOptions {
  int max_iter = 1024;
  double escape_radius = 0.0;  ///< 0 selects 2 * max(1, escape_bound) * 1e6
};

struct GreenValue {
  double value = 0.0;
  bool escaped = false;
  bool boundary_uncertain = false;
  int iterations = 0;
};

/// Green function of the basin of infinity, lim log|f^k(z)| / n^k.
/// Zero when the orbit stays bounded for the whole budget.
GreenValue green_detail(const Poly& f, Complex z, const GreenOptions& opts = {});
double green(const Poly& f, Complex z, const NumericContext& ctx = {});

/// Green values at many points through the vectorised escape kernel.
std::vector<GreenValue> green_batch(const Poly& f, std::span<const Complex> points,
                                    const GreenOptions& opts = {});

/// max over samples of |G_f − G_g|.
double green_agreement(const Poly& f, const Poly& g, std::span<const Complex> samples,
                       const NumericContext& ctx = {});

}  // namespace samejulia
