#include "samejulia/poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "samejulia/errors.hpp"

namespace samejulia {

void NumericContext::validate() const {
  if (!(eps_rel > 0.0) || !(eps_abs > 0.0)) {
    throw InputError("tolerances must be positive");
  }
  if (max_series_order < 1) {
    throw InputError("max_series_order must be at least 1");
  }
}

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw NumericError("non-finite polynomial coefficient");
    }
  }
  while (coeffs_.size() > 1 && coeffs_.back() == Complex{}) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Complex{});
}

Poly Poly::monomial(Complex c, int degree) {
  if (degree < 0) throw InputError("negative degree");
  std::vector<Complex> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

double Poly::max_abs() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Poly operator+(const Poly& p, const Poly& q) {
  const std::size_t n = static_cast<std::size_t>(std::max(p.degree(), q.degree())) + 1;
  std::vector<Complex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = p[static_cast<int>(i)] + q[static_cast<int>(i)];
  return Poly(std::move(v));
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly{};
  std::vector<Complex> v(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(Complex s, const Poly& p) {
  std::vector<Complex> v(p.coeffs_);
  for (Complex& c : v) c *= s;
  return Poly(std::move(v));
}

AffineMap AffineMap::inverse(const NumericContext& ctx) const {
  if (std::abs(A) <= ctx.eps_abs) throw InputError("degenerate affine map (|A| <= eps_abs)");
  const Complex inv = 1.0 / A;
  return {inv, -B * inv};
}

Poly canonicalize(const Poly& p, const NumericContext& ctx) {
  const double scale = p.max_abs();
  std::vector<Complex> v(p.coefficients().begin(), p.coefficients().end());
  for (Complex& c : v) {
    if (negligible(c, scale, ctx)) c = Complex{};
  }
  return Poly(std::move(v));
}

bool is_monomial(const Poly& p, const NumericContext& ctx) {
  const double scale = p.max_abs();
  for (int i = 0; i < p.degree(); ++i) {
    if (!negligible(p[i], scale, ctx)) return false;
  }
  return true;
}

bool is_centered(const Poly& p, const NumericContext& ctx) {
  if (p.degree() < 1) return false;
  return negligible(p[p.degree() - 1], p.max_abs(), ctx);
}

Complex evaluate(const Poly& p, Complex z) {
  Complex acc{};
  for (int i = p.degree(); i >= 0; --i) acc = acc * z + p[i];
  return acc;
}

Poly compose(const Poly& p, const Poly& q) {
  Poly acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * q + Poly::constant(p[i]);
  return acc;
}

Poly iterate(const Poly& p, int k, bool allow_identity) {
  if (k < 0) throw InputError("negative iteration count");
  if (k == 0) {
    if (!allow_identity) throw InputError("iterate requires k >= 1");
    return Poly::identity();
  }
  Poly result = p;
  for (int i = 1; i < k; ++i) result = compose(p, result);
  return result;
}

Poly conjugate(const Poly& p, const AffineMap& L, const NumericContext& ctx) {
  const AffineMap inv = L.inverse(ctx);
  return compose(inv.as_poly(), compose(p, L.as_poly()));
}

Centering center(const Poly& p, const NumericContext& ctx) {
  const int d = p.degree();
  if (d < 2) throw InputError("center requires degree >= 2 (got " + std::to_string(d) + ")");
  const Complex shift = -p[d - 1] / (static_cast<double>(d) * p.leading());
  const AffineMap L = AffineMap::translation(shift);
  const Poly raw = conjugate(p, L, ctx);
  if (!negligible(raw[d - 1], raw.max_abs(), ctx)) {
    throw NumericError("centering left a non-negligible z^{d-1} coefficient");
  }
  std::vector<Complex> v(raw.coefficients().begin(), raw.coefficients().end());
  v[static_cast<std::size_t>(d - 1)] = Complex{};
  return {Poly(std::move(v)), L};
}

bool poly_equal(const Poly& p, const Poly& q, const NumericContext& ctx) {
  const double scale = std::max(p.max_abs(), q.max_abs());
  const int n = std::max(p.degree(), q.degree());
  for (int i = 0; i <= n; ++i) {
    if (!negligible(p[i] - q[i], scale, ctx)) return false;
  }
  return true;
}

double relative_distance(const Poly& p, const Poly& q) {
  const double scale = std::max(p.max_abs(), q.max_abs());
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  const int n = std::max(p.degree(), q.degree());
  for (int i = 0; i <= n; ++i) worst = std::max(worst, std::abs(p[i] - q[i]));
  return worst / scale;
}

}  // namespace samejulia
