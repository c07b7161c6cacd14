#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace samejulia {

using Complex = std::complex<double>;

/// Tolerances shared by every numeric decision in the library.
struct NumericContext {
  double eps_rel = 1e-9;
  double eps_abs = 1e-12;
  int max_series_order = 64;

  /// Throws InputError unless both tolerances are positive.
  void validate() const;
};

/// Complex-coefficient polynomial, coefficients indexed by power.
///
/// Exact trailing zeros are trimmed on construction, so `degree()` is the
/// index of the last stored coefficient. The zero polynomial is stored as a
/// single zero constant and reports degree 0. Coefficients must be finite.
class Poly {
 public:
  Poly() : coeffs_{Complex{}} {}
  explicit Poly(std::vector<Complex> coeffs);
  Poly(std::initializer_list<Complex> coeffs) : Poly(std::vector<Complex>(coeffs)) {}

  static Poly constant(Complex c) { return Poly({c}); }
  static Poly monomial(Complex c, int degree);
  static Poly identity() { return monomial(1.0, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex leading() const { return coeffs_.back(); }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex{}; }

  /// Coefficient of z^i; zero outside the stored range.
  Complex operator[](int i) const {
    return (i >= 0 && i <= degree()) ? coeffs_[static_cast<std::size_t>(i)] : Complex{};
  }
  std::span<const Complex> coefficients() const { return coeffs_; }

  /// Largest coefficient modulus.
  double max_abs() const;

  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(Complex s, const Poly& p);
  Poly operator-() const { return Complex{-1.0} * *this; }

  /// Exact (bitwise) equality of the canonical representation.
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// L(z) = A z + B with A invertible.
struct AffineMap {
  Complex A{1.0};
  Complex B{0.0};

  static AffineMap identity() { return {}; }
  static AffineMap translation(Complex b) { return {1.0, b}; }
  static AffineMap scaling(Complex a) { return {a, 0.0}; }

  Complex operator()(Complex z) const { return A * z + B; }
  /// Throws InputError when |A| <= eps_abs.
  AffineMap inverse(const NumericContext& ctx = {}) const;
  /// (*this) after `inner`: z -> this(inner(z)).
  AffineMap after(const AffineMap& inner) const { return {A * inner.A, A * inner.B + B}; }
  Poly as_poly() const { return Poly({B, A}); }
};

/// Zero test shared by all modules: |c| <= eps_abs + eps_rel * scale.
inline bool negligible(Complex c, double scale, const NumericContext& ctx) {
  return std::abs(c) <= ctx.eps_abs + ctx.eps_rel * scale;
}

/// Zeros every coefficient that is negligible against p's largest
/// coefficient, then trims.
Poly canonicalize(const Poly& p, const NumericContext& ctx = {});

/// True iff all coefficients below the leading one are negligible.
bool is_monomial(const Poly& p, const NumericContext& ctx = {});

/// True iff the z^{d-1} coefficient is negligible (d = degree >= 1).
bool is_centered(const Poly& p, const NumericContext& ctx = {});

/// Horner evaluation.
Complex evaluate(const Poly& p, Complex z);

/// p∘q by Horner on polynomial values.
Poly compose(const Poly& p, const Poly& q);

/// k-fold self composition. k = 0 yields the identity map only when
/// `allow_identity` is set; otherwise it is rejected.
Poly iterate(const Poly& p, int k, bool allow_identity = false);

/// L^{-1} ∘ p ∘ L.
Poly conjugate(const Poly& p, const AffineMap& L, const NumericContext& ctx = {});

struct Centering {
  Poly centered;
  AffineMap map;  ///< translation L with centered = L^{-1} ∘ p ∘ L
};

/// Conjugates p by the translation that kills the z^{d-1} coefficient.
Centering center(const Poly& p, const NumericContext& ctx = {});

/// Coefficientwise comparison with tolerance eps_abs + eps_rel * (largest
/// coefficient over both polynomials). Missing coefficients count as zero.
bool poly_equal(const Poly& p, const Poly& q, const NumericContext& ctx = {});

/// Largest coefficientwise difference divided by the largest coefficient
/// of either input (0 for two zero polynomials).
double relative_distance(const Poly& p, const Poly& q);

}  // namespace samejulia
