#pragma once

#include "samejulia/poly.hpp"

namespace samejulia {

/// Rotational symmetry group of the Julia set of a centered polynomial:
/// the whole circle (monomials) or the cyclic group of l-th roots of unity.
struct SymmetryGroup {
  enum class Kind { FullCircle, Cyclic };
  Kind kind = Kind::Cyclic;
  int order = 1;             ///< l; meaningful for Cyclic only
  Complex generator{1.0};    ///< e^{2πi/l}; meaningful for Cyclic only

  bool finite() const { return kind == Kind::Cyclic; }
  /// generator^j, reduced mod l. Cyclic only.
  Complex element(int j) const;
};

/// Computes Σ from the coefficient support of the canonicalized polynomial:
/// l = gcd{n - i : c_i != 0, i < n}; empty support means FullCircle.
SymmetryGroup symmetry_group(const Poly& f, const NumericContext& ctx = {});

/// Checks f(σz) = σ^n f(z) coefficientwise.
bool is_symmetry(const Poly& f, Complex sigma, const NumericContext& ctx = {});

/// f = z^r f0(z^l) together with hat = z^r [f0(z)]^l, which satisfies
/// ψ∘f = hat∘ψ for ψ(z) = z^l.
struct HatData {
  int r = 0;
  int l = 1;
  Poly f0;
  Poly hat;
};

HatData hat_transform(const Poly& f, const NumericContext& ctx = {});

}  // namespace samejulia
