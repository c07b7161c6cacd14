#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "samejulia/decompose.hpp"
#include "samejulia/poly.hpp"

namespace samejulia {

/// Tchebycheff polynomial T_n by the three-term recurrence. n >= 1.
Poly tchebycheff(int n);

struct Classification {
  enum class Kind { Circle, Interval, General };
  Kind kind = Kind::General;
  /// Circle: conjugate(f, L) = sigma z^n with |sigma| = 1, |A| = circle radius.
  /// Interval: conjugate(f, L) = sign · T_n. General: absent.
  std::optional<AffineMap> conjugacy;
  Complex sign_or_sigma{1.0};
  std::optional<DecompositionResult> decomposition;  ///< General only
  Centering centering;                               ///< of the input
  double circle_radius = 0.0;                        ///< Circle only, |a|^{-1/(n-1)}
};

std::string_view kind_name(Classification::Kind kind);

Classification classify(const Poly& f, const NumericContext& ctx = {});

/// Scaling λ and sign with conjugate(f, λz) ≈ sign · T_n, for centered f.
struct IntervalScaling {
  Complex lambda;
  double sign;
};
std::optional<IntervalScaling> interval_scaling(const Poly& centered, const NumericContext& ctx = {});

bool commutes(const Poly& f, const Poly& g, const NumericContext& ctx = {});

struct SameJuliaVerdict {
  enum class Reason {
    CircleRadius,
    IntervalConjugacy,
    SigmaCommuting,
    DegreeObstruction,
    CenteringMismatch,
    IdentityFailure,
  };
  bool same = false;
  std::optional<Complex> witness_sigma;
  Reason reason = Reason::IdentityFailure;
};

std::string_view reason_name(SameJuliaVerdict::Reason reason);

/// Decides J_f = J_g via g∘f = σ f∘g on the centered forms, with σ forced
/// by the leading coefficients.
SameJuliaVerdict same_julia_set(const Poly& f, const Poly& g, const NumericContext& ctx = {});

/// {σ^j f^{∘i} : 0 <= j < l} for a centered f with finite Σ of order l.
std::vector<Poly> same_julia_representatives(const Poly& f, int i, const NumericContext& ctx = {});

/// All n^i <= m_max. Requires f centered, minimal and in the general case;
/// otherwise throws InputError naming the failed hypothesis.
std::vector<int> admissible_degrees(const Poly& f, int m_max, const NumericContext& ctx = {});

}  // namespace samejulia
