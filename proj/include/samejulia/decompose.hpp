#pragma once

#include <optional>

#include "samejulia/poly.hpp"

namespace samejulia {

/// Outcome of a compositional root search. `Impossible` means deg(h) is not
/// r^q for an integer r >= 2; `NotFound` means every leading-coefficient
/// branch failed verification.
struct RootSearch {
  enum class Status { Found, NotFound, Impossible };
  Status status = Status::NotFound;
  std::optional<Poly> root;
  int branch = -1;  ///< index of the leading-coefficient branch that verified
  int branches_tried = 0;

  bool found() const { return status == Status::Found; }
};

/// Finds R of degree r with R∘...∘R (q times) ≈ h.
RootSearch compositional_root(const Poly& h, int q, const NumericContext& ctx = {});

/// f = epsilon · R^{∘q} with epsilon in Σ(f) and q maximal.
struct DecompositionResult {
  Poly root;
  Complex epsilon{1.0};
  int q = 1;
  bool minimal = true;
  int epsilon_power = 0;  ///< epsilon = generator^epsilon_power
  int branch = 0;
};

/// Requires a centered, non-monomial f of degree >= 2.
DecompositionResult minimal_root(const Poly& f, const NumericContext& ctx = {});

/// Minimal in the sense f != σ R^{∘i} with i > 1, σ in Σ. A monomial is
/// minimal iff its degree is not a perfect power.
bool is_minimal(const Poly& f, const NumericContext& ctx = {});

/// Re-checks every witness invariant of `d` against f independently of the
/// search that produced it.
bool verify_decomposition(const Poly& f, const DecompositionResult& d, const NumericContext& ctx = {});

}  // namespace samejulia
