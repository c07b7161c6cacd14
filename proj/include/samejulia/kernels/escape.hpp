#pragma once

// Escape-time iteration of a complex polynomial over a batch of starting
// points. Every variant performs the same IEEE operations in the same order
// (no fused multiply-add), so all of them produce bit-identical results.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace samejulia::kernels {

/// Coefficients split into real/imaginary planes, ascending powers.
struct EscapeProblem {
  std::span<const double> coeff_re;
  std::span<const double> coeff_im;
  double radius2 = 0.0;  ///< squared escape radius
  std::int32_t max_iter = 0;
};

/// Where an orbit stopped. `iterations` counts applications of the map;
/// when `escaped` is set, (re, im) is the first iterate outside the radius
/// (possibly non-finite) and (prev_re, prev_im) the iterate before it.
/// `peak_norm2` is the largest |z|^2 among the iterates that stayed inside.
struct OrbitEnd {
  double re = 0.0;
  double im = 0.0;
  double prev_re = 0.0;
  double prev_im = 0.0;
  double peak_norm2 = 0.0;
  std::int32_t iterations = 0;
  bool escaped = false;
};

using EscapeKernel = void (*)(const EscapeProblem& problem, std::span<const double> re,
                              std::span<const double> im, std::span<OrbitEnd> out);

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

void escape_scalar(const EscapeProblem& problem, std::span<const double> re,
                   std::span<const double> im, std::span<OrbitEnd> out);
#if defined(SAMEJULIA_HAVE_AVX2)
void escape_avx2(const EscapeProblem& problem, std::span<const double> re,
                 std::span<const double> im, std::span<OrbitEnd> out);
#endif
#if defined(SAMEJULIA_HAVE_NEON)
void escape_neon(const EscapeProblem& problem, std::span<const double> re,
                 std::span<const double> im, std::span<OrbitEnd> out);
#endif

/// Variants compiled in and supported by the running CPU; Scalar first.
std::vector<Isa> available_isas();

/// Kernel for a specific variant; throws InputError if unavailable.
EscapeKernel kernel_for(Isa isa);

/// The variant used by default: the widest available unless overridden via
/// `force_isa` or the SAMEJULIA_ISA environment variable (scalar|avx2|neon).
Isa active_isa();
void force_isa(Isa isa);
void reset_isa();

/// Runs the active kernel.
void escape(const EscapeProblem& problem, std::span<const double> re, std::span<const double> im,
            std::span<OrbitEnd> out);

}  // namespace samejulia::kernels
