#include <atomic>
#include <cstdlib>
#include <string>

#include "samejulia/errors.hpp"
#include "samejulia/kernels/escape.hpp"

namespace samejulia::kernels {
namespace {

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(SAMEJULIA_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Isa::Neon:
#if defined(SAMEJULIA_HAVE_NEON)
      return true;  // mandatory on AArch64
#else
      return false;
#endif
  }
  return false;
}

Isa widest_available() {
  const auto isas = available_isas();
  return isas.back();
}

Isa from_environment() {
  const char* env = std::getenv("SAMEJULIA_ISA");
  if (env == nullptr) return widest_available();
  const std::string value(env);
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (value == isa_name(isa) && cpu_supports(isa)) return isa;
  }
  return widest_available();
}

std::atomic<int> forced{-1};

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (cpu_supports(isa)) out.push_back(isa);
  }
  return out;
}

EscapeKernel kernel_for(Isa isa) {
  if (!cpu_supports(isa)) {
    throw InputError("escape kernel '" + std::string(isa_name(isa)) + "' is not available");
  }
  switch (isa) {
#if defined(SAMEJULIA_HAVE_AVX2)
    case Isa::Avx2:
      return &escape_avx2;
#endif
#if defined(SAMEJULIA_HAVE_NEON)
    case Isa::Neon:
      return &escape_neon;
#endif
    default:
      return &escape_scalar;
  }
}

Isa active_isa() {
  const int f = forced.load(std::memory_order_relaxed);
  if (f >= 0) return static_cast<Isa>(f);
  static const Isa detected = from_environment();
  return detected;
}

void force_isa(Isa isa) {
  kernel_for(isa);  // validates availability
  forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() { forced.store(-1, std::memory_order_relaxed); }

void escape(const EscapeProblem& problem, std::span<const double> re, std::span<const double> im,
            std::span<OrbitEnd> out) {
  if (re.size() != im.size() || out.size() != re.size()) {
    throw InputError("escape: mismatched batch sizes");
  }
  if (problem.coeff_re.empty() || problem.coeff_re.size() != problem.coeff_im.size()) {
    throw InputError("escape: empty or mismatched coefficient planes");
  }
  kernel_for(active_isa())(problem, re, im, out);
}

}  // namespace samejulia::kernels
