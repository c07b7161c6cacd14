#include <arm_neon.h>

#include "samejulia/kernels/escape.hpp"

namespace samejulia::kernels {

void escape_neon(const EscapeProblem& problem, std::span<const double> re,
                 std::span<const double> im, std::span<OrbitEnd> out) {
  const auto degree = static_cast<std::ptrdiff_t>(problem.coeff_re.size()) - 1;
  const double* cr = problem.coeff_re.data();
  const double* ci = problem.coeff_im.data();
  const float64x2_t radius2 = vdupq_n_f64(problem.radius2);
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t zero = vdupq_n_f64(0.0);

  const std::size_t count = re.size();
  const std::size_t blocked = count - count % 2;
  for (std::size_t p = 0; p < blocked; p += 2) {
    float64x2_t zr = vld1q_f64(re.data() + p);
    float64x2_t zi = vld1q_f64(im.data() + p);
    float64x2_t pr = zr;
    float64x2_t pi = zi;
    float64x2_t norm = vaddq_f64(vmulq_f64(zr, zr), vmulq_f64(zi, zi));
    uint64x2_t active = vcleq_f64(norm, radius2);
    float64x2_t peak = vbslq_f64(active, norm, zero);
    float64x2_t iters = zero;

    for (std::int32_t k = 0; k < problem.max_iter && vmaxvq_u32(vreinterpretq_u32_u64(active)) != 0;
         ++k) {
      float64x2_t ar = vdupq_n_f64(cr[degree]);
      float64x2_t ai = vdupq_n_f64(ci[degree]);
      for (std::ptrdiff_t i = degree - 1; i >= 0; --i) {
        const float64x2_t tr = vsubq_f64(vmulq_f64(ar, zr), vmulq_f64(ai, zi));
        const float64x2_t ti = vaddq_f64(vmulq_f64(ar, zi), vmulq_f64(ai, zr));
        ar = vaddq_f64(tr, vdupq_n_f64(cr[i]));
        ai = vaddq_f64(ti, vdupq_n_f64(ci[i]));
      }
      pr = vbslq_f64(active, zr, pr);
      pi = vbslq_f64(active, zi, pi);
      zr = vbslq_f64(active, ar, zr);
      zi = vbslq_f64(active, ai, zi);
      iters = vaddq_f64(iters, vbslq_f64(active, one, zero));

      norm = vaddq_f64(vmulq_f64(ar, ar), vmulq_f64(ai, ai));
      const uint64x2_t still = vandq_u64(active, vcleq_f64(norm, radius2));
      peak = vbslq_f64(still, vmaxq_f64(peak, norm), peak);
      active = still;
    }

    for (int lane = 0; lane < 2; ++lane) {
      OrbitEnd& end = out[p + static_cast<std::size_t>(lane)];
      const double lane_zr[2] = {vgetq_lane_f64(zr, 0), vgetq_lane_f64(zr, 1)};
      const double lane_zi[2] = {vgetq_lane_f64(zi, 0), vgetq_lane_f64(zi, 1)};
      const double lane_pr[2] = {vgetq_lane_f64(pr, 0), vgetq_lane_f64(pr, 1)};
      const double lane_pi[2] = {vgetq_lane_f64(pi, 0), vgetq_lane_f64(pi, 1)};
      const double lane_peak[2] = {vgetq_lane_f64(peak, 0), vgetq_lane_f64(peak, 1)};
      const double lane_it[2] = {vgetq_lane_f64(iters, 0), vgetq_lane_f64(iters, 1)};
      const std::uint64_t lane_active[2] = {vgetq_lane_u64(active, 0), vgetq_lane_u64(active, 1)};
      end.re = lane_zr[lane];
      end.im = lane_zi[lane];
      end.prev_re = lane_pr[lane];
      end.prev_im = lane_pi[lane];
      end.peak_norm2 = lane_peak[lane];
      end.iterations = static_cast<std::int32_t>(lane_it[lane]);
      end.escaped = lane_active[lane] == 0;
    }
  }
  if (blocked < count) {
    escape_scalar(problem, re.subspan(blocked), im.subspan(blocked), out.subspan(blocked));
  }
}

}  // namespace samejulia::kernels
