#include <immintrin.h>

#include "samejulia/kernels/escape.hpp"

namespace samejulia::kernels {

void escape_avx2(const EscapeProblem& problem, std::span<const double> re,
                 std::span<const double> im, std::span<OrbitEnd> out) {
  const auto degree = static_cast<std::ptrdiff_t>(problem.coeff_re.size()) - 1;
  const double* cr = problem.coeff_re.data();
  const double* ci = problem.coeff_im.data();
  const __m256d radius2 = _mm256_set1_pd(problem.radius2);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();

  const std::size_t count = re.size();
  const std::size_t blocked = count - count % 4;
  for (std::size_t p = 0; p < blocked; p += 4) {
    __m256d zr = _mm256_loadu_pd(re.data() + p);
    __m256d zi = _mm256_loadu_pd(im.data() + p);
    __m256d pr = zr;
    __m256d pi = zi;
    __m256d norm = _mm256_add_pd(_mm256_mul_pd(zr, zr), _mm256_mul_pd(zi, zi));
    __m256d active = _mm256_cmp_pd(norm, radius2, _CMP_LE_OQ);
    __m256d peak = _mm256_blendv_pd(zero, norm, active);
    __m256d iters = zero;

    for (std::int32_t k = 0; k < problem.max_iter && _mm256_movemask_pd(active) != 0; ++k) {
      __m256d ar = _mm256_set1_pd(cr[degree]);
      __m256d ai = _mm256_set1_pd(ci[degree]);
      for (std::ptrdiff_t i = degree - 1; i >= 0; --i) {
        const __m256d tr = _mm256_sub_pd(_mm256_mul_pd(ar, zr), _mm256_mul_pd(ai, zi));
        const __m256d ti = _mm256_add_pd(_mm256_mul_pd(ar, zi), _mm256_mul_pd(ai, zr));
        ar = _mm256_add_pd(tr, _mm256_set1_pd(cr[i]));
        ai = _mm256_add_pd(ti, _mm256_set1_pd(ci[i]));
      }
      pr = _mm256_blendv_pd(pr, zr, active);
      pi = _mm256_blendv_pd(pi, zi, active);
      zr = _mm256_blendv_pd(zr, ar, active);
      zi = _mm256_blendv_pd(zi, ai, active);
      iters = _mm256_add_pd(iters, _mm256_and_pd(active, one));

      norm = _mm256_add_pd(_mm256_mul_pd(ar, ar), _mm256_mul_pd(ai, ai));
      const __m256d still = _mm256_and_pd(active, _mm256_cmp_pd(norm, radius2, _CMP_LE_OQ));
      peak = _mm256_blendv_pd(peak, _mm256_max_pd(peak, norm), still);
      active = still;
    }

    alignas(32) double lane_zr[4], lane_zi[4], lane_pr[4], lane_pi[4], lane_peak[4], lane_it[4];
    _mm256_store_pd(lane_zr, zr);
    _mm256_store_pd(lane_zi, zi);
    _mm256_store_pd(lane_pr, pr);
    _mm256_store_pd(lane_pi, pi);
    _mm256_store_pd(lane_peak, peak);
    _mm256_store_pd(lane_it, iters);
    const int inside_mask = _mm256_movemask_pd(active);
    for (int lane = 0; lane < 4; ++lane) {
      OrbitEnd& end = out[p + static_cast<std::size_t>(lane)];
      end.re = lane_zr[lane];
      end.im = lane_zi[lane];
      end.prev_re = lane_pr[lane];
      end.prev_im = lane_pi[lane];
      end.peak_norm2 = lane_peak[lane];
      end.iterations = static_cast<std::int32_t>(lane_it[lane]);
      // A lane still active ran out of budget; an inactive one escaped.
      end.escaped = ((inside_mask >> lane) & 1) == 0;
    }
  }
  if (blocked < count) {
    escape_scalar(problem, re.subspan(blocked), im.subspan(blocked), out.subspan(blocked));
  }
}

}  // namespace samejulia::kernels
