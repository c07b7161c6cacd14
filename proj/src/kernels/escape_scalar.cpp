#include "samejulia/kernels/escape.hpp"

namespace samejulia::kernels {

void escape_scalar(const EscapeProblem& problem, std::span<const double> re,
                   std::span<const double> im, std::span<OrbitEnd> out) {
  const auto degree = static_cast<std::ptrdiff_t>(problem.coeff_re.size()) - 1;
  const double* cr = problem.coeff_re.data();
  const double* ci = problem.coeff_im.data();

  for (std::size_t p = 0; p < re.size(); ++p) {
    double zr = re[p];
    double zi = im[p];
    double pr = zr;
    double pi = zi;
    double norm = zr * zr + zi * zi;
    OrbitEnd end;
    end.escaped = !(norm <= problem.radius2);
    end.peak_norm2 = end.escaped ? 0.0 : norm;

    std::int32_t k = 0;
    while (!end.escaped && k < problem.max_iter) {
      pr = zr;
      pi = zi;
      double ar = cr[degree];
      double ai = ci[degree];
      for (std::ptrdiff_t i = degree - 1; i >= 0; --i) {
        const double tr = ar * zr - ai * zi;
        const double ti = ar * zi + ai * zr;
        ar = tr + cr[i];
        ai = ti + ci[i];
      }
      zr = ar;
      zi = ai;
      ++k;
      norm = zr * zr + zi * zi;
      if (norm <= problem.radius2) {
        if (norm > end.peak_norm2) end.peak_norm2 = norm;
      } else {
        end.escaped = true;
      }
    }
    end.re = zr;
    end.im = zi;
    end.prev_re = pr;
    end.prev_im = pi;
    end.iterations = k;
    out[p] = end;
  }
}

}  // namespace samejulia::kernels
