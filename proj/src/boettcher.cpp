#include "samejulia/boettcher.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "samejulia/errors.hpp"
#include "samejulia/kernels/escape.hpp"

namespace samejulia {

LaurentTail::LaurentTail(std::vector<Complex> c, int order) : c_(std::move(c)) {
  c_.resize(static_cast<std::size_t>(order) + 1);
}

LaurentTail operator+(const LaurentTail& a, const LaurentTail& b) {
  LaurentTail out(std::min(a.order(), b.order()));
  for (int k = 0; k <= out.order(); ++k) out[k] = a[k] + b[k];
  return out;
}

LaurentTail operator*(const LaurentTail& a, const LaurentTail& b) {
  LaurentTail out(std::min(a.order(), b.order()));
  for (int i = 0; i <= out.order(); ++i) {
    if (a[i] == Complex{}) continue;
    for (int j = 0; i + j <= out.order(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

LaurentTail operator*(Complex s, const LaurentTail& a) {
  LaurentTail out(a.order());
  for (int k = 0; k <= a.order(); ++k) out[k] = s * a[k];
  return out;
}

LaurentTail LaurentTail::pow(int e) const {
  LaurentTail result(order());
  result[0] = 1.0;
  LaurentTail base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentTail LaurentTail::inverse() const {
  if ((*this)[0] == Complex{}) throw NumericError("series inverse needs a nonzero constant term");
  LaurentTail out(order());
  const Complex inv0 = 1.0 / (*this)[0];
  out[0] = inv0;
  for (int k = 1; k <= order(); ++k) {
    Complex acc{};
    for (int j = 1; j <= k; ++j) acc += (*this)[j] * out[k - j];
    out[k] = -acc * inv0;
  }
  return out;
}

LaurentTail LaurentTail::shifted(int k) const {
  LaurentTail out(order());
  for (int i = 0; i + k <= order(); ++i) out[i + k] = (*this)[i];
  return out;
}

Complex BoettcherSeries::operator()(Complex z) const {
  const Complex w = 1.0 / z;
  Complex tail{};
  for (int k = order(); k >= 1; --k) tail = (tail + b[static_cast<std::size_t>(k)]) * w;
  return z + b[0] + tail;
}

// With w = 1/z, φ(z) = z(1 + u(w)), u = Σ b_k w^{k+1}, and f(z) = a z^n (1 + v(w)).
// Dividing φ(f(z)) = a φ(z)^n by a z^n gives
//   (1 + v) + Σ_k b_k a^{-k-1} w^{n(k+1)} (1 + v)^{-k} = (1 + u)^n.
// The coefficient of w^j contains b_{j-1} only through n·u_j on the right,
// and the left side only involves b_k with n(k+1) <= j, which are known.
BoettcherSeries boettcher_series(const Poly& f, int K, const NumericContext& ctx) {
  ctx.validate();
  const int n = f.degree();
  if (n < 2) throw InputError("boettcher_series requires degree >= 2");
  if (K < 1) throw InputError("series order K must be at least 1");
  if (K > ctx.max_series_order) {
    throw InputError("series order " + std::to_string(K) + " exceeds max_series_order " +
                     std::to_string(ctx.max_series_order));
  }
  const int top = K + 1;  // highest power of w needed to fix b_K
  const Complex a = f.leading();

  LaurentTail one_plus_v(top);
  one_plus_v[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    if (n - i <= top) one_plus_v[n - i] = f[i] / a;
  }
  const LaurentTail inv = one_plus_v.inverse();
  const int k_max = top / n - 1;  // largest k whose term reaches w^top
  std::vector<LaurentTail> inv_powers;
  inv_powers.reserve(static_cast<std::size_t>(std::max(k_max, 0)) + 1);
  inv_powers.emplace_back(top);
  inv_powers[0][0] = 1.0;
  for (int k = 1; k <= k_max; ++k) inv_powers.push_back(inv_powers.back() * inv);

  BoettcherSeries out;
  out.b.assign(static_cast<std::size_t>(K) + 1, Complex{});
  out.leading = a;
  out.degree = n;

  auto lhs = [&](int order) {
    LaurentTail s(order);
    for (int j = 0; j <= order; ++j) s[j] = one_plus_v[j];
    Complex a_pow = 1.0 / a;
    for (int k = 0; n * (k + 1) <= order; ++k) {
      const Complex coef = out.b[static_cast<std::size_t>(k)] * a_pow;
      a_pow /= a;
      if (coef == Complex{}) continue;
      const LaurentTail& p = inv_powers[static_cast<std::size_t>(k)];
      for (int j = n * (k + 1); j <= order; ++j) s[j] += coef * p[j - n * (k + 1)];
    }
    return s;
  };
  auto rhs = [&](int order) {
    LaurentTail u(order);
    u[0] = 1.0;
    for (int k = 0; k + 1 <= order && k <= K; ++k) u[k + 1] = out.b[static_cast<std::size_t>(k)];
    return u.pow(n);
  };

  for (int j = 1; j <= top; ++j) {
    out.b[static_cast<std::size_t>(j - 1)] = Complex{};
    const Complex gap = lhs(j)[j] - rhs(j)[j];
    const Complex bk = gap / static_cast<double>(n);
    if (!std::isfinite(bk.real()) || !std::isfinite(bk.imag())) {
      throw NumericError("Boettcher solve produced a non-finite coefficient at order " +
                         std::to_string(j - 1));
    }
    out.b[static_cast<std::size_t>(j - 1)] = bk;
  }

  const LaurentTail l = lhs(top);
  const LaurentTail r = rhs(top);
  double scale = 1.0;
  for (int j = 0; j <= top; ++j) scale = std::max({scale, std::abs(l[j]), std::abs(r[j])});
  double worst = 0.0;
  for (int j = 0; j <= top; ++j) worst = std::max(worst, std::abs(l[j] - r[j]));
  out.residual = worst / scale;
  return out;
}

double functional_residual(const Poly& f, const BoettcherSeries& phi, Complex z) {
  const Complex left = phi(evaluate(f, z));
  const Complex right = phi.leading * std::pow(phi(z), phi.degree);
  return std::abs(left - right) / std::abs(right);
}

double coefficient_scale(const Poly& f) {
  const double lead = std::abs(f.leading());
  double m = 0.0;
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, std::abs(f[i]));
  return m / lead;
}

double escape_bound(const Poly& f) {
  const int n = f.degree();
  if (n < 2) throw InputError("escape_bound requires degree >= 2");
  const double lead = std::abs(f.leading());
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += std::abs(f[i]);
  return std::max({1.0, std::pow(4.0 / lead, 1.0 / (n - 1)), 2.0 * sum / lead});
}

namespace {

struct GreenFolding {
  int n;
  double log_lead;
  double log_n;
  Complex b0;
  double uncertain_peak2;

  // log|φ(w)| for large |w|, to first order in 1/w.
  double log_phi(Complex w) const { return std::log(std::abs(w)) + std::log(std::abs(1.0 + b0 / w)); }

  GreenValue operator()(const kernels::OrbitEnd& end) const {
    GreenValue g;
    g.iterations = end.iterations;
    g.escaped = end.escaped;
    if (!end.escaped) {
      g.boundary_uncertain = end.peak_norm2 > uncertain_peak2;
      return g;
    }
    const Complex z{end.re, end.im};
    double lphi;
    if (std::isfinite(z.real()) && std::isfinite(z.imag())) {
      lphi = log_phi(z);
    } else {
      // The last step overflowed; fold it analytically: φ(f(w)) = a φ(w)^n.
      lphi = log_lead + n * log_phi(Complex{end.prev_re, end.prev_im});
    }
    const double numer = lphi + log_lead / (n - 1);
    if (!(numer > 0.0)) return g;
    g.value = std::exp(std::log(numer) - end.iterations * log_n);
    return g;
  }
};

GreenFolding folding_for(const Poly& f) {
  const int n = f.degree();
  const double rho = escape_bound(f);
  return {n, std::log(std::abs(f.leading())), std::log(static_cast<double>(n)),
          f[n - 1] / (static_cast<double>(n) * f.leading()), 0.25 * rho * rho};
}

kernels::EscapeProblem make_problem(const Poly& f, const GreenOptions& opts, std::vector<double>& re,
                                    std::vector<double>& im) {
  re.clear();
  im.clear();
  for (const Complex& c : f.coefficients()) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  double radius = opts.escape_radius;
  if (radius <= 0.0) radius = 2.0 * std::max(1.0, escape_bound(f)) * 1e6;
  if (radius < escape_bound(f)) throw InputError("escape radius below the escape bound of the map");
  return {re, im, radius * radius, opts.max_iter};
}

}  // namespace

std::vector<GreenValue> green_batch(const Poly& f, std::span<const Complex> points,
                                    const GreenOptions& opts) {
  if (f.degree() < 2) throw InputError("green requires degree >= 2");
  std::vector<double> cre, cim;
  const auto problem = make_problem(f, opts, cre, cim);
  std::vector<double> re(points.size()), im(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    re[i] = points[i].real();
    im[i] = points[i].imag();
  }
  std::vector<kernels::OrbitEnd> ends(points.size());
  kernels::escape(problem, re, im, ends);
  const GreenFolding fold = folding_for(f);
  std::vector<GreenValue> out;
  out.reserve(ends.size());
  for (const auto& end : ends) out.push_back(fold(end));
  return out;
}

GreenValue green_detail(const Poly& f, Complex z, const GreenOptions& opts) {
  if (f.degree() < 2) throw InputError("green requires degree >= 2");
  std::vector<double> cre, cim;
  const auto problem = make_problem(f, opts, cre, cim);
  const double re[1] = {z.real()};
  const double im[1] = {z.imag()};
  kernels::OrbitEnd end;
  kernels::escape_scalar(problem, re, im, std::span<kernels::OrbitEnd>(&end, 1));
  return folding_for(f)(end);
}

double green(const Poly& f, Complex z, const NumericContext&) { return green_detail(f, z).value; }

double green_agreement(const Poly& f, const Poly& g, std::span<const Complex> samples,
                       const NumericContext&) {
  const auto gf = green_batch(f, samples);
  const auto gg = green_batch(g, samples);
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    worst = std::max(worst, std::abs(gf[i].value - gg[i].value));
  }
  return worst;
}

}  // namespace samejulia
