#include "samejulia/classify.hpp"

#include <cmath>
#include <numbers>

#include "samejulia/errors.hpp"
#include "samejulia/intpow.hpp"
#include "samejulia/symmetry.hpp"

namespace samejulia {

Poly tchebycheff(int n) {
  if (n < 0) throw InputError("tchebycheff requires n >= 0");
  Poly prev = Poly::constant(1.0);
  if (n == 0) return prev;
  Poly cur = Poly::identity();
  const Poly two_z = Poly::monomial(2.0, 1);
  for (int k = 1; k < n; ++k) {
    Poly next = two_z * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::string_view kind_name(Classification::Kind kind) {
  switch (kind) {
    case Classification::Kind::Circle:
      return "circle";
    case Classification::Kind::Interval:
      return "interval";
    case Classification::Kind::General:
      return "general";
  }
  return "unknown";
}

std::string_view reason_name(SameJuliaVerdict::Reason reason) {
  using R = SameJuliaVerdict::Reason;
  switch (reason) {
    case R::CircleRadius:
      return "circle-radius";
    case R::IntervalConjugacy:
      return "interval-conjugacy";
    case R::SigmaCommuting:
      return "sigma-commuting";
    case R::DegreeObstruction:
      return "degree-obstruction";
    case R::CenteringMismatch:
      return "centering-mismatch";
    case R::IdentityFailure:
      return "identity-failure";
  }
  return "unknown";
}

std::optional<IntervalScaling> interval_scaling(const Poly& centered, const NumericContext& ctx) {
  const int n = centered.degree();
  if (n < 2) return std::nullopt;
  const Poly t = tchebycheff(n);
  for (double sign : {1.0, -1.0}) {
    // lead(conjugate(f, λz)) = a λ^{n-1} must equal sign · 2^{n-1}
    const Complex target = sign * std::ldexp(1.0, n - 1) / centered.leading();
    const double modulus = std::pow(std::abs(target), 1.0 / (n - 1));
    for (int k = 0; k < n - 1; ++k) {
      const Complex lambda = std::polar(modulus, (std::arg(target) + 2.0 * std::numbers::pi * k) / (n - 1));
      if (poly_equal(conjugate(centered, AffineMap::scaling(lambda), ctx), sign * t, ctx)) {
        return IntervalScaling{lambda, sign};
      }
    }
  }
  return std::nullopt;
}

Classification classify(const Poly& f, const NumericContext& ctx) {
  ctx.validate();
  if (f.degree() < 2) throw InputError("classify requires degree >= 2");
  Classification out;
  out.centering = center(f, ctx);
  const Poly& pc = out.centering.centered;
  const int n = pc.degree();

  if (is_monomial(pc, ctx)) {
    const Complex a = pc.leading();
    out.kind = Classification::Kind::Circle;
    out.circle_radius = std::pow(std::abs(a), -1.0 / (n - 1));
    out.conjugacy = out.centering.map.after(AffineMap::scaling(out.circle_radius));
    out.sign_or_sigma = a / std::abs(a);
    return out;
  }
  if (auto s = interval_scaling(pc, ctx)) {
    out.kind = Classification::Kind::Interval;
    out.conjugacy = out.centering.map.after(AffineMap::scaling(s->lambda));
    out.sign_or_sigma = s->sign;
    return out;
  }
  out.kind = Classification::Kind::General;
  out.decomposition = minimal_root(pc, ctx);
  return out;
}

bool commutes(const Poly& f, const Poly& g, const NumericContext& ctx) {
  return poly_equal(compose(f, g), compose(g, f), ctx);
}

SameJuliaVerdict same_julia_set(const Poly& f, const Poly& g, const NumericContext& ctx) {
  using R = SameJuliaVerdict::Reason;
  ctx.validate();
  if (f.degree() < 2 || g.degree() < 2) throw InputError("same_julia_set requires degrees >= 2");
  const Centering cf = center(f, ctx);
  const Centering cg = center(g, ctx);
  const double shift_scale = std::max({1.0, std::abs(cf.map.B), std::abs(cg.map.B)});
  if (!negligible(cf.map.B - cg.map.B, shift_scale, ctx)) return {false, std::nullopt, R::CenteringMismatch};

  const Poly& pf = cf.centered;
  const Poly& pg = cg.centered;
  const int n = pf.degree();
  const int m = pg.degree();
  const Complex a = pf.leading();
  const Complex b = pg.leading();

  const bool mono_f = is_monomial(pf, ctx);
  const bool mono_g = is_monomial(pg, ctx);
  if (mono_f || mono_g) {
    if (!(mono_f && mono_g)) return {false, std::nullopt, R::CircleRadius};
    const double rf = std::pow(std::abs(a), -1.0 / (n - 1));
    const double rg = std::pow(std::abs(b), -1.0 / (m - 1));
    return {negligible(rf - rg, std::max(rf, rg), ctx), std::nullopt, R::CircleRadius};
  }

  const bool interval_f = interval_scaling(pf, ctx).has_value();
  const bool interval_g = interval_scaling(pg, ctx).has_value();
  if (!interval_f && !interval_g &&
      !common_power_base(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m))) {
    return {false, std::nullopt, R::DegreeObstruction};
  }

  // g∘f has leading coefficient b a^m, f∘g has a b^n.
  const double log_mod = (m - 1) * std::log(std::abs(a)) - (n - 1) * std::log(std::abs(b));
  const double angle = (m - 1) * std::arg(a) - (n - 1) * std::arg(b);
  const Complex sigma = std::polar(std::exp(log_mod), angle);
  if (std::abs(std::abs(sigma) - 1.0) > ctx.eps_abs + ctx.eps_rel) {
    return {false, std::nullopt, R::IdentityFailure};
  }
  const bool same = is_symmetry(pf, sigma, ctx) && poly_equal(compose(pg, pf), sigma * compose(pf, pg), ctx);
  if (!same) return {false, std::nullopt, R::IdentityFailure};
  return {true, sigma, interval_f ? R::IntervalConjugacy : R::SigmaCommuting};
}

std::vector<Poly> same_julia_representatives(const Poly& f, int i, const NumericContext& ctx) {
  ctx.validate();
  if (i < 1) throw InputError("same_julia_representatives requires i >= 1");
  const SymmetryGroup sigma = symmetry_group(f, ctx);
  if (!sigma.finite()) {
    throw InputError("same_julia_representatives: Σ is the full circle (circle case), the set is a continuum");
  }
  const Poly fi = iterate(f, i);
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(sigma.order));
  for (int j = 0; j < sigma.order; ++j) out.push_back(sigma.element(j) * fi);
  return out;
}

std::vector<int> admissible_degrees(const Poly& f, int m_max, const NumericContext& ctx) {
  if (f.degree() < 2) throw InputError("admissible_degrees requires degree >= 2");
  if (!is_centered(f, ctx)) throw InputError("admissible_degrees requires a centered polynomial");
  const Classification c = classify(f, ctx);
  if (c.kind != Classification::Kind::General) {
    throw InputError(std::string("admissible_degrees: hypothesis fails, Julia set is a ") +
                     std::string(kind_name(c.kind)) + " (every degree m >= 2 is admissible)");
  }
  if (!c.decomposition->minimal) throw InputError("admissible_degrees: hypothesis fails, f is not minimal");
  std::vector<int> out;
  const auto n = static_cast<std::uint64_t>(f.degree());
  for (unsigned i = 1;; ++i) {
    const auto p = checked_pow(n, i);
    if (!p || *p > static_cast<std::uint64_t>(std::max(m_max, 0))) break;
    out.push_back(static_cast<int>(*p));
  }
  return out;
}

}  // namespace samejulia
