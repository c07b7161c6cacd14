#include "samejulia/symmetry.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "samejulia/errors.hpp"

namespace samejulia {
namespace {

void require_centered(const Poly& f, const NumericContext& ctx, const char* op) {
  if (f.degree() < 2) throw InputError(std::string(op) + " requires degree >= 2");
  if (!is_centered(f, ctx)) throw InputError(std::string(op) + " requires a centered polynomial");
}

Complex root_of_unity(int j, int l) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(l);
  return std::polar(1.0, angle);
}

}  // namespace

Complex SymmetryGroup::element(int j) const {
  if (!finite()) throw InputError("element() needs a finite symmetry group");
  const int k = ((j % order) + order) % order;
  return root_of_unity(k, order);
}

SymmetryGroup symmetry_group(const Poly& f, const NumericContext& ctx) {
  require_centered(f, ctx, "symmetry_group");
  const Poly g = canonicalize(f, ctx);
  const int n = g.degree();
  int l = 0;
  for (int i = 0; i < n; ++i) {
    if (g[i] != Complex{}) l = std::gcd(l, n - i);
  }
  if (l == 0) return {SymmetryGroup::Kind::FullCircle, 0, Complex{1.0}};
  return {SymmetryGroup::Kind::Cyclic, l, root_of_unity(1, l)};
}

bool is_symmetry(const Poly& f, Complex sigma, const NumericContext& ctx) {
  require_centered(f, ctx, "is_symmetry");
  if (std::abs(std::abs(sigma) - 1.0) > ctx.eps_abs + ctx.eps_rel) {
    throw InputError("a symmetry must have modulus 1");
  }
  const int n = f.degree();
  std::vector<Complex> rotated(static_cast<std::size_t>(n) + 1);
  std::vector<Complex> scaled(static_cast<std::size_t>(n) + 1);
  const Complex sigma_n = std::pow(sigma, n);
  Complex power{1.0};
  for (int i = 0; i <= n; ++i) {
    rotated[static_cast<std::size_t>(i)] = f[i] * power;
    scaled[static_cast<std::size_t>(i)] = f[i] * sigma_n;
    power *= sigma;
  }
  return poly_equal(Poly(std::move(rotated)), Poly(std::move(scaled)), ctx);
}

HatData hat_transform(const Poly& f, const NumericContext& ctx) {
  const SymmetryGroup sigma = symmetry_group(f, ctx);
  if (!sigma.finite()) throw InputError("hat_transform requires a finite symmetry group (non-monomial)");
  const Poly g = canonicalize(f, ctx);
  const int n = g.degree();
  const int l = sigma.order;
  int r = 0;
  while (g[r] == Complex{}) ++r;

  std::vector<Complex> f0((static_cast<std::size_t>(n - r) / static_cast<std::size_t>(l)) + 1);
  for (int i = r; i <= n; i += l) f0[static_cast<std::size_t>((i - r) / l)] = g[i];
  HatData out;
  out.r = r;
  out.l = l;
  out.f0 = Poly(std::move(f0));

  Poly power = Poly::constant(1.0);
  for (int k = 0; k < l; ++k) power = power * out.f0;
  out.hat = Poly::monomial(1.0, r) * power;
  return out;
}

}  // namespace samejulia
