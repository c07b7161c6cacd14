#include "samejulia/decompose.hpp"

#include <cmath>
#include <numbers>

#include "samejulia/errors.hpp"
#include "samejulia/intpow.hpp"
#include "samejulia/symmetry.hpp"

namespace samejulia {
namespace {

// Unknowns of R are solved top-down. Writing R^{∘q} = S∘R with
// S = R^{∘(q-1)} of degree M and leading coefficient c^{(M-1)/(r-1)}, the
// coefficient of z^{N-j} is affine in d_{r-j} with slope lead(S)·M·c^{M-1}
// and otherwise depends only on c, d_{r-1}, ..., d_{r-j+1}.
std::optional<Poly> solve_branch(const Poly& h, int r, int q, Complex c, const NumericContext& ctx) {
  const int N = h.degree();
  const auto M = static_cast<int>(*checked_pow(static_cast<std::uint64_t>(r), static_cast<unsigned>(q - 1)));
  const Complex lead_s = std::pow(c, (M - 1) / (r - 1));
  const Complex slope = lead_s * static_cast<double>(M) * std::pow(c, M - 1);
  if (std::abs(slope) <= ctx.eps_abs) return std::nullopt;

  std::vector<Complex> d(static_cast<std::size_t>(r) + 1);
  d[static_cast<std::size_t>(r)] = c;
  for (int j = 1; j <= r; ++j) {
    d[static_cast<std::size_t>(r - j)] = Complex{};
    const Poly trial = iterate(Poly(d), q);
    const Complex value = (h[N - j] - trial[N - j]) / slope;
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) return std::nullopt;
    d[static_cast<std::size_t>(r - j)] = value;
  }
  Poly root(std::move(d));
  if (!poly_equal(iterate(root, q), h, ctx)) return std::nullopt;
  return root;
}

}  // namespace

RootSearch compositional_root(const Poly& h, int q, const NumericContext& ctx) {
  ctx.validate();
  if (q < 2) throw InputError("compositional_root requires q >= 2");
  RootSearch out;
  const int N = h.degree();
  const auto r_opt = N >= 2 ? exact_root(static_cast<std::uint64_t>(N), static_cast<unsigned>(q))
                            : std::optional<std::uint64_t>{};
  if (!r_opt || *r_opt < 2) {
    out.status = RootSearch::Status::Impossible;
    return out;
  }
  const int r = static_cast<int>(*r_opt);
  // lead(R^{∘q}) = c^{1 + r + ... + r^{q-1}}
  const int exponent = static_cast<int>((*checked_pow(static_cast<std::uint64_t>(r), static_cast<unsigned>(q)) - 1) /
                                        static_cast<std::uint64_t>(r - 1));
  const double modulus = std::pow(std::abs(h.leading()), 1.0 / exponent);
  const double arg = std::arg(h.leading());
  for (int branch = 0; branch < exponent; ++branch) {
    const Complex c = std::polar(modulus, (arg + 2.0 * std::numbers::pi * branch) / exponent);
    ++out.branches_tried;
    if (auto root = solve_branch(h, r, q, c, ctx)) {
      out.status = RootSearch::Status::Found;
      out.root = std::move(root);
      out.branch = branch;
      return out;
    }
  }
  out.status = RootSearch::Status::NotFound;
  return out;
}

DecompositionResult minimal_root(const Poly& f, const NumericContext& ctx) {
  ctx.validate();
  if (f.degree() < 2) throw InputError("minimal_root requires degree >= 2");
  if (!is_centered(f, ctx)) throw InputError("minimal_root requires a centered polynomial");
  if (is_monomial(f, ctx)) {
    throw InputError("minimal_root: monomials have Σ = S¹ and belong to the circle case");
  }
  const SymmetryGroup sigma = symmetry_group(f, ctx);
  for (const PowerForm& form : power_forms(static_cast<std::uint64_t>(f.degree()))) {
    if (form.exponent < 2) continue;
    const int q = static_cast<int>(form.exponent);
    for (int j = 0; j < sigma.order; ++j) {
      const Complex eps = sigma.element(j);
      const RootSearch search = compositional_root((1.0 / eps) * f, q, ctx);
      if (search.found()) return {*search.root, eps, q, false, j, search.branch};
    }
  }
  return {f, Complex{1.0}, 1, true, 0, 0};
}

bool is_minimal(const Poly& f, const NumericContext& ctx) {
  if (f.degree() < 2) throw InputError("is_minimal requires degree >= 2");
  if (!is_centered(f, ctx)) throw InputError("is_minimal requires a centered polynomial");
  if (is_monomial(f, ctx)) return power_forms(static_cast<std::uint64_t>(f.degree())).size() == 1;
  return minimal_root(f, ctx).minimal;
}

bool verify_decomposition(const Poly& f, const DecompositionResult& d, const NumericContext& ctx) {
  if (d.q < 1) return false;
  const auto expected = checked_pow(static_cast<std::uint64_t>(d.root.degree()), static_cast<unsigned>(d.q));
  if (!expected || *expected != static_cast<std::uint64_t>(f.degree())) return false;
  if (!is_symmetry(f, d.epsilon, ctx)) return false;
  return poly_equal(d.epsilon * iterate(d.root, d.q), f, ctx);
}

}  // namespace samejulia
