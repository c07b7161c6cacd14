#include "samejulia/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "samejulia/boettcher.hpp"
#include "samejulia/classify.hpp"
#include "samejulia/decompose.hpp"
#include "samejulia/errors.hpp"
#include "samejulia/json_io.hpp"
#include "samejulia/kernels/escape.hpp"
#include "samejulia/render.hpp"
#include "samejulia/symmetry.hpp"

namespace samejulia::cli {
namespace {

using json_io::json;
using json_io::to_json;

struct Outcome {
  json inputs = json::object();
  json result = json::object();
  json residuals = json::object();
  int status = kOk;
  std::string failure;  ///< set together with kNumericError
};

struct Options {
  double eps_rel = 1e-9;
  double eps_abs = 1e-12;
  std::string isa = "auto";

  std::vector<std::string> polys;
  std::string sigma;
  bool hat = false;
  int q = 0;
  int i = 1;
  int m_max = 64;
  int series_order = 12;
  std::vector<std::string> points;
  int resolution = 512;
  int max_iter = 256;
  double half_width = 0.0;
  std::string center = "0,0";
  std::string out_path;
  std::string heatmap_path;
};

Complex parse_point(const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    try {
      return json_io::complex_from_json(json::parse(text));
    } catch (const json::parse_error&) {
      throw InputError("malformed complex value '" + text + "'");
    }
  }
  std::istringstream in(text);
  double re = 0.0;
  double im = 0.0;
  char comma = 0;
  if (!(in >> re) || !(in >> comma) || comma != ',' || !(in >> im)) {
    throw InputError("expected a complex value as 're,im', got '" + text + "'");
  }
  return {re, im};
}

RasterGrid grid_from(const Options& o, const Poly& f, const Poly* g) {
  RasterGrid grid = g ? shared_grid(f, *g) : default_grid(f);
  grid.resolution = o.resolution;
  grid.max_iter = o.max_iter;
  if (o.half_width > 0.0) grid.half_width = o.half_width;
  grid.center = parse_point(o.center);
  return grid;
}

json grid_json(const RasterGrid& g) {
  return {{"center", to_json(g.center)},
          {"half_width", g.half_width},
          {"resolution", g.resolution},
          {"max_iter", g.max_iter},
          {"escape_radius", g.escape_radius}};
}

void write_file(const std::string& path, const auto& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  writer(out);
}

Outcome dispatch(const std::string& cmd, const Options& o, const NumericContext& ctx) {
  Outcome r;
  std::vector<Poly> p;
  for (const auto& arg : o.polys) p.push_back(json_io::load_poly(arg));
  json polys = json::array();
  for (const auto& x : p) polys.push_back(to_json(x));
  r.inputs["polynomials"] = polys;

  if (cmd == "center") {
    const Centering c = center(p[0], ctx);
    r.result = to_json(c);
    r.residuals["reconjugation"] = relative_distance(conjugate(c.centered, c.map.inverse(ctx), ctx), p[0]);
  } else if (cmd == "symmetry") {
    const SymmetryGroup s = symmetry_group(p[0], ctx);
    r.result = to_json(s);
    if (!o.sigma.empty()) {
      const Complex sigma = parse_point(o.sigma);
      r.inputs["sigma"] = to_json(sigma);
      r.result["is_symmetry"] = is_symmetry(p[0], sigma, ctx);
    }
    if (o.hat) {
      const HatData h = hat_transform(p[0], ctx);
      r.result["hat"] = to_json(h);
      const Poly psi = Poly::monomial(1.0, h.l);
      r.residuals["semiconjugacy"] = relative_distance(compose(psi, p[0]), compose(h.hat, psi));
    }
  } else if (cmd == "classify") {
    const Classification c = classify(p[0], ctx);
    r.result = to_json(c);
    const int n = p[0].degree();
    if (c.kind == Classification::Kind::Circle) {
      r.residuals["conjugacy"] =
          relative_distance(conjugate(p[0], *c.conjugacy, ctx), Poly::monomial(c.sign_or_sigma, n));
    } else if (c.kind == Classification::Kind::Interval) {
      r.residuals["conjugacy"] =
          relative_distance(conjugate(p[0], *c.conjugacy, ctx), c.sign_or_sigma * tchebycheff(n));
    } else {
      const auto& d = *c.decomposition;
      r.residuals["decomposition"] = relative_distance(d.epsilon * iterate(d.root, d.q), c.centering.centered);
    }
  } else if (cmd == "same-julia") {
    const SameJuliaVerdict v = same_julia_set(p[0], p[1], ctx);
    r.result = to_json(v);
    if (v.witness_sigma) {
      const Poly pf = center(p[0], ctx).centered;
      const Poly pg = center(p[1], ctx).centered;
      r.residuals["sigma_identity"] = relative_distance(compose(pg, pf), *v.witness_sigma * compose(pf, pg));
    }
  } else if (cmd == "commutes") {
    const bool c = commutes(p[0], p[1], ctx);
    r.result = {{"commutes", c}};
    r.residuals["commutator"] = relative_distance(compose(p[0], p[1]), compose(p[1], p[0]));
  } else if (cmd == "decompose") {
    if (o.q > 0) {
      r.inputs["q"] = o.q;
      const RootSearch s = compositional_root(p[0], o.q, ctx);
      r.result = to_json(s);
      if (s.found()) r.residuals["recomposition"] = relative_distance(iterate(*s.root, o.q), p[0]);
    } else {
      const DecompositionResult d = minimal_root(p[0], ctx);
      r.result = to_json(d);
      r.residuals["recomposition"] = relative_distance(d.epsilon * iterate(d.root, d.q), p[0]);
      if (!verify_decomposition(p[0], d, ctx)) {
        r.status = kNumericError;
        r.failure = "decomposition witness failed re-verification";
      }
    }
  } else if (cmd == "minimal") {
    const bool minimal = is_minimal(p[0], ctx);
    r.result = {{"minimal", minimal}};
  } else if (cmd == "representatives") {
    r.inputs["i"] = o.i;
    json reps = json::array();
    for (const auto& x : same_julia_representatives(p[0], o.i, ctx)) reps.push_back(to_json(x));
    r.result = {{"count", reps.size()}, {"representatives", reps}};
  } else if (cmd == "degrees") {
    r.inputs["m_max"] = o.m_max;
    const std::vector<int> degrees = admissible_degrees(p[0], o.m_max, ctx);
    r.result = {{"degrees", degrees}};
  } else if (cmd == "boettcher") {
    r.inputs["series_order"] = o.series_order;
    const BoettcherSeries b = boettcher_series(p[0], o.series_order, ctx);
    r.result = to_json(b);
    r.residuals["functional_equation"] = b.residual;
    if (b.residual > ctx.eps_rel) {
      r.status = kNumericError;
      r.failure = "functional-equation residual above tolerance";
    }
  } else if (cmd == "green") {
    if (o.points.empty()) throw InputError("green needs at least one --point");
    std::vector<Complex> pts;
    json in = json::array();
    for (const auto& s : o.points) {
      pts.push_back(parse_point(s));
      in.push_back(to_json(pts.back()));
    }
    r.inputs["points"] = in;
    json values = json::array();
    for (const auto& g : green_batch(p[0], pts)) values.push_back(to_json(g));
    r.result = {{"values", values}};
  } else if (cmd == "render") {
    const RasterGrid grid = grid_from(o, p[0], nullptr);
    r.inputs["grid"] = grid_json(grid);
    const BinaryImage img = render_filled(p[0], grid, ctx);
    r.result = {{"width", img.width()},
                {"height", img.height()},
                {"set_pixels", img.count()},
                {"boundary_pixels", boundary_of(img).count()}};
    if (!o.out_path.empty()) {
      write_file(o.out_path, [&](std::ostream& os) { write_pbm(img, os); });
      r.result["out"] = o.out_path;
    }
    if (!o.heatmap_path.empty()) {
      write_file(o.heatmap_path, [&](std::ostream& os) { write_green_ppm(p[0], grid, os); });
      r.result["heatmap"] = o.heatmap_path;
    }
  } else if (cmd == "compare-render") {
    const RasterGrid grid = grid_from(o, p[0], &p[1]);
    r.inputs["grid"] = grid_json(grid);
    const BinaryImage a = render_filled(p[0], grid, ctx);
    const BinaryImage b = render_filled(p[1], grid, ctx);
    const double d = set_distance(a, b);
    r.result = {{"distance_pixels", std::isfinite(d) ? json(d) : json(nullptr)},
                {"set_pixels", {a.count(), b.count()}}};
  }
  return r;
}

json error_document(const std::string& cmd, const char* kind, const std::string& message) {
  return {{"command", cmd}, {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Decision procedures for polynomials sharing a Julia set", "samejulia"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--tolerance", o.eps_rel, "relative tolerance (eps_rel)")->check(CLI::PositiveNumber);
  app.add_option("--abs-tolerance", o.eps_abs, "absolute tolerance (eps_abs)")->check(CLI::PositiveNumber);
  app.add_option("--isa", o.isa, "escape kernel: auto, scalar, avx2, neon")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));

  auto poly_args = [&](CLI::App* sub, int count) {
    sub->add_option("polynomials", o.polys, "polynomial files or inline JSON")->required()->expected(count)->allow_extra_args(false);
  };
  auto grid_args = [&](CLI::App* sub) {
    sub->add_option("--resolution", o.resolution, "pixels per side");
    sub->add_option("--max-iter", o.max_iter, "iteration budget per pixel");
    sub->add_option("--half-width", o.half_width, "half width of the square window");
    sub->add_option("--center", o.center, "window centre as re,im");
  };

  poly_args(app.add_subcommand("center", "translate to centered form"), 1);
  auto* sym = app.add_subcommand("symmetry", "rotational symmetry group of the Julia set");
  poly_args(sym, 1);
  sym->add_option("--sigma", o.sigma, "test a candidate rotation re,im");
  sym->add_flag("--hat", o.hat, "also emit the symmetry-collapsed polynomial");
  poly_args(app.add_subcommand("classify", "circle / interval / general verdict"), 1);
  poly_args(app.add_subcommand("same-julia", "decide whether two maps share a Julia set"), 2);
  poly_args(app.add_subcommand("commutes", "test f∘g = g∘f"), 2);
  auto* dec = app.add_subcommand("decompose", "minimal root f = eps R^q (or a q-th compositional root)");
  poly_args(dec, 1);
  dec->add_option("--q", o.q, "find a q-th compositional root instead")->check(CLI::Range(2, 64));
  poly_args(app.add_subcommand("minimal", "minimality test"), 1);
  auto* reps = app.add_subcommand("representatives", "all degree n^i maps with the same Julia set");
  poly_args(reps, 1);
  reps->add_option("--i", o.i, "iterate index i")->check(CLI::PositiveNumber);
  auto* deg = app.add_subcommand("degrees", "degrees m <= m-max admitting a map with the same Julia set");
  poly_args(deg, 1);
  deg->add_option("--m-max", o.m_max, "largest degree to report");
  auto* boe = app.add_subcommand("boettcher", "Boettcher series at infinity");
  poly_args(boe, 1);
  boe->add_option("--series-order", o.series_order, "truncation order K");
  auto* grn = app.add_subcommand("green", "Green function of the basin of infinity");
  poly_args(grn, 1);
  grn->add_option("--point", o.points, "evaluation point re,im or [re,im] (repeatable)")->allow_extra_args(false);
  auto* ren = app.add_subcommand("render", "escape-time mask of the filled Julia set");
  poly_args(ren, 1);
  grid_args(ren);
  ren->add_option("--out", o.out_path, "P4 bitmap output path");
  ren->add_option("--heatmap", o.heatmap_path, "P6 Green-function heat map output path");
  auto* cmp = app.add_subcommand("compare-render", "Hausdorff distance between two rendered Julia sets");
  poly_args(cmp, 2);
  grid_args(cmp);

  std::string cmd;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream err;
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    for (auto* sub : app.get_subcommands()) cmd = sub->get_name();
    out << error_document(cmd, "input", e.what()).dump(2) << '\n';
    return kInputError;
  }
  cmd = app.get_subcommands().front()->get_name();

  NumericContext ctx;
  ctx.eps_rel = o.eps_rel;
  ctx.eps_abs = o.eps_abs;
  ctx.max_series_order = std::max(64, o.series_order);
  try {
    kernels::reset_isa();
    if (o.isa != "auto") {
      bool matched = false;
      for (auto isa : {kernels::Isa::Scalar, kernels::Isa::Avx2, kernels::Isa::Neon}) {
        if (o.isa == kernels::isa_name(isa)) {
          kernels::force_isa(isa);
          matched = true;
        }
      }
      if (!matched) throw InputError("unknown --isa value");
    }
    Outcome r = dispatch(cmd, o, ctx);
    json doc = {{"command", cmd},
                {"inputs", r.inputs},
                {"result", r.result},
                {"diagnostics",
                 {{"tolerance", {{"eps_rel", ctx.eps_rel}, {"eps_abs", ctx.eps_abs}}},
                  {"residuals", r.residuals},
                  {"isa", std::string(kernels::isa_name(kernels::active_isa()))}}}};
    if (r.status != kOk) doc["error"] = {{"kind", "numeric"}, {"message", r.failure}};
    out << doc.dump(2) << '\n';
    return r.status;
  } catch (const InputError& e) {
    out << error_document(cmd, "input", e.what()).dump(2) << '\n';
    return kInputError;
  } catch (const NumericError& e) {
    out << error_document(cmd, "numeric", e.what()).dump(2) << '\n';
    return kNumericError;
  }
}

}  // namespace samejulia::cli
