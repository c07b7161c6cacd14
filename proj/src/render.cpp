#include "samejulia/render.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "samejulia/boettcher.hpp"
#include "samejulia/errors.hpp"
#include "samejulia/kernels/escape.hpp"

namespace samejulia {

void RasterGrid::validate_for(const Poly& f) const {
  if (resolution < 16) throw InputError("grid resolution must be at least 16");
  if (!(half_width > 0.0)) throw InputError("grid half_width must be positive");
  if (max_iter < 1) throw InputError("grid max_iter must be positive");
  if (f.degree() < 2) throw InputError("rendering requires degree >= 2");
  const double floor = std::max(2.0 * (1.0 + coefficient_scale(f)), escape_bound(f));
  if (!(escape_radius >= floor)) {
    throw InputError("escape radius " + std::to_string(escape_radius) + " is below the required " +
                     std::to_string(floor));
  }
}

Complex RasterGrid::pixel_center(int x, int y) const {
  const double re = center.real() - half_width + (2.0 * x + 1.0) * half_width / resolution;
  const double im = center.imag() + half_width - (2.0 * y + 1.0) * half_width / resolution;
  return {re, im};
}

RasterGrid default_grid(const Poly& f) {
  RasterGrid g;
  const double scale = coefficient_scale(f);
  g.half_width = 2.0 + scale;
  g.escape_radius = std::max(2.0 * (1.0 + scale), 2.0 * escape_bound(f));
  return g;
}

RasterGrid shared_grid(const Poly& f, const Poly& g) {
  RasterGrid a = default_grid(f);
  const RasterGrid b = default_grid(g);
  a.half_width = std::max(a.half_width, b.half_width);
  a.escape_radius = std::max(a.escape_radius, b.escape_radius);
  return a;
}

std::size_t BinaryImage::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BinaryImage render_filled(const Poly& f, const RasterGrid& grid, const NumericContext&) {
  grid.validate_for(f);
  std::vector<double> cre, cim;
  for (const Complex& c : f.coefficients()) {
    cre.push_back(c.real());
    cim.push_back(c.imag());
  }
  const kernels::EscapeProblem problem{cre, cim, grid.escape_radius * grid.escape_radius, grid.max_iter};
  const kernels::EscapeKernel kernel = kernels::kernel_for(kernels::active_isa());

  const int res = grid.resolution;
  BinaryImage img(res, res);
  std::vector<double> re(static_cast<std::size_t>(res)), im(static_cast<std::size_t>(res));
  std::vector<kernels::OrbitEnd> ends(static_cast<std::size_t>(res));
  for (int y = 0; y < res; ++y) {
    for (int x = 0; x < res; ++x) {
      const Complex z = grid.pixel_center(x, y);
      re[static_cast<std::size_t>(x)] = z.real();
      im[static_cast<std::size_t>(x)] = z.imag();
    }
    kernel(problem, re, im, ends);
    for (int x = 0; x < res; ++x) img.set(x, y, !ends[static_cast<std::size_t>(x)].escaped);
  }
  return img;
}

BinaryImage boundary_of(const BinaryImage& img) {
  BinaryImage out(img.width(), img.height());
  auto unset = [&](int x, int y) {
    return x < 0 || y < 0 || x >= img.width() || y >= img.height() || !img.get(x, y);
  };
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (img.get(x, y) && (unset(x - 1, y) || unset(x + 1, y) || unset(x, y - 1) || unset(x, y + 1))) {
        out.set(x, y, true);
      }
    }
  }
  return out;
}

namespace {

constexpr double kFar = 1e20;

// Felzenszwalb-Huttenlocher lower envelope of parabolas along one line.
void distance_1d(const std::vector<double>& f, std::vector<double>& d, std::vector<int>& v,
                 std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  auto at = [](auto& vec, int i) -> auto& { return vec[static_cast<std::size_t>(i)]; };
  auto intersect = [&](int q, int p) {
    return ((at(f, q) + double(q) * q) - (at(f, p) + double(p) * p)) / (2.0 * (q - p));
  };
  int k = 0;
  at(v, 0) = 0;
  at(z, 0) = -std::numeric_limits<double>::infinity();
  at(z, 1) = std::numeric_limits<double>::infinity();
  for (int q = 1; q < n; ++q) {
    double s = intersect(q, at(v, k));
    while (s <= at(z, k)) {
      --k;
      s = intersect(q, at(v, k));
    }
    ++k;
    at(v, k) = q;
    at(z, k) = s;
    at(z, k + 1) = std::numeric_limits<double>::infinity();
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (at(z, k + 1) < q) ++k;
    const int p = at(v, k);
    at(d, q) = double(q - p) * (q - p) + at(f, p);
  }
}

// Squared Euclidean distance from every pixel to the nearest set pixel.
std::vector<double> squared_distance_transform(const BinaryImage& sites) {
  const int w = sites.width();
  const int h = sites.height();
  std::vector<double> grid(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) grid[static_cast<std::size_t>(y) * w + x] = sites.get(x, y) ? 0.0 : kFar;
  }
  const int n = std::max(w, h);
  std::vector<double> f(static_cast<std::size_t>(n)), d(static_cast<std::size_t>(n)), z(static_cast<std::size_t>(n) + 1);
  std::vector<int> v(static_cast<std::size_t>(n));
  f.resize(static_cast<std::size_t>(h));
  d.resize(static_cast<std::size_t>(h));
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) f[static_cast<std::size_t>(y)] = grid[static_cast<std::size_t>(y) * w + x];
    distance_1d(f, d, v, z);
    for (int y = 0; y < h; ++y) grid[static_cast<std::size_t>(y) * w + x] = d[static_cast<std::size_t>(y)];
  }
  f.resize(static_cast<std::size_t>(w));
  d.resize(static_cast<std::size_t>(w));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) f[static_cast<std::size_t>(x)] = grid[static_cast<std::size_t>(y) * w + x];
    distance_1d(f, d, v, z);
    for (int x = 0; x < w; ++x) grid[static_cast<std::size_t>(y) * w + x] = d[static_cast<std::size_t>(x)];
  }
  return grid;
}

// Largest distance from a boundary pixel of `from` to the boundary of `to`.
double directed(const BinaryImage& from, const std::vector<double>& to_dt) {
  double worst = 0.0;
  for (int y = 0; y < from.height(); ++y) {
    for (int x = 0; x < from.width(); ++x) {
      if (from.get(x, y)) worst = std::max(worst, to_dt[static_cast<std::size_t>(y) * from.width() + x]);
    }
  }
  return std::sqrt(worst);
}

}  // namespace

double set_distance(const BinaryImage& a, const BinaryImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw InputError("set_distance: image dimensions differ");
  }
  const BinaryImage ba = boundary_of(a);
  const BinaryImage bb = boundary_of(b);
  const bool ea = ba.count() == 0;
  const bool eb = bb.count() == 0;
  if (ea && eb) return 0.0;
  if (ea || eb) return std::numeric_limits<double>::infinity();
  const auto dta = squared_distance_transform(ba);
  const auto dtb = squared_distance_transform(bb);
  return std::max(directed(ba, dtb), directed(bb, dta));
}

BinaryImage rotate_mask(const BinaryImage& img, Complex rotation) {
  BinaryImage out(img.width(), img.height());
  const double cx = 0.5 * img.width();
  const double cy = 0.5 * img.height();
  // Pull back: the pixel at p shows what sat at rotation^{-1} p.
  const Complex inv = std::conj(rotation) / std::norm(rotation);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const Complex p{x + 0.5 - cx, cy - (y + 0.5)};
      const Complex src = inv * p;
      const int sx = static_cast<int>(std::floor(src.real() + cx));
      const int sy = static_cast<int>(std::floor(cy - src.imag()));
      if (sx >= 0 && sy >= 0 && sx < img.width() && sy < img.height()) out.set(x, y, img.get(sx, sy));
    }
  }
  return out;
}

void write_pbm(const BinaryImage& img, std::ostream& os) {
  os << "P4\n" << img.width() << ' ' << img.height() << '\n';
  const int row_bytes = (img.width() + 7) / 8;
  std::vector<char> row(static_cast<std::size_t>(row_bytes));
  for (int y = 0; y < img.height(); ++y) {
    std::fill(row.begin(), row.end(), 0);
    for (int x = 0; x < img.width(); ++x) {
      if (img.get(x, y)) row[static_cast<std::size_t>(x / 8)] |= static_cast<char>(0x80u >> (x % 8));
    }
    os.write(row.data(), row_bytes);
  }
}

BinaryImage read_pbm(std::istream& is) {
  std::string magic;
  int w = 0;
  int h = 0;
  is >> magic >> w >> h;
  if (magic != "P4" || w <= 0 || h <= 0) throw InputError("not a P4 bitmap");
  is.get();  // the single whitespace byte before the raster
  BinaryImage img(w, h);
  const int row_bytes = (w + 7) / 8;
  std::vector<char> row(static_cast<std::size_t>(row_bytes));
  for (int y = 0; y < h; ++y) {
    if (!is.read(row.data(), row_bytes)) throw InputError("truncated P4 bitmap");
    for (int x = 0; x < w; ++x) {
      img.set(x, y, (static_cast<unsigned char>(row[static_cast<std::size_t>(x / 8)]) & (0x80u >> (x % 8))) != 0);
    }
  }
  return img;
}

void write_green_ppm(const Poly& f, const RasterGrid& grid, std::ostream& os) {
  grid.validate_for(f);
  const int res = grid.resolution;
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(res) * res);
  for (int y = 0; y < res; ++y) {
    for (int x = 0; x < res; ++x) pts.push_back(grid.pixel_center(x, y));
  }
  const auto values = green_batch(f, pts, GreenOptions{grid.max_iter, grid.escape_radius});
  double gmax = 0.0;
  for (const auto& g : values) gmax = std::max(gmax, g.value);
  os << "P6\n" << res << ' ' << res << "\n255\n";
  for (const auto& g : values) {
    unsigned char rgb[3] = {0, 0, 0};
    if (g.escaped && gmax > 0.0) {
      const double t = std::log1p(16.0 * g.value) / std::log1p(16.0 * gmax);
      rgb[0] = static_cast<unsigned char>(std::lround(255.0 * std::sqrt(t)));
      rgb[1] = static_cast<unsigned char>(std::lround(255.0 * t));
      rgb[2] = static_cast<unsigned char>(std::lround(255.0 * (1.0 - t)));
    }
    os.write(reinterpret_cast<const char*>(rgb), 3);
  }
}

}  // namespace samejulia
