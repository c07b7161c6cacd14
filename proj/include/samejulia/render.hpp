#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "samejulia/poly.hpp"

namespace samejulia {

struct RasterGrid {
  Complex center{0.0};
  double half_width = 2.0;
  int resolution = 512;  ///< pixels per side
  int max_iter = 256;
  double escape_radius = 0.0;

  /// Throws InputError on resolution < 16, half_width <= 0, or an escape
  /// radius below 2(1 + coefficient scale) or below the escape bound of f.
  void validate_for(const Poly& f) const;
  /// Pixel (x, y) centre; row 0 is the top edge (largest imaginary part).
  Complex pixel_center(int x, int y) const;
  double pixel_size() const { return 2.0 * half_width / resolution; }
};

/// Centre 0, half width 2 + coefficient scale, 512 px, 256 iterations,
/// escape radius max(2(1 + scale), 2 · escape bound).
RasterGrid default_grid(const Poly& f);
/// One grid that is valid for both maps (widest window, largest radius).
RasterGrid shared_grid(const Poly& f, const Poly& g);

class BinaryImage {
 public:
  BinaryImage() = default;
  BinaryImage(int width, int height) : width_(width), height_(height), bits_(static_cast<std::size_t>(width) * height) {}

  int width() const { return width_; }
  int height() const { return height_; }
  bool get(int x, int y) const { return bits_[index(x, y)] != 0; }
  void set(int x, int y, bool v) { bits_[index(x, y)] = v ? 1 : 0; }
  std::size_t count() const;

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width_ + x; }
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Pixel set iff the orbit of its centre stays within the escape radius for
/// the grid's iteration budget.
BinaryImage render_filled(const Poly& f, const RasterGrid& grid, const NumericContext& ctx = {});

/// Set pixels with at least one unset 4-neighbour (outside counts as unset).
BinaryImage boundary_of(const BinaryImage& img);

/// Symmetric Hausdorff distance in pixels between the boundaries of the two
/// masks. 0 when both boundaries are empty, +inf when exactly one is.
double set_distance(const BinaryImage& a, const BinaryImage& b);

/// Rotates the mask about the grid centre by `rotation` (|rotation| = 1),
/// sampling with nearest-neighbour lookup.
BinaryImage rotate_mask(const BinaryImage& img, Complex rotation);

/// "P4\n<w> <h>\n" then packed rows, MSB = leftmost pixel, 1 = set.
void write_pbm(const BinaryImage& img, std::ostream& os);
BinaryImage read_pbm(std::istream& is);

/// "P6\n<w> <h>\n255\n" heat map of the Green function; K is drawn black.
void write_green_ppm(const Poly& f, const RasterGrid& grid, std::ostream& os);

}  // namespace samejulia
