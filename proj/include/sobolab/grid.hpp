#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "sobolab/errors.hpp"
#include "sobolab/fft.hpp"

namespace sobolab {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Half-width of the stereographic chart squares [-L, L)^2.  The usable
// region of each chart is |z| <= 2 (overlap annulus 0.5 < |z| < 2); the
// margin up to L keeps interpolation stencils away from the square edge.
inline constexpr double kChartHalfWidth = 3.0;

enum class Domain {
  torus,              // [0, 2pi)^2, periodic, spectral operations
  sphere_chart_pair,  // two stereographic chart squares [-L, L)^2
};

struct Vec2 {
  double x{0.0}, y{0.0};
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double norm() const { return std::hypot(x, y); }
};

// Row-major 2x2 matrix; enough for Jacobians and Newton steps.
struct Mat2 {
  double a11{1.0}, a12{0.0}, a21{0.0}, a22{1.0};
  double det() const { return a11 * a22 - a12 * a21; }
  Mat2 inverse() const {
    const double d = det();
    if (d == 0.0) throw invariant_violation("Mat2: singular");
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
  }
  Vec2 apply(const Vec2& v) const { return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y}; }
};

// A uniform N x N grid on either the torus or one chart square of the
// sphere pair.  Node (ix, iy) sits at origin + (ix, iy) * spacing; indexing
// is row-major with ix fastest.
struct GridSpec {
  Domain domain{Domain::torus};
  int resolution{0};

  int nodes() const { return resolution * resolution; }
  double extent() const { return domain == Domain::torus ? kTwoPi : 2.0 * kChartHalfWidth; }
  double origin() const { return domain == Domain::torus ? 0.0 : -kChartHalfWidth; }
  double spacing() const { return extent() / resolution; }
  double cell_measure() const { return spacing() * spacing(); }
  double total_measure() const { return extent() * extent(); }

  int index(int ix, int iy) const { return iy * resolution + ix; }
  Vec2 node(int ix, int iy) const {
    return {origin() + ix * spacing(), origin() + iy * spacing()};
  }

  bool operator==(const GridSpec& o) const {
    return domain == o.domain && resolution == o.resolution;
  }
};

inline GridSpec make_grid(Domain domain, int resolution) {
  if (!detail::is_pow2(resolution) || resolution < 16)
    throw config_error("make_grid: resolution must be a power of two >= 16, got " +
                       std::to_string(resolution));
  return GridSpec{domain, resolution};
}

// Wrap a displacement to the fundamental torus cell [-pi, pi).
inline double wrap_periodic(double d) {
  d = std::fmod(d + std::numbers::pi, kTwoPi);
  if (d < 0.0) d += kTwoPi;
  return d - std::numbers::pi;
}

inline Vec2 wrap_periodic(const Vec2& d) { return {wrap_periodic(d.x), wrap_periodic(d.y)}; }

}  // namespace sobolab
