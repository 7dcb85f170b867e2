#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zermelo/output.hpp"

namespace zermelo {

struct GalleryCurve {
  std::string name;   // file stem suffix: pplus, pminus, base
  std::string label;  // legend text
  GeodesicPath path;
  SvgFigure::Style style;
};

/// Data behind one of the fourteen worked examples.
struct GalleryFigure {
  int id = 0;
  std::string title;
  std::vector<std::string> captions;
  RandersMetric metric;
  std::vector<GalleryCurve> curves;
  std::vector<std::vector<Point>> boundaries;  // admissible-region boundary
  std::optional<double> boundary_radius;       // when the region is a centred disc
  int loops = 0;                               // sphere examples: loops of rho before closing
  Point start;                                 // P(0) = rho(0)
};

inline constexpr int kGallerySize = 14;
inline constexpr int kGalleryPoints = 1024;

/// Builds example `id` (1..14). `shift` is the hyperbolic distance by which
/// the vertical line of Examples 8 and 10 is translated along the u-axis.
GalleryFigure build_example(int id, double shift = 0.5);

/// The maximal interval [lo, hi] around 0 (clipped to [-limit, limit]) on
/// which the flow-composed geodesic with base velocity u stays admissible.
std::pair<double, double> admissible_interval(const RandersMetric& rd, const Point& x0, const Tangent& u,
                                              double limit = 40.0);

/// Flow-composed geodesic sampled with `points` points on [lo, hi].
GeodesicPath sample_composed(const RandersMetric& rd, const Point& x0, const Tangent& u, double lo, double hi,
                             int points = kGalleryPoints);

std::string example_svg(const GalleryFigure& fig);

/// Writes exampleNN.svg and one CSV per curve and boundary into dir; returns
/// the file names written.
std::vector<std::string> write_example(const GalleryFigure& fig, const std::string& dir);

}  // namespace zermelo
