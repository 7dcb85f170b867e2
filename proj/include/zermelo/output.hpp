#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zermelo/geodesic.hpp"

namespace zermelo {

/// Writes `t,x1..xd,v1..vd,F_speed`. F_speed is F(x, v) for Randers paths and
/// the h-norm of v for RiemannianBase paths.
void write_csv(std::ostream& os, const RandersMetric& rd, const GeodesicPath& path);
std::string csv_string(const RandersMetric& rd, const GeodesicPath& path);
/// Point list with header `x1..xd`.
std::string points_csv(const std::vector<Point>& pts);

struct Vec2 {
  double x, y;
};

/// Minimal deterministic SVG 1.1 writer: one or more square panels side by
/// side, each mapping a world box onto the panel. All numbers go through a
/// fixed printf format, so equal input gives byte-identical output.
class SvgFigure {
 public:
  struct Style {
    std::string stroke = "#000000";
    double width = 1.0;
    bool dashed = false;
    std::string fill = "none";
  };

  SvgFigure(int panels, double panel_size = 420.0);

  /// World coordinates [lo, hi] x [lo, hi] for a panel.
  void set_view(int panel, double lo, double hi);
  void set_title(const std::string& title) { title_ = title; }
  void set_panel_label(int panel, const std::string& label);

  void polyline(int panel, const std::vector<Vec2>& pts, const Style& s);
  void circle(int panel, Vec2 centre, double r, const Style& s);
  void marker(int panel, Vec2 at, const std::string& colour);
  /// Legend entry drawn under the panels.
  void legend(const std::string& label, const Style& s);
  void caption(const std::string& text) { captions_.push_back(text); }

  std::string render() const;

 private:
  struct Panel {
    double lo = -1.0, hi = 1.0;
    std::string label;
    std::string body;
  };
  double size_;
  std::vector<Panel> panels_;
  std::string title_;
  std::vector<std::pair<std::string, Style>> legend_;
  std::vector<std::string> captions_;

  Vec2 map(int panel, Vec2 p) const;
  double scale(int panel) const;
};

/// Sphere curves are drawn in two orthographic views: the side view projects
/// to the (x, z)-plane and the north view to the (x, y)-plane. The half
/// facing away from the viewer is dashed.
void draw_sphere_curve(SvgFigure& fig, int side_panel, int north_panel, const std::vector<Point>& pts,
                       const SvgFigure::Style& s);
void draw_sphere_outline(SvgFigure& fig, int side_panel, int north_panel);

std::vector<Point> path_points(const GeodesicPath& path);

void write_file(const std::string& path, const std::string& contents);

}  // namespace zermelo
