#include "zermelo/gallery.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "zermelo/katok.hpp"

namespace zermelo {

namespace {

const char* kPlus = "#1f4fbf";
const char* kMinus = "#c0392b";
const char* kBase = "#777777";
const char* kRegion = "#2e8b57";

SvgFigure::Style style(const char* colour, double width = 1.6, bool dashed = false) {
  SvgFigure::Style s;
  s.stroke = colour;
  s.width = width;
  s.dashed = dashed;
  return s;
}

std::string two(int id) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02d", id);
  return buf;
}

std::vector<Point> circle_points(double r, int n = 720) {
  std::vector<Point> out;
  for (int j = 0; j <= n; ++j) {
    const double th = 2.0 * M_PI * j / n;
    Point p(2);
    p << r * std::cos(th), r * std::sin(th);
    out.push_back(p);
  }
  return out;
}

// Hypercycle at hyperbolic distance d from the u-axis, upper (+1) or lower (-1).
std::vector<Point> hypercycle(double d, int side, int n = 720) {
  std::vector<Point> out;
  Point e1 = Point::Unit(2, 0);
  out.push_back(-e1);
  Point top(2);
  top << 0.0, side * std::tanh(0.5 * d);
  for (int j = 1; j < n; ++j) {
    // Translation parameter spread by tanh so both ends reach the rim.
    const double s = std::atanh(-1.0 + 2.0 * j / n) * 4.0;
    out.push_back(mobius::add(std::tanh(0.5 * s) * e1, top));
  }
  out.push_back(e1);
  return out;
}

bool inside(const RandersMetric& rd, const Point& x0, const Tangent& u, double t) {
  try {
    const PathSample s = flow_composed_state(rd, x0, u, t);
    return rd.space().contains(s.x) && rd.admissible(s.x);
  } catch (const std::exception&) {
    return false;
  }
}

double march(const RandersMetric& rd, const Point& x0, const Tangent& u, double dir, double limit) {
  const double dt = 1e-2;
  double in = 0.0;
  for (double t = dt; t <= limit; t += dt) {
    if (!inside(rd, x0, u, dir * t)) {
      double out = t;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (in + out);
        (inside(rd, x0, u, dir * mid) ? in : out) = mid;
      }
      return in;
    }
    in = t;
  }
  return limit;
}

GalleryFigure planar(int id, RandersMetric rd, const Point& x0, const Tangent& u, std::vector<std::string> captions) {
  GalleryFigure f{id, "Example " + std::to_string(id), std::move(captions), std::move(rd), {}, {}, {}, 0, x0};
  const auto [lo_p, hi_p] = admissible_interval(f.metric, x0, u);
  const auto [lo_m, hi_m] = admissible_interval(f.metric, x0, Tangent(-u));
  GeodesicPath plus = sample_composed(f.metric, x0, u, lo_p, hi_p);
  GeodesicPath minus = sample_composed(f.metric, x0, Tangent(-u), lo_m, hi_m);
  GeodesicPath base = recover_base(f.metric, plus);
  f.curves.push_back({"pplus", "P+(t) = phi(t, rho(t))", std::move(plus), style(kPlus)});
  f.curves.push_back({"pminus", "P-(t) = phi(t, rho(-t))", std::move(minus), style(kMinus)});
  f.curves.push_back({"base", "rho (Riemannian base)", std::move(base), style(kBase, 1.0, true)});
  return f;
}

GalleryFigure euclidean_example(int id, double sigma, double k, double u0, double v0, double dir,
                                const std::string& start) {
  RandersMetric rd(WindField::euclidean(2, sigma, k));
  Point x0(2);
  x0 << u0, v0;
  Tangent u(2);
  u << dir, 0.0;
  std::vector<std::string> cap = {start + (dir > 0 ? "; rho'(0) = (1, 0)" : "; rho'(0) = (-1, 0)")};
  cap.push_back(sigma == 0.0 ? "W(u,v) = (v, -u): sigma = 0, k = 1"
                             : "W = (sigma/2)(u,v) + k(v,-u): sigma = sqrt(2), k = 1/sqrt(2)");
  GalleryFigure f = planar(id, std::move(rd), x0, u, std::move(cap));
  f.boundary_radius = admissible_radius(f.metric.wind());
  f.boundaries.push_back(circle_points(*f.boundary_radius));
  return f;
}

GalleryFigure poincare_example(int id, bool translation, double shift) {
  const WindField w = translation ? WindField::poincare_translation(2, 0.5) : WindField::poincare_rotation(2, 0.5);
  const bool shifted = id == 8 || id == 10;
  Point x0 = Point::Zero(2);
  if (shifted) x0(0) = std::tanh(0.5 * shift);
  // Unit h-speed vertical direction: Euclidean length (1 - |x|^2) / 2.
  Tangent u(2);
  u << 0.0, 0.5 * (1.0 - x0.squaredNorm());
  std::vector<std::string> cap;
  char buf[128];
  std::snprintf(buf, sizeof buf, "rho: the line (0, tanh(t/2)) translated by hyperbolic distance %g along the u-axis",
                shift);
  cap.push_back(shifted ? buf : "rho(t) = (0, tanh(t/2))");
  cap.push_back(translation ? "W: infinitesimal hyperbolic translation along the u-axis, |W(0)| = 1/2"
                            : "W(u,v) = (1/2)(v, -u); M = disc of radius (sqrt(5)-1)/2");
  GalleryFigure f = planar(id, RandersMetric(w), x0, u, std::move(cap));
  if (translation) {
    const double d = std::acosh(1.0 / 0.5);  // |W|_h = speed cosh(dist to axis)
    f.boundaries.push_back(hypercycle(d, +1));
    f.boundaries.push_back(hypercycle(d, -1));
  } else {
    f.boundary_radius = admissible_radius(w);
    f.boundaries.push_back(circle_points(*f.boundary_radius));
  }
  return f;
}

GalleryFigure sphere_example(int id) {
  const int pts = kGalleryPoints - 1;
  double a = 0.25;
  int loops = 4;
  if (id == 12) a = 5.0 / 7.0, loops = 7;
  if (id >= 13) a = 5.0 / 6.0, loops = 6;
  const KatokData k = KatokData::make(2, {a});
  GalleryFigure f{id, "Example " + std::to_string(id), {}, k.metric(), {}, {}, {}, loops, {}};
  const double T = 2.0 * M_PI * loops;
  const char* frac = id == 11 ? "1/4" : (id == 12 ? "5/7" : "5/6");
  f.captions.push_back(std::string("a = ") + frac + "; rho traced " + std::to_string(loops) +
                       " times before the Randers geodesic closes");

  Point q(3);
  Tangent u(3);
  if (id == 11) {
    q << 0.0, 0.0, 1.0;
    u << 1.0, 0.0, 0.0;
    f.captions.push_back("rho through the poles, rho'(0) = (1, 0, 0)");
  } else {
    // Great circle through (1, 0, 0) tilted away from the equator, omitting the poles.
    const double tilt = id == 12 ? M_PI / 4.0 : M_PI / 3.0;
    q << 1.0, 0.0, 0.0;
    u << 0.0, std::cos(tilt), std::sin(tilt);
    f.captions.push_back(std::string("rho(0) = (1, 0, 0), rho'(0) = (0, cos b, sin b), b = ") +
                         (id == 12 ? "pi/4" : "pi/3"));
  }
  f.start = q;
  const Tangent y = f.metric.wind().eval(q) + u;
  if (id == 14) {
    f.curves.push_back({"pminus", "P-(t) = phi(t, rho(-t))",
                        s2_geodesic(a, q, Tangent(f.metric.wind().eval(q) - u), T, pts), style(kMinus, 1.2)});
  } else {
    const Orientation o = Orientation::Forward;
    f.curves.push_back({"pplus", "P+(t) = phi(t, rho(t))", s2_geodesic(a, q, y, T, pts, o), style(kPlus, 1.2)});
  }
  f.curves.push_back(
      {"base", "rho (Riemannian base)", riemannian_geodesic(f.metric.space(), q, u, 2.0 * M_PI, pts),
       style(kBase, 1.0)});
  return f;
}

}  // namespace

std::pair<double, double> admissible_interval(const RandersMetric& rd, const Point& x0, const Tangent& u,
                                              double limit) {
  if (!inside(rd, x0, u, 0.0)) throw DomainError("start point is not admissible");
  return {-march(rd, x0, u, -1.0, limit), march(rd, x0, u, +1.0, limit)};
}

GeodesicPath sample_composed(const RandersMetric& rd, const Point& x0, const Tangent& u, double lo, double hi,
                             int points) {
  if (points < 2) throw InvalidArgument("need at least two points");
  GeodesicPath path;
  path.method = GeodesicPath::Method::FlowComposed;
  path.f_speed = 1.0;
  for (int j = 0; j < points; ++j) {
    const double t = j == points - 1 ? hi : lo + (hi - lo) * j / (points - 1);
    path.samples.push_back(flow_composed_state(rd, x0, u, t));
  }
  return path;
}

GalleryFigure build_example(int id, double shift) {
  const double s2 = std::sqrt(2.0);
  switch (id) {
    case 1: return euclidean_example(1, 0.0, 1.0, 0.0, 0.0, 1.0, "u0 = 0 = v0");
    case 2: return euclidean_example(2, 0.0, 1.0, 2.0 / 3.0, 0.0, 1.0, "u0 = 2/3, v0 = 0");
    case 3: return euclidean_example(3, 0.0, 1.0, 0.0, 0.5, 1.0, "u0 = 0, v0 = 1/2");
    case 4: return euclidean_example(4, 0.0, 1.0, 0.5, 0.5, 1.0, "u0 = 1/2 = v0");
    case 5: return euclidean_example(5, s2, 1.0 / s2, 0.0, 0.0, -1.0, "u0 = 0 = v0");
    case 6: return euclidean_example(6, s2, 1.0 / s2, -0.5, -0.5, -1.0, "u0 = -1/2 = v0");
    case 7:
    case 8: return poincare_example(id, false, shift);
    case 9:
    case 10: return poincare_example(id, true, shift);
    case 11:
    case 12:
    case 13:
    case 14: return sphere_example(id);
    default: throw InvalidArgument("example id must lie in 1..14");
  }
}

std::string example_svg(const GalleryFigure& fig) {
  const bool sphere = fig.metric.space().kind() == ModelSpace::Kind::Sphere;
  SvgFigure svg(sphere ? 2 : 1);
  svg.set_title(fig.title + " (" + fig.metric.wind().describe() + ")");
  for (const std::string& c : fig.captions) svg.caption(c);

  if (sphere) {
    draw_sphere_outline(svg, 0, 1);
    for (const GalleryCurve& c : fig.curves) {
      draw_sphere_curve(svg, 0, 1, path_points(c.path), c.style);
      svg.legend(c.label, c.style);
    }
    const Point& s = fig.start;
    svg.marker(0, {s(0), s(2)}, "#000000");
    svg.marker(1, {s(0), s(1)}, "#000000");
    return svg.render();
  }

  const bool poincare = fig.metric.space().kind() == ModelSpace::Kind::PoincareBall;
  svg.set_view(0, -1.1, 1.1);
  if (poincare) svg.circle(0, {0.0, 0.0}, 1.0, style("#000000", 1.0));
  const SvgFigure::Style region = style(kRegion, 1.2, true);
  for (const auto& b : fig.boundaries) {
    std::vector<Vec2> pts;
    for (const Point& p : b) pts.push_back({p(0), p(1)});
    svg.polyline(0, pts, region);
  }
  svg.legend("admissible region |W| = 1", region);
  for (const GalleryCurve& c : fig.curves) {
    std::vector<Vec2> pts;
    for (const PathSample& s : c.path.samples) pts.push_back({s.x(0), s.x(1)});
    svg.polyline(0, pts, c.style);
    svg.legend(c.label, c.style);
  }
  svg.marker(0, {fig.start(0), fig.start(1)}, "#000000");
  return svg.render();
}

std::vector<std::string> write_example(const GalleryFigure& fig, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::string stem = "example" + two(fig.id);
  std::vector<std::string> files;
  auto emit = [&](const std::string& name, const std::string& body) {
    write_file((std::filesystem::path(dir) / name).string(), body);
    files.push_back(name);
  };
  emit(stem + ".svg", example_svg(fig));
  for (const GalleryCurve& c : fig.curves) emit(stem + "_" + c.name + ".csv", csv_string(fig.metric, c.path));
  for (std::size_t i = 0; i < fig.boundaries.size(); ++i)
    emit(stem + "_boundary" + (fig.boundaries.size() > 1 ? std::to_string(i + 1) : "") + ".csv",
         points_csv(fig.boundaries[i]));
  return files;
}

}  // namespace zermelo
