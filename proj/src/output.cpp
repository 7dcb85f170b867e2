#include "zermelo/output.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace zermelo {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string num(double v) { return fmt("%.17g", v); }
std::string coord(double v) { return fmt("%.3f", v); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string style_attrs(const SvgFigure::Style& s) {
  std::string a = "fill=\"" + s.fill + "\" stroke=\"" + s.stroke + "\" stroke-width=\"" + coord(s.width) + "\"";
  if (s.dashed) a += " stroke-dasharray=\"4,3\"";
  return a;
}

}  // namespace

void write_csv(std::ostream& os, const RandersMetric& rd, const GeodesicPath& path) {
  os << csv_string(rd, path);
}

std::string csv_string(const RandersMetric& rd, const GeodesicPath& path) {
  const int d = rd.space().ambient_dim();
  std::string out = "t";
  for (int i = 1; i <= d; ++i) out += ",x" + std::to_string(i);
  for (int i = 1; i <= d; ++i) out += ",v" + std::to_string(i);
  out += ",F_speed\n";
  const bool base = path.method == GeodesicPath::Method::RiemannianBase;
  for (const PathSample& s : path.samples) {
    out += num(s.t);
    for (int i = 0; i < d; ++i) out += "," + num(s.x(i));
    for (int i = 0; i < d; ++i) out += "," + num(s.v(i));
    out += "," + num(base ? rd.space().norm(s.x, s.v) : rd.norm(s.x, s.v)) + "\n";
  }
  return out;
}

std::string points_csv(const std::vector<Point>& pts) {
  std::string out;
  if (pts.empty()) return out;
  for (int i = 1; i <= pts.front().size(); ++i) out += (i > 1 ? ",x" : "x") + std::to_string(i);
  out += "\n";
  for (const Point& p : pts) {
    for (int i = 0; i < p.size(); ++i) out += (i ? "," : "") + num(p(i));
    out += "\n";
  }
  return out;
}

SvgFigure::SvgFigure(int panels, double panel_size) : size_(panel_size), panels_(panels) {
  if (panels < 1) throw InvalidArgument("figure needs a panel");
}

void SvgFigure::set_view(int panel, double lo, double hi) {
  panels_.at(panel).lo = lo;
  panels_.at(panel).hi = hi;
}

void SvgFigure::set_panel_label(int panel, const std::string& label) { panels_.at(panel).label = label; }

double SvgFigure::scale(int panel) const {
  const Panel& p = panels_.at(panel);
  return (size_ - 20.0) / (p.hi - p.lo);
}

Vec2 SvgFigure::map(int panel, Vec2 w) const {
  const Panel& p = panels_.at(panel);
  const double s = scale(panel);
  return {panel * size_ + 10.0 + (w.x - p.lo) * s, 40.0 + 10.0 + (p.hi - w.y) * s};
}

void SvgFigure::polyline(int panel, const std::vector<Vec2>& pts, const Style& s) {
  if (pts.size() < 2) return;
  std::string body = "<polyline " + style_attrs(s) + " stroke-linejoin=\"round\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec2 m = map(panel, pts[i]);
    body += (i ? " " : "") + coord(m.x) + "," + coord(m.y);
  }
  panels_.at(panel).body += body + "\"/>\n";
}

void SvgFigure::circle(int panel, Vec2 c, double r, const Style& s) {
  const Vec2 m = map(panel, c);
  panels_.at(panel).body += "<circle cx=\"" + coord(m.x) + "\" cy=\"" + coord(m.y) + "\" r=\"" +
                            coord(r * scale(panel)) + "\" " + style_attrs(s) + "/>\n";
}

void SvgFigure::marker(int panel, Vec2 at, const std::string& colour) {
  const Vec2 m = map(panel, at);
  panels_.at(panel).body += "<circle cx=\"" + coord(m.x) + "\" cy=\"" + coord(m.y) + "\" r=\"3.000\" fill=\"" +
                            colour + "\" stroke=\"none\"/>\n";
}

void SvgFigure::legend(const std::string& label, const Style& s) { legend_.emplace_back(label, s); }

std::string SvgFigure::render() const {
  const double width = size_ * panels_.size();
  const double legend_h = 18.0 * (legend_.size() + captions_.size()) + 10.0;
  const double height = 40.0 + size_ + legend_h;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + coord(width) + "\" height=\"" +
         coord(height) + "\" viewBox=\"0 0 " + coord(width) + " " + coord(height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + coord(width) + "\" height=\"" + coord(height) + "\" fill=\"#ffffff\"/>\n";
  out += "<text x=\"10\" y=\"22\" font-family=\"sans-serif\" font-size=\"15\">" + escape(title_) + "</text>\n";
  for (std::size_t i = 0; i < panels_.size(); ++i) {
    const Panel& p = panels_[i];
    out += "<g id=\"panel" + std::to_string(i) + "\">\n";
    if (!p.label.empty())
      out += "<text x=\"" + coord(i * size_ + 12.0) + "\" y=\"40\" font-family=\"sans-serif\" font-size=\"12\">" +
             escape(p.label) + "</text>\n";
    out += p.body + "</g>\n";
  }
  double y = 40.0 + size_ + 16.0;
  for (const auto& [label, s] : legend_) {
    Style line = s;
    line.fill = "none";
    out += "<line x1=\"12\" y1=\"" + coord(y - 4) + "\" x2=\"40\" y2=\"" + coord(y - 4) + "\" " + style_attrs(line) +
           "/>\n";
    out += "<text x=\"48\" y=\"" + coord(y) + "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(label) +
           "</text>\n";
    y += 18.0;
  }
  for (const std::string& c : captions_) {
    out += "<text x=\"12\" y=\"" + coord(y) + "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(c) +
           "</text>\n";
    y += 18.0;
  }
  return out + "</svg>\n";
}

namespace {

// Splits a projected curve into runs of equal visibility.
void draw_view(SvgFigure& fig, int panel, const std::vector<Point>& pts, int a, int b, int depth,
               const SvgFigure::Style& s) {
  std::vector<Vec2> run;
  bool front = true;
  auto flush = [&] {
    SvgFigure::Style st = s;
    st.dashed = !front;
    fig.polyline(panel, run, st);
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool f = pts[i](depth) >= 0.0;
    const Vec2 v{pts[i](a), pts[i](b)};
    if (i > 0 && f != front) {
      run.push_back(v);  // close the gap at the rim
      flush();
      run.clear();
    }
    front = f;
    run.push_back(v);
  }
  flush();
}

}  // namespace

void draw_sphere_curve(SvgFigure& fig, int side_panel, int north_panel, const std::vector<Point>& pts,
                       const SvgFigure::Style& s) {
  if (pts.empty()) return;
  if (pts.front().size() != 3) throw InvalidArgument("sphere views need points of S^2");
  // Side view looks along -y onto the (x, z)-plane; north view looks down -z.
  draw_view(fig, side_panel, pts, 0, 2, 1, s);
  draw_view(fig, north_panel, pts, 0, 1, 2, s);
}

void draw_sphere_outline(SvgFigure& fig, int side_panel, int north_panel) {
  SvgFigure::Style rim;
  rim.stroke = "#888888";
  for (int p : {side_panel, north_panel}) {
    fig.set_view(p, -1.1, 1.1);
    fig.circle(p, {0.0, 0.0}, 1.0, rim);
  }
  SvgFigure::Style eq = rim;
  eq.width = 0.6;
  eq.dashed = true;
  fig.polyline(side_panel, {{-1.0, 0.0}, {1.0, 0.0}}, eq);
  fig.set_panel_label(side_panel, "side view (x, z)");
  fig.set_panel_label(north_panel, "north view (x, y)");
}

std::vector<Point> path_points(const GeodesicPath& path) {
  std::vector<Point> out;
  out.reserve(path.samples.size());
  for (const PathSample& s : path.samples) out.push_back(s.x);
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << contents;
}

}  // namespace zermelo
