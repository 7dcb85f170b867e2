// zermelo: examples, geodesics, navigation and validation from the command line.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "zermelo/conjugate.hpp"
#include "zermelo/gallery.hpp"
#include "zermelo/katok.hpp"
#include "zermelo/navigation.hpp"
#include "zermelo/scene.hpp"
#include "zermelo/validation.hpp"

using namespace zermelo;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string fmt(const Eigen::VectorXd& v) {
  std::string s = "(";
  char buf[32];
  for (int i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, i ? ", %.10g" : "%.10g", v(i));
    s += buf;
  }
  return s + ")";
}

void ensure_parent(const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
}

int cmd_example(int id, const std::string& dir, double shift) {
  if (id < 1 || id > kGallerySize) throw InvalidArgument("example id must be in 1.." + std::to_string(kGallerySize));
  std::filesystem::create_directories(dir);
  const GalleryFigure fig = build_example(id, shift);
  std::cout << fig.title << "\n";
  for (const std::string& c : fig.captions) std::cout << "  " << c << "\n";
  for (const std::string& f : write_example(fig, dir)) std::cout << "wrote " << (std::filesystem::path(dir) / f).string() << "\n";
  return kOk;
}

// Plane view of a path: chart coordinates, or the (x, z) side view on the sphere.
std::vector<Vec2> plane(const std::vector<Point>& pts, bool sphere) {
  std::vector<Vec2> out;
  for (const Point& p : pts) out.push_back({p(0), sphere ? p(2) : p(1)});
  return out;
}

int cmd_geodesic(const std::string& path) {
  const SceneConfig c = SceneConfig::load(path);
  const RandersMetric rd(build_wind(c));
  const ModelSpace& m = rd.space();
  const Point x0 = c.vector("x0");
  m.require(x0);
  rd.require_admissible(x0);
  Tangent y0;
  if (c.has("u0")) {
    const Tangent u = c.vector("u0");
    y0 = rd.wind().eval(x0) + u / m.norm(x0, u);
  } else {
    y0 = c.vector("y0");
  }
  m.require_tangent(x0, y0);
  const double T = c.number("T", 1.0);
  const int n = c.integer("samples", 512);
  const Orientation o = c.text("orientation", "forward") == "reverse" ? Orientation::Reverse : Orientation::Forward;

  DirectOptions opt;
  opt.samples = n;
  const GeodesicPath direct = integrate_direct(rd, x0, y0, T, opt);
  std::cout << "wind: " << rd.wind().describe() << "\n";
  std::cout << "direct ODE: P(T) = " << fmt(direct.back().x) << ", speed drift " << speed_drift(rd, direct) << "\n";
  if (!rd.wind().is_homothety()) {
    std::cout << "flow composition: not available (wind is not a homothety)\n";
    const double r = cross_validate(rd, x0, y0, T, n);
    std::cout << "cross-validation residual against unchecked composition: " << r << "\n";
    if (c.has("csv")) {
      ensure_parent(c.text("csv"));
      write_file(c.text("csv"), csv_string(rd, direct));
    }
    return kOk;
  }
  const GeodesicPath composed = flow_compose(rd, x0, y0 / rd.norm(x0, y0), T, n, o);
  std::cout << "flow composed: P(T) = " << fmt(composed.back().x) << ", speed drift " << speed_drift(rd, composed)
            << "\n";
  const double r = cross_validate(rd, x0, y0, T, n);
  std::cout << "cross-validation residual: " << r << "\n";
  if (c.has("csv")) {
    const std::string stem = c.text("csv");
    ensure_parent(stem);
    write_file(stem, csv_string(rd, composed));
    const std::string alt = std::filesystem::path(stem).replace_extension("").string() + "_direct.csv";
    write_file(alt, csv_string(rd, direct));
    std::cout << "wrote " << stem << " and " << alt << "\n";
  }
  if (c.has("svg")) {
    const bool sphere = m.kind() == ModelSpace::Kind::Sphere;
    SvgFigure fig(sphere ? 2 : 1);
    fig.set_title("Geodesic: " + rd.wind().describe());
    SvgFigure::Style a{"#1f77b4", 2.0, false, "none"}, b{"#d62728", 1.0, true, "none"};
    if (sphere) {
      draw_sphere_outline(fig, 0, 1);
      fig.set_panel_label(0, "side view");
      fig.set_panel_label(1, "north view");
      draw_sphere_curve(fig, 0, 1, path_points(composed), a);
      draw_sphere_curve(fig, 0, 1, path_points(direct), b);
    } else {
      double extent = 1.0;
      for (const auto& s : composed.samples) extent = std::max(extent, s.x.cwiseAbs().maxCoeff() * 1.1);
      fig.set_view(0, -extent, extent);
      if (m.kind() == ModelSpace::Kind::PoincareBall) fig.circle(0, {0, 0}, 1.0, {"#888888", 1.0, false, "none"});
      fig.polyline(0, plane(path_points(composed), false), a);
      fig.polyline(0, plane(path_points(direct), false), b);
    }
    fig.legend("flow composed", a);
    fig.legend("direct ODE", b);
    char buf[64];
    std::snprintf(buf, sizeof buf, "cross-validation residual %.3e", r);
    fig.caption(buf);
    ensure_parent(c.text("svg"));
    write_file(c.text("svg"), fig.render());
    std::cout << "wrote " << c.text("svg") << "\n";
  }
  return kOk;
}

int cmd_navigate(const std::string& path) {
  const SceneConfig c = SceneConfig::load(path);
  const RandersMetric rd(build_wind(c));
  const ModelSpace& m = rd.space();
  const Point p = c.vector("p"), q = c.vector("q");
  m.require(p);
  m.require(q);
  SolveOptions opt;
  if (c.has("T")) opt.tau_max = c.number("T");
  opt.samples = c.integer("samples", 512);
  const NavigationSolution sol = solve(rd, p, q, opt);
  std::printf("tau = %.12g\n", sol.tau);
  if (sol.path.samples.empty()) {
    std::cout << "p = q: empty path\n";
    return kOk;
  }
  std::printf("fixed-point residual = %.3e\n", sol.residual);
  std::printf("endpoint error = %.3e\n", (sol.path.back().x - q).norm());
  std::cout << "heading rho'(0) = " << fmt(sol.heading) << "\n";
  std::cout << "initial velocity P'(0) = " << fmt(sol.path.front().v) << "\n";
  if (sol.antipodal_tie) std::cout << "note: q(tau) is antipodal to p; the heading is one of many minimizers\n";
  try {
    std::cout << "global minimizer: " << (certify_global_minimizer(rd, sol.path) ? "certified" : "not certified")
              << "\n";
  } catch (const CriteriaInapplicable&) {
    std::cout << "global minimizer: criteria inapplicable\n";
  }
  if (c.has("csv")) {
    ensure_parent(c.text("csv"));
    write_file(c.text("csv"), csv_string(rd, sol.path));
    std::cout << "wrote " << c.text("csv") << "\n";
  }
  if (c.has("svg")) {
    const auto panels = construction_panels(rd, p, q, sol);
    const bool sphere = m.kind() == ModelSpace::Kind::Sphere;
    SvgFigure fig(static_cast<int>(panels.size()));
    fig.set_title("Navigation construction: " + rd.wind().describe());
    SvgFigure::Style orbit{"#2ca02c", 1.0, true, "none"}, base{"#7f7f7f", 1.0, false, "none"},
        route{"#1f77b4", 2.0, false, "none"};
    double extent = 1.0;
    if (!sphere)
      for (const auto& pan : panels)
        for (const auto& s : pan.path.samples) extent = std::max(extent, s.x.cwiseAbs().maxCoeff() * 1.1);
    const char* names[] = {"tau_-", "tau_o", "tau_+"};
    for (std::size_t i = 0; i < panels.size(); ++i) {
      const int k = static_cast<int>(i);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%s = %.4f%s", names[std::min<std::size_t>(i, 2)], panels[i].tau,
                    sphere ? " (side view)" : "");
      fig.set_panel_label(k, buf);
      fig.set_view(k, -extent, extent);
      if (sphere || m.kind() == ModelSpace::Kind::PoincareBall) fig.circle(k, {0, 0}, 1.0, {"#888888", 1.0, false, "none"});
      fig.polyline(k, plane(panels[i].pre_orbit, sphere), orbit);
      fig.polyline(k, plane(path_points(panels[i].base), sphere), base);
      fig.polyline(k, plane(path_points(panels[i].path), sphere), route);
      fig.marker(k, plane({p}, sphere)[0], "#000000");
      fig.marker(k, plane({q}, sphere)[0], "#d62728");
    }
    fig.legend("reverse flow of q", orbit);
    fig.legend("h-geodesic rho", base);
    fig.legend("P(t) = phi(t, rho(t))", route);
    ensure_parent(c.text("svg"));
    write_file(c.text("svg"), fig.render());
    std::cout << "wrote " << c.text("svg") << "\n";
  }
  return kOk;
}

int cmd_census(const std::string& a_list, int n) {
  std::vector<double> a;
  std::size_t pos = 0;
  while (pos <= a_list.size()) {
    const std::size_t comma = std::min(a_list.find(',', pos), a_list.size());
    a.push_back(parse_number(std::string_view(a_list).substr(pos, comma - pos)));
    pos = comma + 1;
  }
  const KatokData k = KatokData::make(n, a);
  std::printf("%-8s %-12s %-18s %-18s %-10s\n", "circle", "orientation", "F-length", "2pi/(1+-a)", "ODE resid");
  for (const CensusEntry& e : closed_geodesic_census(k)) {
    const std::string circle = k.n == 2 ? std::string("equator") : "C" + std::to_string(e.circle);
    std::printf("%-8s %-12s %-18.12f %-18.12f %-10.2e\n", circle.c_str(), e.orientation > 0 ? "+" : "-", e.length,
                e.expected, e.ode_residual);
  }
  return kOk;
}

int cmd_validate(const std::string& suite) {
  const std::vector<CheckResult> results = suite.empty() ? run_all_suites() : run_suite(suite);
  int failed = 0;
  for (const CheckResult& r : results) {
    std::cout << format_result(r) << "\n";
    failed += !r.passed;
  }
  double cv = 0.0;
  for (const CheckResult& r : results)
    if (r.name.find("cross-validation") != std::string::npos) cv = std::max(cv, r.value);
  if (suite.empty() || suite == "geodesic") std::printf("max cross-validation residual: %.3e\n", cv);
  std::printf("%zu checks, %d failed\n", results.size(), failed);
  return failed ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zermelo navigation and Randers geodesics"};
  app.require_subcommand(1);

  int example_id = 0;
  std::string out_dir = ".";
  double shift = 0.5;
  auto* ex = app.add_subcommand("example", "Reproduce one of the worked examples as SVG + CSV");
  ex->add_option("n", example_id, "Example number 1..14")->required();
  ex->add_option("-o,--out", out_dir, "Output directory");
  ex->add_option("--shift", shift, "Hyperbolic shift of the line in Examples 8 and 10");

  std::string config;
  auto* geo = app.add_subcommand("geodesic", "Integrate a geodesic by both methods");
  geo->add_option("--config", config, "Scene file")->required();
  auto* nav = app.add_subcommand("navigate", "Solve the navigation problem from p to q");
  nav->add_option("--config", config, "Scene file")->required();

  std::string a_list;
  int dim = 2;
  auto* cen = app.add_subcommand("census", "Closed geodesics of a Katok sphere");
  cen->add_option("--a", a_list, "Rotation rates, comma separated")->required();
  cen->add_option("--n", dim, "Sphere dimension");

  std::string suite;
  auto* val = app.add_subcommand("validate", "Run the invariant suites");
  val->add_option("--suite", suite, "One suite")->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*ex) return cmd_example(example_id, out_dir, shift);
    if (*geo) return cmd_geodesic(config);
    if (*nav) return cmd_navigate(config);
    if (*cen) return cmd_census(a_list, dim);
    if (*val) return cmd_validate(suite);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
