#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "zermelo/gallery.hpp"
#include "zermelo/scene.hpp"

using namespace zermelo;
using oracle::vec;

TEST_CASE("scene parse and render round trip") {
  const std::string text =
      "# Katok sphere\nmodel = sphere\nwind = katok\na = 1/4\n\nx0 = 1, 0, 0   # start\ny0 = 0, sqrt(3)/2, 0.5\nT = pi\n";
  const SceneConfig c = SceneConfig::parse(text);
  CHECK(SceneConfig::parse(c.render()) == c);
  CHECK(c.number("T") == doctest::Approx(M_PI));
  CHECK(c.number("a") == 0.25);
  CHECK((c.vector("x0") - vec({1, 0, 0})).norm() == 0.0);
  CHECK(c.vector("y0")(1) == std::sqrt(3.0) / 2);
  CHECK(c.integer("samples", 512) == 512);
  CHECK(build_space(c).kind() == ModelSpace::Kind::Sphere);
  CHECK(build_wind(c).is_homothety());
}

TEST_CASE("scene errors carry line numbers") {
  try {
    SceneConfig::parse("model = sphere\n\nbogus = 1\n", "f.cfg");
    FAIL("no error");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).rfind("f.cfg:3:", 0) == 0);
  }
  CHECK_THROWS_AS(SceneConfig::parse("model = a\nmodel = b\n"), ConfigError);
  CHECK_THROWS_AS(SceneConfig::parse("model\n"), ConfigError);
  CHECK_THROWS_AS(SceneConfig::parse("T =\n"), ConfigError);
  CHECK_THROWS_AS(SceneConfig::parse("T = abc\n").number("T"), ConfigError);
  CHECK_THROWS_AS(build_space(SceneConfig::parse("model = torus\n")), ConfigError);
}

TEST_CASE("number forms") {
  CHECK(parse_number("pi") == M_PI);
  CHECK(parse_number("-3/4") == -0.75);
  CHECK(parse_number("sqrt(2)") == std::sqrt(2.0));
  CHECK(parse_number("1e-3") == 1e-3);
  CHECK_THROWS(parse_number("1/0x"));
}

TEST_CASE("CSV schema and speed invariant") {
  const RandersMetric rd(WindField::euclidean(2, 0, 1));
  const GeodesicPath P = flow_compose(rd, vec({0.1, 0.1}), vec({0.9, -0.1}), 0.5, 4);
  const std::string csv = csv_string(rd, P);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,x1,x2,v1,v2,F_speed");
  int rows = 0;
  while (std::getline(in, line)) {
    double t, x1, x2, v1, v2, f;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf", &t, &x1, &x2, &v1, &v2, &f) == 6);
    CHECK(rd.norm(vec({x1, x2}), vec({v1, v2})) == doctest::Approx(f).epsilon(1e-12));
    ++rows;
  }
  CHECK(rows == 5);
}

TEST_CASE("SVG is self-contained and deterministic") {
  SvgFigure a(2), b(2);
  for (SvgFigure* f : {&a, &b}) {
    f->set_title("t");
    f->polyline(0, {{0, 0}, {0.5, 0.25}}, {});
    f->circle(1, {0, 0}, 1.0, {});
  }
  CHECK(a.render() == b.render());
  CHECK(a.render().rfind("<?xml", 0) == 0);
  CHECK(a.render().find("href") == std::string::npos);
}

TEST_CASE("gallery examples") {
  const GalleryFigure f1 = build_example(1);
  REQUIRE(f1.curves.size() == 3);
  CHECK((f1.curves[0].path.samples.size()) == 1024);
  // P+ and P- leave the origin with velocities (1, 0) and (-1, 0).
  // P+ and P- leave the origin with velocities (1, 0) and (-1, 0); the grid
  // does not hit t = 0, so read the sample nearest to it.
  auto near0 = [](const GeodesicPath& p) {
    const PathSample* best = &p.samples.front();
    for (const PathSample& s : p.samples)
      if (std::abs(s.t) < std::abs(best->t)) best = &s;
    return *best;
  };
  for (int k = 0; k < 2; ++k) {
    const PathSample s = near0(f1.curves[k].path);
    CHECK(std::abs(s.t) < 0.05);
    CHECK((s.v - vec({k == 0 ? 1.0 : -1.0, 0})).norm() < 0.1);
    CHECK(speed_drift(f1.metric, f1.curves[k].path) < 1e-9);
  }
  CHECK(f1.start.norm() == 0.0);
  CHECK(*f1.boundary_radius == doctest::Approx(1.0).epsilon(1e-12));
  const GalleryFigure f7 = build_example(7);
  CHECK(std::abs(*f7.boundary_radius - (std::sqrt(5.0) - 1) / 2) < 1e-12);
  CHECK(build_example(12).loops == 7);
  CHECK(example_svg(build_example(13)) == example_svg(build_example(13)));
  CHECK_THROWS_AS(build_example(15), InvalidArgument);
}
