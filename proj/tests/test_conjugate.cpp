#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zermelo/conjugate.hpp"
#include "zermelo/validation.hpp"

using namespace zermelo;
using oracle::vec;

TEST_CASE("pushed Jacobi field is the variation of flow-composed geodesics") {
  std::mt19937 rng(30);
  for (const NamedWind& nw : example_winds()) {
    CAPTURE(nw.label);
    const RandersMetric rd(nw.wind);
    const ModelSpace& m = rd.space();
    const Start st = random_admissible_start(rd, rng, 1.0, 0.5);
    const Tangent u = st.y - rd.wind().eval(st.x);
    Tangent e = random_unit(m, st.x, rng);
    e -= m.inner(st.x, u, e) * u;
    e /= m.norm(st.x, e);
    const GeodesicPath P = flow_compose(rd, st.x, st.y, 0.9, 8);
    const auto J = pushed_jacobi(rd, P, e);
    const double eps = 1e-6;
    const Tangent wx = rd.wind().eval(st.x);
    const GeodesicPath a = flow_compose(rd, st.x, Tangent(wx + std::cos(eps) * u + std::sin(eps) * e), 0.9, 8);
    const GeodesicPath b = flow_compose(rd, st.x, Tangent(wx + std::cos(eps) * u - std::sin(eps) * e), 0.9, 8);
    for (std::size_t k = 0; k < J.size(); ++k)
      CHECK((J[k].J - (a.samples[k].x - b.samples[k].x) / (2 * eps)).norm() < 1e-6);
  }
}

TEST_CASE("Katok conjugate and cut points sit at phi(pi, -p)") {
  const RandersMetric rd(WindField::sphere_rotation(2, {0.25}));
  const Point p = vec({0, 0.6, 0.8});
  const Tangent y = rd.wind().eval(p) + vec({1, 0, 0});
  const GeodesicPath P = flow_compose(rd, p, y, 4.0, 400);
  const auto cps = randers_conjugate_points(rd, P);
  REQUIRE(cps.size() == 1);
  CHECK(cps[0].t == doctest::Approx(M_PI).epsilon(1e-14));
  const Point far = rd.wind().flow(M_PI, -p);
  CHECK((cps[0].x - far).norm() < 1e-12);
  const CutPoint c = cut_point(rd, p, y);
  CHECK(c.ell == doctest::Approx(M_PI));
  CHECK((c.base_cut + p).norm() < 1e-12);
  CHECK_THROWS_AS(cut_point(RandersMetric(WindField::euclidean(2, 0, 1)), vec({0, 0}), vec({1, 0})), DomainError);
  // The Poincare base has no conjugate points.
  const RandersMetric hyp(WindField::poincare_rotation(2, 0.5));
  CHECK(randers_conjugate_points(hyp, flow_compose(hyp, vec({0, 0}), vec({0, 0.5}), 1.0, 16)).empty());
}

TEST_CASE("global minimizer certificate") {
  const RandersMetric rd(WindField::sphere_rotation(2, {0.25}));
  const Point x = vec({1, 0, 0});
  const Tangent y = rd.wind().eval(x) + vec({0, 0, 1});
  CHECK(certify_global_minimizer(rd, flow_compose(rd, x, y, 3.0, 64)));
  CHECK_FALSE(certify_global_minimizer(rd, flow_compose(rd, x, y, M_PI + 0.5, 64)));
  const RandersMetric mer(WindField::sphere_non_homothety(0.3));
  CHECK_THROWS_AS(certify_global_minimizer(mer, integrate_direct(mer, x, vec({0, 1, -0.3}), 1.0)), CriteriaInapplicable);
}

TEST_CASE("convexity of |W|^2 along geodesics") {
  const double s2 = std::sqrt(2.0);
  const WindField h = WindField::euclidean(2, s2, 1 / s2);
  // |W|^2 = |x|^2 here, so the second derivative along a unit line is exactly 2.
  const ConvexityReport r = w_norm_convexity(h, riemannian_geodesic(h.space(), vec({-0.5, 0.3}), vec({0.6, 0.8}), 1.0, 32));
  CHECK(r.holds);
  CHECK(r.bound == doctest::Approx(1.0));
  CHECK(r.min_second_derivative == doctest::Approx(2.0).epsilon(1e-6));
  const WindField th = WindField::sphere_rotation(2, {1.0}, false);
  // Along a meridian |W|^2 = sin^2 s, whose second derivative 2 cos 2s reaches -2.
  const ConvexityReport bad = w_norm_convexity(th, riemannian_geodesic(th.space(), vec({0, 0, 1}), vec({1, 0, 0}), M_PI, 64));
  CHECK_FALSE(bad.holds);
  CHECK(bad.min_second_derivative == doctest::Approx(-2.0).epsilon(1e-5));
}

TEST_CASE("curvature sufficient condition") {
  const WindField th = WindField::sphere_rotation(2, {1.0}, false);
  const CurvatureReport s = curvature_sufficiency(th, riemannian_geodesic(th.space(), vec({0, 0, 1}), vec({1, 0, 0}), M_PI, 64));
  CHECK_FALSE(s.nonpositive);
  CHECK(s.max_curvature == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(s.skipped >= 1);  // W vanishes at the pole
  const WindField hyp = WindField::poincare_rotation(2, 0.5);
  const CurvatureReport n = curvature_sufficiency(hyp, riemannian_geodesic(hyp.space(), vec({0.1, 0}), vec({0, 0.4}), 0.5, 16));
  CHECK(n.nonpositive);
  CHECK(n.max_curvature == doctest::Approx(-1.0).epsilon(1e-5));
}
