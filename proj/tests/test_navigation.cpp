#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zermelo/conjugate.hpp"
#include "zermelo/navigation.hpp"

using namespace zermelo;
using oracle::vec;

TEST_CASE("Euclidean rotation: solver against the shooting oracle") {
  const RandersMetric rd(WindField::euclidean(2, 0, 1));
  const Point p = vec({0.1, 0.2}), q = vec({-0.3, 0.1});
  const NavigationSolution sol = solve(rd, p, q);
  CHECK(sol.residual < 1e-10);
  CHECK((sol.path.back().x - q).norm() < 1e-8);
  CHECK(std::abs(sol.tau - oracle::shooting_distance(rd, p, q, 2 * sol.tau + 0.2)) < 1e-4);
  // Travel time along the solution equals its F-length.
  CHECK(sol.path.duration() == doctest::Approx(sol.tau).epsilon(1e-12));
  CHECK(speed_drift(rd, sol.path) < 1e-9);
}

TEST_CASE("pre-orbit and the travel-time gap") {
  const RandersMetric rd(WindField::sphere_rotation(2, {0.25}));
  const Point p = vec({0, 0.6, 0.8}), q = vec({1, 0, 0});
  CHECK((pre_orbit(rd.wind(), q, 0.0) - q).norm() == 0.0);
  CHECK((pre_orbit(rd.wind(), q, 2.0) - vec({std::cos(0.5), -std::sin(0.5), 0})).norm() < 1e-15);
  const NavigationSolution sol = solve(rd, p, q);
  CHECK(std::abs(travel_time_gap(rd, p, q, sol.tau)) < 1e-10);
  CHECK(travel_time_gap(rd, p, q, 0.5 * sol.tau) > 0);
  CHECK(std::abs(sol.tau - oracle::shooting_distance(rd, p, q, sol.tau + 0.5)) < 1e-4);
  CHECK(rd.space().norm(p, sol.heading) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("homothety wind solution is certified") {
  const double s2 = std::sqrt(2.0);
  const RandersMetric rd(WindField::euclidean(2, s2, 1 / s2));
  const Point p = vec({-0.2, 0.1}), q = vec({0.25, 0.2});
  const NavigationSolution sol = solve(rd, p, q);
  CHECK((sol.path.back().x - q).norm() < 1e-8);
  CHECK(certify_global_minimizer(rd, sol.path));
  CHECK(std::abs(sol.tau - oracle::shooting_distance(rd, p, q, 2 * sol.tau + 0.2)) < 1e-4);
}

TEST_CASE("trivial and failing cases") {
  const RandersMetric rd(WindField::euclidean(2, 0, 1));
  const NavigationSolution same = solve(rd, vec({0.1, 0.1}), vec({0.1, 0.1}));
  CHECK(same.tau == 0.0);
  CHECK(same.path.samples.empty());
  CHECK_THROWS_AS(solve(RandersMetric(WindField::sphere_non_homothety(0.3)), vec({1, 0, 0}), vec({0, 1, 0})),
                  InvalidArgument);
  SolveOptions tight;
  tight.tau_max = 0.01;
  CHECK_THROWS(solve(rd, vec({0.1, 0.1}), vec({-0.4, 0.3}), tight));
}

TEST_CASE("construction panels bracket the fixed point") {
  const RandersMetric rd(WindField::sphere_rotation(2, {0.25}));
  const Point p = vec({0, 0.6, 0.8}), q = vec({1, 0, 0});
  const NavigationSolution sol = solve(rd, p, q);
  const auto panels = construction_panels(rd, p, q, sol);
  REQUIRE(panels.size() == 3);
  CHECK(panels[0].tau < panels[1].tau);
  CHECK(panels[1].tau < panels[2].tau);
  CHECK(panels[1].tau == sol.tau);
  // Only the middle panel reaches q.
  CHECK((panels[1].path.back().x - q).norm() < 1e-8);
  CHECK((panels[0].path.back().x - q).norm() > 1e-3);
  CHECK((panels[2].path.back().x - q).norm() > 1e-3);
  CHECK((panels[2].pre_orbit.back() - pre_orbit(rd.wind(), q, panels[2].tau)).norm() < 1e-12);
}
