#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zermelo/validation.hpp"

using namespace zermelo;
using oracle::vec;

TEST_CASE("closed-form flows match numerical integration") {
  std::mt19937 rng(2);
  std::vector<NamedWind> winds = example_winds();
  winds.push_back({"Katok S^3", WindField::sphere_rotation(3, {0.6, 0.2})});
  winds.push_back({"Katok S^4", WindField::sphere_rotation(4, {0.5, 0.3})});
  winds.push_back({"translation D^3", WindField::poincare_translation(3, 0.4)});
  winds.push_back({"meridional", WindField::sphere_non_homothety(0.3)});
  for (const NamedWind& nw : winds) {
    CAPTURE(nw.label);
    const ModelSpace& m = nw.wind.space();
    for (int j = 0; j < 5; ++j) {
      Point x = random_point(m, rng, 0.5);
      if (nw.label == "meridional") x = vec({0.6, 0.0, 0.8});
      for (double t : {-0.8, 0.4, 1.5}) CHECK((nw.wind.flow(t, x) - numeric_flow(nw.wind, t, x)).norm() < 1e-9);
    }
  }
}

TEST_CASE("flow differential matches differences of the flow") {
  std::mt19937 rng(4);
  for (const NamedWind& nw : example_winds()) {
    CAPTURE(nw.label);
    const ModelSpace& m = nw.wind.space();
    const Point x = random_point(m, rng, 0.5);
    const Tangent v = random_unit(m, x, rng);
    const double h = 1e-6, t = 0.7;
    Tangent fd = (nw.wind.flow(t, m.project_point(x + h * v)) - nw.wind.flow(t, m.project_point(x - h * v))) / (2 * h);
    CHECK((fd - nw.wind.flow_differential(t, x, v)).norm() < 1e-7);
  }
}

TEST_CASE("homothety constant from the Lie derivative") {
  std::mt19937 rng(6);
  for (const NamedWind& nw : example_winds()) {
    CAPTURE(nw.label);
    for (int j = 0; j < 5; ++j) CHECK(lie_derivative_residual(nw.wind, random_point(nw.wind.space(), rng, 0.6)) < 1e-6);
  }
  // Off the equator the meridional drift stretches the parallels.
  CHECK(lie_derivative_residual(WindField::sphere_non_homothety(0.3), vec({0.5, 0.5, std::sqrt(0.5)})) > 0.1);
  CHECK_FALSE(WindField::sphere_non_homothety(0.3).is_homothety());
  CHECK_THROWS_AS(WindField::sphere_non_homothety(0.3).sigma(), InvalidArgument);
  CHECK(WindField::euclidean(2, std::sqrt(2.0), 1 / std::sqrt(2.0)).sigma() == std::sqrt(2.0));
}

TEST_CASE("Katok wind rotates the coordinate planes") {
  const WindField w = WindField::sphere_rotation(4, {0.5, 0.25});
  CHECK((w.eval(vec({1, 0, 0, 0, 0})) - vec({0, 0.5, 0, 0, 0})).norm() < 1e-15);
  CHECK((w.eval(vec({0, 0, 1, 0, 0})) - vec({0, 0, 0, 0.25, 0})).norm() < 1e-15);
  CHECK(w.eval(vec({0, 0, 0, 0, 1})).norm() < 1e-15);
  // phi(t, e_0) = cos(a t) e_0 + sin(a t) e_1.
  CHECK((w.flow(1.2, vec({1, 0, 0, 0, 0})) - vec({std::cos(0.6), std::sin(0.6), 0, 0, 0})).norm() < 1e-15);
  CHECK_THROWS_AS(WindField::sphere_rotation(2, {1.0}), InvalidArgument);
  CHECK_THROWS_AS(WindField::sphere_rotation(4, {0.2, 0.5}), InvalidArgument);
  CHECK_NOTHROW(WindField::sphere_rotation(2, {1.0}, false));
}

TEST_CASE("admissible regions") {
  CHECK(admissible_radius(WindField::euclidean(2, 0, 1)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(admissible_radius(WindField::euclidean(2, std::sqrt(2.0), 1 / std::sqrt(2.0))) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(admissible_radius(WindField::poincare_rotation(2, 0.5)) - (std::sqrt(5.0) - 1) / 2) < 1e-15);
  const WindField tr = WindField::poincare_translation(2, 0.5);
  CHECK(tr.norm(vec({0, 0})) == doctest::Approx(0.5));
  CHECK(tr.admissible(vec({0.9, 0})));  // along the axis |W| stays 1/2
  CHECK_FALSE(tr.admissible(vec({0, 0.9})));
  CHECK(WindField::sphere_rotation(2, {0.25}).admissible(vec({1, 0, 0})));
}
