#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zermelo/conjugate.hpp"
#include "zermelo/validation.hpp"

using namespace zermelo;
using oracle::vec;

namespace {

// Christoffels of a conformally flat or flat chart from differences of h.
Tensor3 christoffel_fd(const ModelSpace& s, const Point& x) {
  const int d = static_cast<int>(x.size());
  const double h = 1e-5;
  Tensor3 dh(d);
  for (int k = 0; k < d; ++k) {
    const Point e = Point::Unit(d, k) * h;
    dh[k] = (s.metric(x + e) - s.metric(x - e)) / (2 * h);
  }
  const Matrix hi = s.metric_inverse(x);
  Tensor3 g(d, Matrix::Zero(d, d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) g[i](j, k) += 0.5 * hi(i, l) * (dh[k](l, j) + dh[j](l, k) - dh[l](j, k));
  return g;
}

}  // namespace

TEST_CASE("ball metric at (1/2, 0)") {
  const ModelSpace b = ModelSpace::poincare_ball(2);
  CHECK((b.metric(vec({0.5, 0})) - 64.0 / 9.0 * Matrix::Identity(2, 2)).norm() < 1e-12);
  CHECK(b.curvature() == -1.0);
  CHECK(ModelSpace::sphere(2).curvature() == 1.0);
  CHECK(ModelSpace::euclidean(3).curvature() == 0.0);
}

TEST_CASE("Christoffel symbols match finite differences of the metric") {
  for (const ModelSpace& m : {ModelSpace::poincare_ball(2), ModelSpace::poincare_ball(3), ModelSpace::euclidean(2)}) {
    std::mt19937 rng(3);
    for (int j = 0; j < 5; ++j) {
      const Point x = random_point(m, rng, 0.8);
      const Tensor3 a = m.christoffel(x), b = christoffel_fd(m, x);
      for (std::size_t i = 0; i < a.size(); ++i) CHECK((a[i] - b[i]).cwiseAbs().maxCoeff() < 1e-7);
    }
  }
}

TEST_CASE("sectional curvature equals the model constant") {
  std::mt19937 rng(5);
  for (const ModelSpace& m : {ModelSpace::euclidean(3), ModelSpace::sphere(2), ModelSpace::sphere(3),
                              ModelSpace::poincare_ball(2), ModelSpace::poincare_ball(4)}) {
    for (int j = 0; j < 10; ++j) {
      const Point x = random_point(m, rng, 0.7);
      const Tangent u = random_unit(m, x, rng);
      Tangent v = random_unit(m, x, rng);
      v -= m.inner(x, u, v) * u;
      CHECK(m.sectional_curvature(x, u, v) == doctest::Approx(m.curvature()).epsilon(1e-8).scale(1.0));
    }
  }
}

TEST_CASE("closed-form geodesics") {
  const ModelSpace b = ModelSpace::poincare_ball(2);
  // rho(t) = (0, tanh(t/2)) with unit h-speed.
  for (double t : {0.3, 1.0, 2.5}) CHECK((b.geodesic(vec({0, 0}), vec({0, 0.5}), t).x - vec({0, std::tanh(t / 2)})).norm() < 1e-14);
  const ModelSpace s = ModelSpace::sphere(2);
  const auto st = s.geodesic(vec({1, 0, 0}), vec({0, 1, 0}), M_PI / 2);
  CHECK((st.x - vec({0, 1, 0})).norm() < 1e-15);
  CHECK((st.v - vec({-1, 0, 0})).norm() < 1e-15);
  const ModelSpace e = ModelSpace::euclidean(2);
  CHECK((e.geodesic(vec({1, 2}), vec({3, -1}), 2.0).x - vec({7, 0})).norm() < 1e-15);
}

TEST_CASE("log inverts exp and has the distance as length") {
  std::mt19937 rng(9);
  for (const ModelSpace& m : {ModelSpace::euclidean(2), ModelSpace::sphere(2), ModelSpace::poincare_ball(3)}) {
    for (int j = 0; j < 20; ++j) {
      const Point p = random_point(m, rng), q = random_point(m, rng);
      const Tangent v = m.log(p, q);
      CHECK(m.norm(p, v) == doctest::Approx(m.distance(p, q)).epsilon(1e-12));
      CHECK((m.geodesic(p, v, 1.0).x - q).norm() < 1e-10);
    }
  }
}

TEST_CASE("ball distance formula") {
  const ModelSpace b = ModelSpace::poincare_ball(2);
  const Point p = vec({0.3, -0.1}), q = vec({-0.2, 0.5});
  const double expect = std::acosh(1 + 2 * (p - q).squaredNorm() / ((1 - p.squaredNorm()) * (1 - q.squaredNorm())));
  CHECK(b.distance(p, q) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("antipodal log reports the tie") {
  const ModelSpace s = ModelSpace::sphere(2);
  bool tie = false;
  const Tangent v = s.log(vec({0, 0, 1}), vec({0, 0, -1}), &tie);
  CHECK(tie);
  CHECK(s.norm(vec({0, 0, 1}), v) == doctest::Approx(M_PI));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(ModelSpace::poincare_ball(2).require(vec({1.0, 0.0})), DomainError);
  CHECK_THROWS_AS(ModelSpace::sphere(2).require(vec({1.0, 0.1, 0.0})), DomainError);
  CHECK_THROWS_AS(ModelSpace::sphere(2).require_tangent(vec({1, 0, 0}), vec({1, 0, 0})), DomainError);
  CHECK_THROWS_AS(ModelSpace::euclidean(1), InvalidArgument);
}

TEST_CASE("Mobius addition is a left inverse pair") {
  const Eigen::VectorXd a = vec({0.3, 0.2}), x = vec({-0.1, 0.4});
  CHECK((mobius::add(Eigen::VectorXd(-a), mobius::add(a, x)) - x).norm() < 1e-14);
  const double h = 1e-6;
  Matrix J(2, 2);
  for (int k = 0; k < 2; ++k) {
    const Eigen::VectorXd e = Eigen::VectorXd::Unit(2, k) * h;
    J.col(k) = (mobius::add(a, x + e) - mobius::add(a, x - e)) / (2 * h);
  }
  CHECK((J - mobius::add_jacobian(a, x)).norm() < 1e-8);
}

TEST_CASE("Jacobi fields agree with a variation through geodesics") {
  std::mt19937 rng(21);
  for (const ModelSpace& m : {ModelSpace::euclidean(2), ModelSpace::sphere(2), ModelSpace::poincare_ball(2)}) {
    for (int j = 0; j < 5; ++j) {
      const Point x = random_point(m, rng, 0.5);
      const Tangent u = random_unit(m, x, rng);
      Tangent e = random_unit(m, x, rng);
      e -= m.inner(x, u, e) * u;
      e /= m.norm(x, e);
      for (double s : {0.4, 1.3, 2.2}) {
        const JacobiSample js = jacobi_at(m, x, u, e, s);
        CHECK((js.J - oracle::jacobi_variation(m, x, u, e, s)).norm() < 1e-6);
      }
    }
  }
  CHECK(riem_conjugate_times(ModelSpace::sphere(2), 7.0) == std::vector<double>{M_PI, 2 * M_PI});
  CHECK(riem_conjugate_times(ModelSpace::poincare_ball(2), 7.0).empty());
}
