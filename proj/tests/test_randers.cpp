#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zermelo/validation.hpp"

using namespace zermelo;
using oracle::vec;

TEST_CASE("Euclidean rotation at (1/2, 0)") {
  const RandersMetric rd(WindField::euclidean(2, 0, 1));
  const Point x = vec({0.5, 0});
  CHECK(rd.norm(x, vec({1, 0})) == doctest::Approx(2 / std::sqrt(3.0)).epsilon(1e-15));
  // W = (0, -1/2): into the wind is expensive, with the wind cheap.
  CHECK(rd.norm(x, vec({0, 1})) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(rd.norm(x, vec({0, -1})) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  const auto d = rd.defining_data(x);
  Matrix a(2, 2);
  a << 4.0 / 3.0, 0, 0, 16.0 / 9.0;
  CHECK((d.a - a).norm() < 1e-15);
  CHECK((d.b - vec({0, 2.0 / 3.0})).norm() < 1e-15);
  CHECK(rd.norm(x, vec({0, 0})) == 0.0);
}

TEST_CASE("fundamental tensor equals the Hessian of F^2/2") {
  std::mt19937 rng(8);
  for (const NamedWind& nw : example_winds()) {
    CAPTURE(nw.label);
    const RandersMetric rd(nw.wind);
    const ModelSpace& m = rd.space();
    for (int j = 0; j < 5; ++j) {
      const Start st = random_admissible_start(rd, rng, 0.0, 0.6);
      const Tangent y = st.y * 1.3;
      const Matrix B = m.tangent_basis(st.x);
      const double h = 1e-4;
      auto E = [&](const Tangent& v) { return 0.5 * std::pow(rd.norm(st.x, v), 2); };
      const Matrix G = B.transpose() * rd.fundamental_tensor(st.x, y) * B;
      for (int i = 0; i < B.cols(); ++i)
        for (int k = 0; k < B.cols(); ++k) {
          const Tangent bi = B.col(i) * h, bk = B.col(k) * h;
          const double H = (E(y + bi + bk) - E(y + bi - bk) - E(y - bi + bk) + E(y - bi - bk)) / (4 * h * h);
          CHECK(std::abs(H - G(i, k)) < 1e-6 * std::max(1.0, std::abs(G(i, k))));
        }
      CHECK(Eigen::SelfAdjointEigenSolver<Matrix>(G).eigenvalues().minCoeff() > 0);
      CHECK(rd.norm(st.x, st.y) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(rd.norm(st.x, y * 2.5) == doctest::Approx(2.5 * rd.norm(st.x, y)).epsilon(1e-13));
    }
  }
}

TEST_CASE("Zermelo: h-unit vectors plus the wind have F = 1") {
  std::mt19937 rng(10);
  for (const NamedWind& nw : example_winds()) {
    const RandersMetric rd(nw.wind);
    for (int j = 0; j < 10; ++j) {
      const Start st = random_admissible_start(rd, rng, 0.0);
      const Tangent u = random_unit(rd.space(), st.x, rng);
      CHECK(rd.norm(st.x, Tangent(rd.wind().eval(st.x) + u)) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("admissibility margin") {
  const RandersMetric rd(WindField::euclidean(2, 0, 1));
  CHECK(rd.admissible(vec({0.999, 0})));
  CHECK_FALSE(rd.admissible(vec({1.0, 0})));
  CHECK_THROWS_AS(rd.norm(vec({1.2, 0}), vec({1, 0})), DomainError);
  CHECK_THROWS_AS(rd.require_admissible(vec({0, 1 - 1e-11})), DomainError);
}
