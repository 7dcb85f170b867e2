#include "zermelo/validation.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include "zermelo/conjugate.hpp"
#include "zermelo/gallery.hpp"
#include "zermelo/katok.hpp"
#include "zermelo/navigation.hpp"

namespace zermelo {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void below(const std::string& check, double value, double tol) {
    out_.push_back({name_, check, value < tol, value, "< " + sci(tol)});
  }
  void above(const std::string& check, double value, double tol) {
    out_.push_back({name_, check, value > tol, value, "> " + sci(tol)});
  }
  void holds(const std::string& check, bool ok) { out_.push_back({name_, check, ok, ok ? 1.0 : 0.0, "true"}); }
  // Runs f, recording a failure instead of propagating an exception.
  void guard(const std::string& check, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      out_.push_back({name_, check + " [" + e.what() + "]", false, 0.0, "no error"});
    }
  }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  static std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
  }
  std::string name_;
  std::vector<CheckResult> out_;
};

Point vec(std::initializer_list<double> v) {
  Point p(static_cast<Eigen::Index>(v.size()));
  int i = 0;
  for (double x : v) p(i++) = x;
  return p;
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// Christoffel symbols from central differences of the metric.
Tensor3 christoffel_fd(const ModelSpace& s, const Point& x) {
  const int d = static_cast<int>(x.size());
  const double h = 1e-5;
  Tensor3 dh(d);
  for (int k = 0; k < d; ++k) {
    const Point e = Point::Unit(d, k) * h;
    dh[k] = (s.metric(x + e) - s.metric(x - e)) / (2.0 * h);
  }
  const Matrix hinv = s.metric_inverse(x);
  Tensor3 g(d, Matrix::Zero(d, d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          g[i](j, k) += 0.5 * hinv(i, l) * (dh[k](l, j) + dh[j](l, k) - dh[l](j, k));
  return g;
}

std::vector<CheckResult> model_spaces_suite() {
  Suite s("model_spaces");
  std::mt19937 rng(1);
  const ModelSpace ball = ModelSpace::poincare_ball(2);
  s.below("ball metric at (1/2, 0) = 64/9 I", max_abs(ball.metric(vec({0.5, 0.0})) - 64.0 / 9.0 * Matrix::Identity(2, 2)),
          1e-12);
  double worst = 0.0;
  for (const Point& x : {vec({0.5, 0.0}), vec({-0.3, 0.4}), vec({0.1, -0.7})}) {
    const Tensor3 a = ball.christoffel(x), b = christoffel_fd(ball, x);
    for (int i = 0; i < 2; ++i) worst = std::max(worst, max_abs(a[i] - b[i]));
  }
  s.below("ball Christoffels vs metric differences", worst, 1e-7);

  const ModelSpace sphere = ModelSpace::sphere(2);
  s.below("sphere great circle closes at 2 pi",
          (sphere.geodesic(vec({0, 0, 1}), vec({1, 0, 0}), 2.0 * M_PI).x - vec({0, 0, 1})).norm(), 1e-12);
  s.below("ball geodesic (0, tanh(t/2)) at t = 1.3",
          (ball.geodesic(vec({0, 0}), vec({0, 0.5}), 1.3).x - vec({0, std::tanh(0.65)})).norm(), 1e-12);
  s.below("ball distance to (0, tanh(1/2)) is 1", std::abs(ball.distance(vec({0, 0}), vec({0, std::tanh(0.5)})) - 1.0),
          1e-12);
  s.below("sphere antipodal distance is pi", std::abs(sphere.distance(vec({0, 0, 1}), vec({0, 0, -1})) - M_PI), 1e-12);

  for (const ModelSpace& m : {ModelSpace::euclidean(2), sphere, ball, ModelSpace::sphere(3), ModelSpace::poincare_ball(3)}) {
    double tri = -1.0, sec = 0.0, arc = 0.0;
    for (int j = 0; j < 20; ++j) {
      const Point p = random_point(m, rng), q = random_point(m, rng), r = random_point(m, rng);
      tri = std::max(tri, m.distance(p, r) - m.distance(p, q) - m.distance(q, r));
      const Tangent u = random_unit(m, p, rng), v = random_unit(m, p, rng);
      sec = std::max(sec, std::abs(m.sectional_curvature(p, u, v) - m.curvature()));
      const double t = 0.3, dt = 0.05;
      arc = std::max(arc, std::abs(m.distance(m.geodesic(p, u, t).x, m.geodesic(p, u, t + dt).x) - dt));
    }
    s.below(m.name() + " triangle inequality", tri, 1e-9);
    s.below(m.name() + " sectional curvature", sec, 1e-6);
    s.below(m.name() + " geodesic arc length", arc, 1e-7);
  }
  return s.take();
}

std::vector<CheckResult> wind_suite() {
  Suite s("wind");
  std::mt19937 rng(2);
  for (const NamedWind& nw : example_winds()) {
    const WindField& w = nw.wind;
    const ModelSpace& m = w.space();
    double lie = 0.0, group = 0.0, conf = 0.0, equi = 0.0;
    for (int j = 0; j < 10; ++j) {
      const Point x = random_point(m, rng, 0.5);
      lie = std::max(lie, lie_derivative_residual(w, x));
      const double t1 = 0.3, t2 = -0.7;
      group = std::max(group, (w.flow(t1, w.flow(t2, x)) - w.flow(t1 + t2, x)).norm());
      const Tangent v = random_unit(m, x, rng);
      const Point fx = w.flow(t1, x);
      conf = std::max(conf, std::abs(m.norm_squared(fx, w.flow_differential(t1, x, v)) -
                                     std::exp(w.sigma() * t1) * m.norm_squared(x, v)));
      equi = std::max(equi, (w.flow_differential(t1, x, w.eval(x)) - w.eval(fx)).norm());
    }
    s.below(nw.label + " Lie derivative L_W h = sigma h", lie, 1e-6);
    s.below(nw.label + " flow group law", group, 1e-8);
    s.below(nw.label + " conformal flow differential", conf, 1e-7);
    s.below(nw.label + " equivariance dphi W = W o phi", equi, 1e-7);
  }
  const WindField mer = WindField::sphere_non_homothety(0.3);
  s.above("meridional drift is not a homothety", lie_derivative_residual(mer, vec({0.5, 0.5, std::sqrt(0.5)})), 0.1);
  s.below("Poincare rotation admissible radius (sqrt 5 - 1)/2",
          std::abs(admissible_radius(WindField::poincare_rotation(2, 0.5)) - (std::sqrt(5.0) - 1.0) / 2.0), 1e-15);
  const WindField tr = WindField::poincare_translation(2, 0.5);
  const Point x = vec({0.2, -0.3});
  s.below("Poincare translation closed flow vs integrator", (tr.flow(0.8, x) - numeric_flow(tr, 0.8, x)).norm(), 1e-9);
  return s.take();
}

std::vector<CheckResult> randers_suite() {
  Suite s("randers");
  std::mt19937 rng(3);
  const RandersMetric rot(WindField::euclidean(2, 0.0, 1.0));
  s.below("F((1/2,0), (1,0)) = 2/sqrt(3)", std::abs(rot.norm(vec({0.5, 0}), vec({1, 0})) - 2.0 / std::sqrt(3.0)), 1e-14);
  const auto dd = rot.defining_data(vec({0.5, 0}));
  Matrix a(2, 2);
  a << 4.0 / 3.0, 0, 0, 16.0 / 9.0;
  s.below("defining data at (1/2, 0)", max_abs(dd.a - a) + (dd.b - vec({0, 2.0 / 3.0})).norm(), 1e-14);

  for (const NamedWind& nw : example_winds()) {
    const RandersMetric rd(nw.wind);
    const ModelSpace& m = rd.space();
    double ab = 0.0, decomp = 0.0, euler = 0.0, hess = 0.0, unit = 0.0, mineig = 1.0;
    for (int j = 0; j < 10; ++j) {
      const Start st = random_admissible_start(rd, rng, 0.0);
      const Point& x = st.x;
      Tangent y = 1.7 * random_unit(m, x, rng);
      const auto d = rd.defining_data(x);
      const Tangent wv = rd.wind().eval(x);
      ab = std::max(ab, std::abs(d.b.dot(d.a.inverse() * d.b) - m.norm_squared(x, wv)));
      if (m.kind() != ModelSpace::Kind::Sphere)
        decomp = std::max(decomp, std::abs(std::sqrt(y.dot(d.a * y)) + d.b.dot(y) - rd.norm(x, y)));
      const Matrix g = rd.fundamental_tensor(x, y);
      euler = std::max(euler, std::abs(y.dot(g * y) - std::pow(rd.norm(x, y), 2)));
      // Hessian of F^2 / 2 by central differences, in a tangent frame.
      const Matrix B = m.tangent_basis(x);
      const int n = static_cast<int>(B.cols());
      const double h = 1e-4;
      auto E = [&](const Tangent& v) { return 0.5 * std::pow(rd.norm(x, v), 2); };
      Matrix H(n, n), G = B.transpose() * g * B;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          const Tangent bi = B.col(i) * h, bk = B.col(k) * h;
          H(i, k) = (E(y + bi + bk) - E(y + bi - bk) - E(y - bi + bk) + E(y - bi - bk)) / (4 * h * h);
        }
      hess = std::max(hess, max_abs(H - G) / max_abs(G));
      mineig = std::min(mineig, Eigen::SelfAdjointEigenSolver<Matrix>(G).eigenvalues().minCoeff());
      const Tangent v = random_unit(m, x, rng);
      unit = std::max(unit, std::abs(rd.norm(x, Tangent(v + wv)) - 1.0));
    }
    s.below(nw.label + " a(b,b) = |W|^2", ab, 1e-10);
    if (rd.space().kind() != ModelSpace::Kind::Sphere) s.below(nw.label + " alpha + beta = F", decomp, 1e-10);
    s.below(nw.label + " g(y,y) = F^2", euler, 1e-8);
    s.below(nw.label + " g vs Hessian of F^2/2 (relative)", hess, 1e-6);
    s.above(nw.label + " g positive definite", mineig, 0.0);
    s.below(nw.label + " unit sphere is translated by W", unit, 1e-9);
  }
  s.above("non-reversibility |F(y) - F(-y)|",
          std::abs(rot.norm(vec({0.5, 0}), vec({0, 1})) - rot.norm(vec({0.5, 0}), vec({0, -1}))), 0.1);
  return s.take();
}

std::vector<CheckResult> geodesic_suite() {
  Suite s("geodesic");
  std::mt19937 rng(4);
  double worst_cv = 0.0;
  for (const NamedWind& nw : example_winds()) {
    const RandersMetric rd(nw.wind);
    s.guard(nw.label + " cross-validation", [&] {
      double cv = 0.0, drift = 0.0, zermelo_unit = 0.0, profile = 0.0, zid = 0.0;
      for (int j = 0; j < 3; ++j) {
        const Start st = random_admissible_start(rd, rng, 1.0);
        cv = std::max(cv, cross_validate(rd, st.x, st.y, 1.0, 128));
        const GeodesicPath P = flow_compose(rd, st.x, st.y, 1.0, 64);
        drift = std::max(drift, speed_drift(rd, P));
        const GeodesicPath base = recover_base(rd, P);
        for (std::size_t k = 0; k < P.samples.size(); ++k) {
          const PathSample& p = P.samples[k];
          zermelo_unit = std::max(zermelo_unit, std::abs(rd.space().norm(p.x, Tangent(p.v - rd.wind().eval(p.x))) - 1.0));
          const PathSample& b = base.samples[k];
          profile = std::max(profile, std::abs(rd.space().norm_squared(b.x, b.v) - std::exp(-rd.wind().sigma() * b.t)));
          const ZetaTensors z = zeta_tensors(rd.wind(), p.x);
          const Matrix hinv = rd.space().metric_inverse(p.x);
          const Tangent lhs = zeta(rd, p.x, p.v) + 0.25 * rd.wind().sigma() * p.v + 0.25 * hinv * z.T +
                              0.5 * hinv * (z.C * p.v);
          Tangent tan = lhs;
          if (rd.space().kind() == ModelSpace::Kind::Sphere) tan = rd.space().project_tangent(p.x, lhs);
          zid = std::max(zid, tan.norm());
        }
      }
      worst_cv = std::max(worst_cv, cv);
      s.below(nw.label + " cross-validation", cv, 1e-6);
      s.below(nw.label + " F-speed drift", drift, 1e-6);
      s.below(nw.label + " |P' - W| = 1", zermelo_unit, 1e-7);
      s.below(nw.label + " base speed profile e^{-sigma t}", profile, 1e-7);
      s.below(nw.label + " zeta identity", zid, 1e-8);
    });
  }
  s.guard("meridional counterexample", [&] {
    const RandersMetric rd(WindField::sphere_non_homothety(0.3));
    const Point x = vec({1, 0, 0});
    s.above("meridional counterexample separates the methods", cross_validate(rd, x, vec({0, 1, 0}), 1.0, 128), 1e-3);
  });
  struct Expect {
    std::string label;
    WindField wind;
    double K;
  };
  const double s2 = std::sqrt(2.0);
  for (const Expect& e : {Expect{"Katok a=1/4", WindField::sphere_rotation(2, {0.25}), 1.0},
                          Expect{"Poincare rotation", WindField::poincare_rotation(2, 0.5), -1.0},
                          Expect{"Euclidean rotation", WindField::euclidean(2, 0, 1), 0.0},
                          Expect{"Euclidean homothety", WindField::euclidean(2, s2, 1 / s2), -0.125}}) {
    s.guard(e.label + " flag curvature", [&] {
      const RandersMetric rd(e.wind);
      double worst = 0.0;
      for (int j = 0; j < 5; ++j) {
        const Start st = random_admissible_start(rd, rng, 0.0, 0.6);
        const Tangent v = random_unit(rd.space(), st.x, rng);
        worst = std::max(worst, std::abs(flag_curvature(rd, st.x, st.y, v) - e.K));
      }
      s.below(e.label + " flag curvature", worst, 1e-4);
    });
  }
  return s.take();
}

std::vector<CheckResult> navigation_suite() {
  Suite s("navigation");
  std::mt19937 rng(5);
  for (const NamedWind& nw : {NamedWind{"Katok a=1/4", WindField::sphere_rotation(2, {0.25})},
                              NamedWind{"Euclidean rotation", WindField::euclidean(2, 0, 1)}}) {
    s.guard(nw.label + " solve", [&] {
      const RandersMetric rd(nw.wind);
      double res = 0.0, end = 0.0, len = 0.0;
      for (int j = 0; j < 5; ++j) {
        const Point p = random_admissible_start(rd, rng, 0.0, 0.6).x;
        const Point q = random_admissible_start(rd, rng, 0.0, 0.6).x;
        const NavigationSolution sol = solve(rd, p, q);
        res = std::max(res, sol.residual);
        end = std::max(end, (sol.path.back().x - q).norm());
        len = std::max(len, std::abs(sol.path.duration() * sol.path.f_speed - sol.tau));
      }
      s.below(nw.label + " fixed-point residual", res, 1e-10);
      s.below(nw.label + " endpoint error", end, 1e-8);
      s.below(nw.label + " F-length = tau", len, 1e-8);
    });
  }
  s.guard("p = q", [&] {
    const RandersMetric rd(WindField::euclidean(2, 0, 1));
    const NavigationSolution sol = solve(rd, vec({0.1, 0.1}), vec({0.1, 0.1}));
    s.holds("p = q gives tau = 0 and an empty path", sol.tau == 0.0 && sol.path.samples.empty());
  });
  return s.take();
}

std::vector<CheckResult> conjugate_suite() {
  Suite s("conjugate");
  std::mt19937 rng(6);
  s.guard("Katok conjugate points", [&] {
    const RandersMetric rd(WindField::sphere_rotation(2, {0.25}));
    double loc = 0.0, at = 0.0, jpi = 0.0, jmax = 1e300, cut = 0.0;
    for (int j = 0; j < 5; ++j) {
      const Start st = random_admissible_start(rd, rng, 0.0);
      const GeodesicPath P = flow_compose(rd, st.x, st.y, M_PI + 0.2, 512);
      const auto cps = randers_conjugate_points(rd, P);
      if (cps.empty()) throw NumericalError("no conjugate point found");
      const Point target = rd.wind().flow(M_PI, -st.x);
      loc = std::max(loc, (cps.front().x - target).norm());
      at = std::max(at, std::abs(cps.front().t - M_PI));
      const Tangent u = st.y - rd.wind().eval(st.x);
      const Tangent e = Eigen::Vector3d(st.x.head<3>()).cross(Eigen::Vector3d(u.head<3>())).normalized();
      GeodesicPath Pi = flow_compose(rd, st.x, st.y, M_PI, 256);
      const auto pj = pushed_jacobi(rd, Pi, e);
      jpi = std::max(jpi, pj.back().J.norm());
      double m = 0.0;
      for (const auto& q : pj) m = std::max(m, q.J.norm());
      jmax = std::min(jmax, m);
      cut = std::max(cut, (cut_point(rd, st.x, st.y).q - target).norm());
    }
    s.below("Katok first conjugate point at t = pi", at, 1e-12);
    s.below("Katok conjugate point at phi(pi, -p)", loc, 1e-6);
    s.below("pushed Jacobi field |J(pi)|", jpi, 1e-6);
    s.above("pushed Jacobi field nontrivial", jmax, 0.1);
    s.below("Katok cut point phi(pi, -p)", cut, 1e-6);
    const GeodesicPath longP = flow_compose(rd, vec({1, 0, 0}), vec({0, 1.25, 0}), M_PI + 0.5, 256);
    s.holds("arc of length pi + 0.5 is not a minimizer", !certify_global_minimizer(rd, longP));
    const GeodesicPath shortP = flow_compose(rd, vec({1, 0, 0}), vec({0, 1.25, 0}), 0.5, 64);
    s.holds("arc of length 0.5 is a minimizer", certify_global_minimizer(rd, shortP));
  });
  s.guard("convexity", [&] {
    const double s2 = std::sqrt(2.0);
    const WindField h = WindField::euclidean(2, s2, 1 / s2);
    const ModelSpace& e = h.space();
    const auto line = riemannian_geodesic(e, vec({-0.5, 0.3}), vec({0.6, 0.8}), 1.5, 64);
    const ConvexityReport r = w_norm_convexity(h, line);
    s.holds("sigma = sqrt 2 wind satisfies d2|W|^2 >= sigma^2/2", r.holds);
    const WindField theta = WindField::sphere_rotation(2, {1.0}, false);
    const auto meridian = riemannian_geodesic(theta.space(), vec({0, 0, 1}), vec({1, 0, 0}), M_PI, 64);
    s.holds("W = d/dtheta on S^2 violates it", !w_norm_convexity(theta, meridian).holds);
    s.holds("W = d/dtheta: curvature condition fails too", !curvature_sufficiency(theta, meridian).nonpositive);
  });
  s.guard("implication", [&] {
    int violations = 0, tested = 0;
    for (const NamedWind& nw : example_winds()) {
      if (nw.wind.space().kind() == ModelSpace::Kind::Sphere) continue;
      for (int j = 0; j < 5; ++j) {
        const Point x = random_point(nw.wind.space(), rng, 0.5);
        const auto eta = riemannian_geodesic(nw.wind.space(), x, random_unit(nw.wind.space(), x, rng), 0.5, 16);
        if (curvature_sufficiency(nw.wind, eta).nonpositive) {
          ++tested;
          if (!w_norm_convexity(nw.wind, eta).holds) ++violations;
        }
      }
    }
    s.holds("nonpositive curvature implies convexity (" + std::to_string(tested) + " geodesics)",
            violations == 0 && tested > 0);
  });
  return s.take();
}

std::vector<CheckResult> katok_suite() {
  Suite s("katok");
  s.guard("census", [&] {
    const auto census = closed_geodesic_census(KatokData::make(2, {0.25}));
    double len = 0.0, ode = 0.0;
    for (const CensusEntry& e : census) {
      len = std::max(len, std::abs(e.length - e.expected));
      ode = std::max(ode, e.ode_residual);
    }
    s.holds("census has two entries for n = 2", census.size() == 2);
    s.below("census lengths 8 pi/5 and 8 pi/3", len, 1e-9);
    s.below("census ODE residual", ode, 1e-6);
    s.holds("n = 3 census has four entries", closed_geodesic_census(KatokData::make(3, {0.3, 0.2})).size() == 4);
  });
  s.guard("closure", [&] {
    const KatokData k = KatokData::make(2, {0.25});
    const ClosureReport pole = closure_test(k, pole_geodesic(k, 1.0, 4), 50);
    s.holds("a = 1/4 pole geodesic closes in 4 loops", pole.closed && pole.loops == 4);
    const KatokData k12 = KatokData::make(2, {5.0 / 7.0});
    const Point q = vec({1, 0, 0});
    const Tangent y = k12.wind().eval(q) + vec({0, std::cos(M_PI / 4), std::sin(M_PI / 4)});
    const ClosureReport c12 = closure_test(k12, q, y, 50);
    s.holds("a = 5/7 tilted geodesic closes in 7 loops", c12.closed && c12.loops == 7);
    const KatokData ki = KatokData::make(2, {1.0 / (2.0 * std::sqrt(2.0))});
    const ClosureReport ci = closure_test(ki, pole_geodesic(ki, 1.0, 4), 50);
    s.holds("a = 1/(2 sqrt 2) not closed within 50 loops", !ci.closed);
    s.below("self-intersection |P(2 pi) - P(0)|", ci.position_gap_2pi, 1e-8);
    s.above("self-intersection |P'(2 pi) - P'(0)|", ci.velocity_gap_2pi, 0.1);
  });
  s.guard("Ziller", [&] {
    const ZillerChoice z1 = ziller_choice(1, 1.0 / std::sqrt(2.0), {2});
    const ClosedCount c1 = count_closed_geodesics(z1.data, 20, 50);
    s.holds("Ziller m = 1: two closed geodesics", c1.census == 2 && c1.sampled_closed == 0);
    const ZillerChoice z2 = ziller_choice(2, 1.0 / std::sqrt(2.0), {2, 3});
    const ClosedCount c2 = count_closed_geodesics(z2.data, 20, 50);
    s.holds("Ziller m = 2: four closed geodesics", c2.census == 4 && c2.sampled_closed == 0);
    s.holds("rational a is flagged", !ziller_choice(1, 0.5, {3}).warnings.empty());
  });
  s.guard("geodesic spheres", [&] {
    const KatokData k = KatokData::make(2, {0.25});
    const RandersMetric rd = k.metric();
    const Point p = vec({0, 0.6, 0.8});
    double worst = 0.0;
    for (const Point& q : geodesic_sphere(k, p, 1.0, 8)) worst = std::max(worst, std::abs(solve(rd, p, q).tau - 1.0));
    s.below("geodesic sphere r = 1 lies at solver time 1", worst, 1e-6);
    const auto far = geodesic_sphere(k, p, M_PI, 4);
    double spread = 0.0;
    for (const Point& q : far) spread = std::max(spread, (q - k.wind().flow(M_PI, -p)).norm());
    s.below("r = pi sphere is the farthest point", spread, 1e-12);
  });
  return s.take();
}

std::vector<CheckResult> gallery_suite() {
  Suite s("gallery");
  for (int id = 1; id <= kGallerySize; ++id) {
    s.guard("example " + std::to_string(id), [&] {
      const GalleryFigure f = build_example(id);
      bool ok = f.curves.size() >= 2;
      for (const GalleryCurve& c : f.curves)
        ok = ok && c.path.samples.size() == static_cast<std::size_t>(kGalleryPoints);
      s.holds("example " + std::to_string(id) + " curves sampled with 1024 points", ok);
      double drift = 0.0;
      for (const GalleryCurve& c : f.curves)
        if (c.path.method != GeodesicPath::Method::RiemannianBase) drift = std::max(drift, speed_drift(f.metric, c.path));
      s.below("example " + std::to_string(id) + " F-speed", drift, 1e-6);
      if (f.boundary_radius) {
        double dev = 0.0;
        for (const Point& p : f.boundaries.front()) dev = std::max(dev, std::abs(p.norm() - *f.boundary_radius));
        s.below("example " + std::to_string(id) + " boundary radius", dev, 1e-12);
      }
      s.holds("example " + std::to_string(id) + " SVG deterministic", example_svg(f) == example_svg(build_example(id)));
    });
  }
  return s.take();
}

const std::map<std::string, std::function<std::vector<CheckResult>()>>& suites() {
  static const std::map<std::string, std::function<std::vector<CheckResult>()>> m = {
      {"model_spaces", model_spaces_suite}, {"wind", wind_suite},       {"randers", randers_suite},
      {"geodesic", geodesic_suite},         {"navigation", navigation_suite}, {"conjugate", conjugate_suite},
      {"katok", katok_suite},               {"gallery", gallery_suite}};
  return m;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"model_spaces", "wind", "randers", "geodesic", "navigation", "conjugate", "katok", "gallery"};
}

std::vector<CheckResult> run_suite(const std::string& name) {
  const auto it = suites().find(name);
  if (it == suites().end()) throw InvalidArgument("unknown suite '" + name + "'");
  return it->second();
}

std::vector<CheckResult> run_all_suites() {
  std::vector<CheckResult> all;
  for (const std::string& n : suite_names()) {
    auto r = run_suite(n);
    all.insert(all.end(), r.begin(), r.end());
  }
  return all;
}

std::string format_result(const CheckResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", r.value);
  return std::string(r.passed ? "PASS" : "FAIL") + "  " + r.suite + ": " + r.name + "  (" + buf + " " + r.bound + ")";
}

std::vector<NamedWind> example_winds() {
  const double s2 = std::sqrt(2.0);
  return {{"Euclidean rotation", WindField::euclidean(2, 0.0, 1.0)},
          {"Euclidean homothety", WindField::euclidean(2, s2, 1.0 / s2)},
          {"Poincare rotation", WindField::poincare_rotation(2, 0.5)},
          {"Poincare translation", WindField::poincare_translation(2, 0.5)},
          {"Katok a=1/4", WindField::sphere_rotation(2, {0.25})},
          {"Katok a=5/7", WindField::sphere_rotation(2, {5.0 / 7.0})},
          {"Katok a=5/6", WindField::sphere_rotation(2, {5.0 / 6.0})}};
}

Point random_point(const ModelSpace& space, std::mt19937& rng, double radius) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Eigen::VectorXd g(space.ambient_dim());
  for (int i = 0; i < g.size(); ++i) g(i) = normal(rng);
  if (space.kind() == ModelSpace::Kind::Sphere) return g.normalized();
  return g.normalized() * radius * std::pow(unif(rng), 1.0 / space.dim());
}

Tangent random_unit(const ModelSpace& space, const Point& x, std::mt19937& rng) {
  std::normal_distribution<double> normal;
  const Matrix B = space.tangent_basis(x);
  Eigen::VectorXd c(B.cols());
  for (int i = 0; i < c.size(); ++i) c(i) = normal(rng);
  return B * c.normalized();
}

Start random_admissible_start(const RandersMetric& rd, std::mt19937& rng, double T, double radius) {
  const ModelSpace& m = rd.space();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const Point x = random_point(m, rng, radius);
    if (!rd.admissible(x)) continue;
    const Tangent u = random_unit(m, x, rng);
    bool ok = true;
    for (int j = 1; j <= 64 && ok && T > 0.0; ++j) {
      try {
        ok = rd.admissible(flow_composed_state(rd, x, u, T * j / 64).x);
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (ok) return {x, Tangent(rd.wind().eval(x) + u)};
  }
  throw NumericalError("no admissible start found");
}

}  // namespace zermelo
