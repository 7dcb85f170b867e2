#include "zermelo/geodesic.hpp"

#include <cmath>

#include "ode.hpp"
#include "zermelo/spray_curvature.hpp"

namespace zermelo {

const char* method_name(GeodesicPath::Method m) {
  switch (m) {
    case GeodesicPath::Method::DirectODE: return "direct";
    case GeodesicPath::Method::FlowComposed: return "flow-composed";
    case GeodesicPath::Method::RiemannianBase: return "riemannian-base";
  }
  return "?";
}

Matrix covariant_jacobian(const WindField& w, const Point& x) {
  const ModelSpace& space = w.space();
  const Matrix dw = w.jacobian(x);
  if (space.kind() == ModelSpace::Kind::Sphere) {
    const Point p = x.normalized();
    const Matrix proj = Matrix::Identity(p.size(), p.size()) - p * p.transpose();
    return proj * dw * proj;
  }
  const int d = space.ambient_dim();
  const Matrix h = space.metric(x);
  const Tensor3 dh = space.metric_partials(x);
  const Tensor3 gamma = space.christoffel(x);
  const Tangent wv = w.eval(x);
  const Eigen::VectorXd wl = h * wv;

  Matrix m = h * dw;  // m(i, j) = h_ik d_j W^k
  for (int j = 0; j < d; ++j) m.col(j) += dh[j] * wv;
  for (int s = 0; s < d; ++s) m -= wl(s) * gamma[s];
  return m;
}

ZetaTensors zeta_tensors(const WindField& w, const Point& x) {
  const Matrix m = covariant_jacobian(w, x);
  const Tangent wv = w.eval(x);
  ZetaTensors z;
  z.L = m + m.transpose();
  z.C = m - m.transpose();
  z.S = z.L.transpose() * wv;
  z.T = z.C.transpose() * wv;
  return z;
}

Tangent zeta(const RandersMetric& rd, const Point& x, const Tangent& y) {
  const double f = rd.norm(x, y);
  if (!(f > 0.0)) throw InvalidArgument("zeta is undefined at y = 0");
  const ModelSpace& space = rd.space();
  const Tangent wv = rd.wind().eval(x);
  const ZetaTensors z = zeta_tensors(rd.wind(), x);
  const Matrix hinv = space.metric_inverse(x);

  const double s0 = z.S.dot(y);
  const double l00 = y.dot(z.L * y);
  const double lww = wv.dot(z.L * wv);
  const Tangent c0 = hinv * (z.C * y);
  return 0.25 * (y / f - wv) * (2.0 * f * s0 - l00 - f * f * lww) - 0.25 * f * f * (hinv * (z.S + z.T)) -
         0.5 * f * c0;
}

Tangent randers_spray(const RandersMetric& rd, const Point& x, const Tangent& y) {
  return rd.space().spray(x, y) + zeta(rd, x, y);
}

namespace {

std::vector<double> uniform_grid(double T, int intervals) {
  if (intervals < 1) throw InvalidArgument("sample count must be positive");
  std::vector<double> t(intervals + 1);
  for (int k = 0; k <= intervals; ++k) t[k] = T * k / intervals;
  return t;
}

double sigma_or_zero(const WindField& w) { return w.is_homothety() ? w.sigma() : 0.0; }

GeodesicPath compose(const RandersMetric& rd, const Point& x0, const Tangent& y0, double T, int samples,
                     Orientation orientation) {
  const Tangent y = rd.normalize(x0, y0);
  Tangent base = y - rd.wind().eval(x0);
  if (orientation == Orientation::Reverse) base = -base;

  GeodesicPath path;
  path.method = GeodesicPath::Method::FlowComposed;
  path.f_speed = 1.0;
  for (double t : uniform_grid(T, samples)) {
    PathSample s = flow_composed_state(rd, x0, base, t);
    if (!rd.admissible(s.x)) throw DomainError("flow-composed path exits the admissible region");
    path.samples.push_back(std::move(s));
  }
  return path;
}

}  // namespace

GeodesicPath integrate_direct(const RandersMetric& rd, const Point& x0, const Tangent& y0, double T,
                              const DirectOptions& opt) {
  const ModelSpace& space = rd.space();
  rd.require_admissible(x0);
  space.require_tangent(x0, y0);
  const Tangent y = rd.normalize(x0, y0);
  const int d = space.ambient_dim();
  const bool sphere = space.kind() == ModelSpace::Kind::Sphere;

  detail::OdeRhs rhs = [&](const detail::OdeState& s, detail::OdeState& ds, double) {
    Point x = Eigen::Map<const Eigen::VectorXd>(s.data(), d);
    Tangent v = Eigen::Map<const Eigen::VectorXd>(s.data() + d, d);
    Tangent acc;
    if (sphere) {
      const double speed2 = v.squaredNorm();
      space.project(x, v);
      acc = -speed2 * x - 2.0 * zeta(rd, x, v);
    } else {
      acc = -2.0 * randers_spray(rd, x, v);
    }
    for (int i = 0; i < d; ++i) {
      ds[i] = s[d + i];
      ds[d + i] = acc(i);
    }
  };
  detail::StepHook hook = [&](detail::OdeState& s, double) {
    Eigen::Map<Eigen::VectorXd> x(s.data(), d);
    Eigen::Map<Eigen::VectorXd> v(s.data() + d, d);
    if (sphere) {
      x.normalize();
      v -= x.dot(v) * x;
    }
    if (!rd.admissible(x)) throw DomainError("geodesic leaves the admissible region");
  };

  detail::OdeState s0(2 * d);
  for (int i = 0; i < d; ++i) {
    s0[i] = x0(i);
    s0[d + i] = y(i);
  }
  detail::OdeOptions ode;
  ode.abs_tol = opt.tol;
  ode.rel_tol = opt.tol;
  const std::vector<double> times = uniform_grid(T, opt.samples);
  const auto states = detail::integrate_grid(rhs, s0, times, ode, hook);

  GeodesicPath path;
  path.method = GeodesicPath::Method::DirectODE;
  path.f_speed = 1.0;
  path.samples.reserve(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    path.samples.push_back({times[k], Eigen::Map<const Eigen::VectorXd>(states[k].data(), d),
                            Eigen::Map<const Eigen::VectorXd>(states[k].data() + d, d)});
  }
  return path;
}

double base_arc_length(double sigma, double t) {
  if (sigma == 0.0) return t;
  return -(2.0 / sigma) * std::expm1(-0.5 * sigma * t);
}

double randers_time(double sigma, double s) {
  if (sigma == 0.0) return s;
  if (!(sigma * s < 2.0)) throw DomainError("unreachable before parameter blowup (sigma * d_h >= 2)");
  return -(2.0 / sigma) * std::log1p(-0.5 * sigma * s);
}

PathSample flow_composed_state(const RandersMetric& rd, const Point& x0, const Tangent& base_velocity, double t) {
  const WindField& w = rd.wind();
  const double sigma = sigma_or_zero(w);
  const ModelSpace::State rho = rd.space().geodesic(x0, base_velocity, base_arc_length(sigma, t));
  const Tangent rho_dot = std::exp(-0.5 * sigma * t) * rho.v;
  Point p = w.flow(t, rho.x);
  Tangent v = w.eval(p) + w.flow_differential(t, rho.x, rho_dot);
  rd.space().project(p, v);
  return {t, p, v};
}

GeodesicPath flow_compose(const RandersMetric& rd, const Point& x0, const Tangent& y0, double T, int samples,
                          Orientation orientation) {
  if (!rd.wind().is_homothety()) throw InvalidArgument("flow composition requires homothety");
  return compose(rd, x0, y0, T, samples, orientation);
}

GeodesicPath flow_compose_unchecked(const RandersMetric& rd, const Point& x0, const Tangent& y0, double T,
                                    int samples, Orientation orientation) {
  return compose(rd, x0, y0, T, samples, orientation);
}

GeodesicPath recover_base(const RandersMetric& rd, const GeodesicPath& path) {
  const WindField& w = rd.wind();
  GeodesicPath base;
  base.method = GeodesicPath::Method::RiemannianBase;
  base.f_speed = 0.0;
  for (const PathSample& s : path.samples) {
    Point x = w.flow(-s.t, s.x);
    Tangent v = w.flow_differential(-s.t, s.x, s.v) - w.eval(x);
    rd.space().project(x, v);
    base.samples.push_back({s.t, x, v});
  }
  return base;
}

GeodesicPath riemannian_geodesic(const ModelSpace& space, const Point& x, const Tangent& v, double length,
                                 int samples) {
  GeodesicPath path;
  path.method = GeodesicPath::Method::RiemannianBase;
  path.f_speed = 0.0;
  for (double t : uniform_grid(length, samples)) {
    const ModelSpace::State s = space.geodesic(x, v, t);
    path.samples.push_back({t, s.x, s.v});
  }
  return path;
}

double cross_validate(const RandersMetric& rd, const Point& x0, const Tangent& y0, double T, int steps) {
  DirectOptions opt;
  opt.tol = 1e-11;
  opt.samples = steps;
  const GeodesicPath direct = integrate_direct(rd, x0, y0, T, opt);
  const GeodesicPath composed = rd.wind().is_homothety() ? flow_compose(rd, x0, y0, T, steps)
                                                        : flow_compose_unchecked(rd, x0, y0, T, steps);
  double worst = 0.0;
  for (std::size_t k = 0; k < direct.samples.size(); ++k)
    worst = std::max(worst, rd.space().distance(direct.samples[k].x, composed.samples[k].x));
  return worst;
}

double flag_curvature(const RandersMetric& rd, const Point& x, const Tangent& y, const Tangent& v) {
  rd.require_admissible(x);
  const ModelSpace& space = rd.space();
  const LocalChart chart = space.local_chart(x);
  const Eigen::VectorXd u0 = chart.base();

  SprayFunction spray = [&](const Eigen::VectorXd& u, const Eigen::VectorXd& w) -> Eigen::VectorXd {
    const Matrix j = chart.jacobian(u);
    const Point p = chart.embed(u);
    const Eigen::VectorXd rhs = 2.0 * randers_spray(rd, p, j * w) + chart.second(u, w);
    return 0.5 * chart.pseudo_inverse(u) * rhs;
  };

  const Eigen::VectorXd yc = chart.pull_vector(u0, y);
  const Eigen::VectorXd vc = chart.pull_vector(u0, v);
  const Matrix j = chart.jacobian(u0);
  const Matrix g = j.transpose() * rd.fundamental_tensor(x, y) * j;
  // Richardson extrapolation of the O(h^2) differences; plain differences lose
  // several digits where |W| approaches 1.
  // The stencil shrinks when it would leave the admissible region.
  for (double h = 1e-3;; h *= 0.5) {
    try {
      const Matrix r = (4.0 * spray_riemann(spray, u0, yc, 0.5 * h) - spray_riemann(spray, u0, yc, h)) / 3.0;
      return flag_curvature_from(r, g, yc, vc);
    } catch (const DomainError&) {
      if (h < 1e-7) throw;
    }
  }
}

double speed_drift(const RandersMetric& rd, const GeodesicPath& path) {
  double worst = 0.0;
  for (const PathSample& s : path.samples) worst = std::max(worst, std::abs(rd.norm(s.x, s.v) - path.f_speed));
  return worst;
}

}  // namespace zermelo
