#include "zermelo/conjugate.hpp"

#include <cmath>
#include <limits>

namespace zermelo {

std::vector<double> riem_conjugate_times(const ModelSpace& space, double length) {
  if (!(length > 0.0)) throw InvalidArgument("geodesic length must be positive");
  std::vector<double> out;
  if (space.kind() != ModelSpace::Kind::Sphere) return out;
  for (int k = 1; k * M_PI <= length * (1.0 + 1e-14); ++k) out.push_back(k * M_PI);
  return out;
}

JacobiSample jacobi_at(const ModelSpace& space, const Point& x, const Tangent& u, const Tangent& e, double s) {
  const double nu = space.norm(x, u), ne = space.norm(x, e);
  if (std::abs(nu - 1.0) > 1e-9 || std::abs(ne - 1.0) > 1e-9)
    throw InvalidArgument("Jacobi data must be h-unit vectors");
  if (std::abs(space.inner(x, u, e)) > 1e-9) throw InvalidArgument("Jacobi data must be h-orthogonal");

  switch (space.kind()) {
    case ModelSpace::Kind::Euclidean:
      return {s, s * e, e};
    case ModelSpace::Kind::Sphere:
      // e is orthogonal to the plane of the great circle, hence parallel.
      return {s, std::sin(s) * e, std::cos(s) * e};
    case ModelSpace::Kind::PoincareBall: {
      // Work at the origin, where the geodesic is radial and the parallel
      // normal keeps its Euclidean direction, then Mobius-translate to x.
      const double th = std::tanh(0.5 * s);
      const Eigen::VectorXd z = th * u.normalized();
      const Eigen::VectorXd e0 = 0.5 * (1.0 - th * th) * e.normalized();
      const Tangent E = mobius::add_jacobian(x, z) * e0;
      return {s, std::sinh(s) * E, std::cosh(s) * E};
    }
  }
  throw InvalidArgument("unknown model");
}

JacobiField jacobi_field(const ModelSpace& space, const Point& x, const Tangent& u, const Tangent& e, double length,
                         int samples) {
  JacobiField jf;
  jf.base = riemannian_geodesic(space, x, u, length, samples);
  for (const PathSample& s : jf.base.samples) jf.samples.push_back(jacobi_at(space, x, u, e, s.t));
  return jf;
}

namespace {

struct BaseStart {
  Point x;
  Tangent u;  // rho'(0)
  double sigma;
};

BaseStart base_start(const RandersMetric& rd, const GeodesicPath& P) {
  const WindField& w = rd.wind();
  if (!w.is_homothety()) throw InvalidArgument("requires a homothety wind");
  if (P.samples.empty()) throw InvalidArgument("empty path");
  const Point& x = P.front().x;
  return {x, Tangent(P.front().v - w.eval(x)), w.sigma()};
}

}  // namespace

std::vector<PushedJacobiSample> pushed_jacobi(const RandersMetric& rd, const GeodesicPath& P, const Tangent& e) {
  const BaseStart b = base_start(rd, P);
  const ModelSpace& space = rd.space();
  std::vector<PushedJacobiSample> out;
  for (const PathSample& s : P.samples) {
    const double arc = base_arc_length(b.sigma, s.t - P.front().t);
    const JacobiSample js = jacobi_at(space, b.x, b.u, e, arc);
    const Point rho = space.geodesic(b.x, b.u, arc).x;
    out.push_back({s.t, s.x, rd.wind().flow_differential(s.t - P.front().t, rho, js.J), js.J});
  }
  return out;
}

std::vector<ConjugatePoint> randers_conjugate_points(const RandersMetric& rd, const GeodesicPath& P) {
  const BaseStart b = base_start(rd, P);
  const double T = P.duration();
  // Largest base arc length reached on [0, T].
  const double arc = base_arc_length(b.sigma, T);
  std::vector<ConjugatePoint> out;
  if (!(arc > 0.0)) return out;
  for (double s : riem_conjugate_times(rd.space(), arc)) {
    const double t = std::min(randers_time(b.sigma, s), T);
    out.push_back({P.front().t + t, flow_composed_state(rd, b.x, b.u, t).x});
  }
  return out;
}

ConvexityReport w_norm_convexity(const WindField& w, const GeodesicPath& eta) {
  constexpr double kStep = 1e-4;
  const ModelSpace& space = w.space();
  const double sigma = w.is_homothety() ? w.sigma() : 0.0;
  ConvexityReport r;
  r.bound = 0.5 * sigma * sigma;
  r.min_second_derivative = std::numeric_limits<double>::infinity();
  for (const PathSample& s : eta.samples) {
    const double f0 = w.norm_squared(s.x);
    const double fp = w.norm_squared(space.geodesic(s.x, s.v, kStep).x);
    const double fm = w.norm_squared(space.geodesic(s.x, s.v, -kStep).x);
    const double d2 = (fp - 2.0 * f0 + fm) / (kStep * kStep);
    r.min_second_derivative = std::min(r.min_second_derivative, d2);
  }
  r.holds = r.min_second_derivative >= r.bound - 1e-6;
  return r;
}

bool certify_global_minimizer(const RandersMetric& rd, const GeodesicPath& P) {
  const WindField& w = rd.wind();
  if (!w.is_homothety() || P.samples.size() < 2) throw CriteriaInapplicable();
  const ModelSpace& space = rd.space();
  const double sigma = w.sigma();
  const Point& p = P.front().x;

  if (sigma != 0.0) {
    // The inequality must hold along every unit-speed geodesic; check it
    // along the base and along a frame of lines through its start.
    const GeodesicPath base = recover_base(rd, P);
    GeodesicPath eta;
    for (const PathSample& s : base.samples) {
      const double n = space.norm(s.x, s.v);
      if (n > 0.0) eta.samples.push_back({s.t, s.x, Tangent(s.v / n)});
    }
    if (!w_norm_convexity(w, eta).holds) throw CriteriaInapplicable();
    const Matrix frame = space.tangent_basis(p);
    for (int j = 0; j < frame.cols(); ++j)
      if (!w_norm_convexity(w, riemannian_geodesic(space, p, frame.col(j), 1.0, 16)).holds)
        throw CriteriaInapplicable();
  }

  const double ell = P.duration();
  const Point rho_end = space.project_point(w.flow(-ell, P.back().x));
  const double h_length = base_arc_length(sigma, ell) * P.f_speed;
  return h_length - space.distance(p, rho_end) <= 1e-7;
}

CutPoint cut_point(const RandersMetric& rd, const Point& p, const Tangent& y0) {
  const ModelSpace& space = rd.space();
  if (!rd.wind().is_homothety()) throw CriteriaInapplicable();
  if (space.kind() != ModelSpace::Kind::Sphere) throw DomainError("no finite cut point");
  rd.require_admissible(p);
  const Tangent u = rd.normalize(p, y0) - rd.wind().eval(p);
  const double ell = randers_time(rd.wind().sigma(), M_PI);
  CutPoint c;
  c.ell = ell;
  c.q = flow_composed_state(rd, p, u, ell).x;
  c.base_cut = space.project_point(rd.wind().flow(-ell, c.q));
  return c;
}

CurvatureReport curvature_sufficiency(const WindField& w, const GeodesicPath& eta) {
  const ModelSpace& space = w.space();
  CurvatureReport r;
  r.max_curvature = -std::numeric_limits<double>::infinity();
  for (const PathSample& s : eta.samples) {
    const Tangent wx = w.eval(s.x);
    const double ww = space.norm_squared(s.x, wx), vv = space.norm_squared(s.x, s.v);
    const double wv = space.inner(s.x, wx, s.v);
    if (ww * vv - wv * wv <= 1e-10 * std::max(ww * vv, 1e-300)) {
      ++r.skipped;
      r.skipped_at.push_back(s.t);
      continue;
    }
    r.max_curvature = std::max(r.max_curvature, space.sectional_curvature(s.x, s.v, wx));
  }
  r.nonpositive = !(r.max_curvature > 1e-6);
  return r;
}

}  // namespace zermelo
