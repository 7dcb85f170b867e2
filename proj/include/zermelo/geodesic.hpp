#pragma once

#include <vector>

#include "zermelo/randers.hpp"

namespace zermelo {

struct PathSample {
  double t;
  Point x;
  Tangent v;
};

/// A sampled curve together with the method that produced it.
struct GeodesicPath {
  enum class Method { DirectODE, FlowComposed, RiemannianBase };

  std::vector<PathSample> samples;
  Method method = Method::DirectODE;
  double f_speed = 1.0;

  double duration() const { return samples.empty() ? 0.0 : samples.back().t - samples.front().t; }
  const PathSample& front() const { return samples.front(); }
  const PathSample& back() const { return samples.back(); }
};

const char* method_name(GeodesicPath::Method m);

/// Wind tensors at a point, all with lower indices:
/// L_ij = W_{i:j} + W_{j:i}, C_ij = W_{i:j} - W_{j:i}, S_i = W^s L_si, T_i = W^s C_si.
struct ZetaTensors {
  Matrix L;
  Matrix C;
  Eigen::VectorXd S;
  Eigen::VectorXd T;
};

/// Covariant derivative W_{i:j} = W_{i,j} - W_s gamma^s_ij as the matrix M(i, j).
/// On the sphere it is the tangential part P (dW) P of the ambient derivative.
Matrix covariant_jacobian(const WindField& w, const Point& x);

ZetaTensors zeta_tensors(const WindField& w, const Point& x);

/// Correction zeta^i with G^i = Ghat^i + zeta^i:
///
///   zeta = 1/4 (y/F - W)(2F S_0 - L_00 - F^2 L_WW) - 1/4 F^2 (S + T) - 1/2 F C_0,
///
/// indices raised with h^{-1}.
Tangent zeta(const RandersMetric& rd, const Point& x, const Tangent& y);

/// Full spray G = Ghat + zeta in representation coordinates.
Tangent randers_spray(const RandersMetric& rd, const Point& x, const Tangent& y);

struct DirectOptions {
  double tol = 1e-10;
  int samples = 512;
};

/// Integrates P'' + 2 Ghat + 2 zeta = 0 from (x0, y0 / F(x0, y0)) over [0, T],
/// returning samples on a uniform grid of `samples` intervals.
GeodesicPath integrate_direct(const RandersMetric& rd, const Point& x0, const Tangent& y0, double T,
                              const DirectOptions& opt = {});

enum class Orientation { Forward, Reverse };

/// Time change t -> (2/sigma)(1 - e^{-sigma t/2}) (identity when sigma = 0)
/// taking the Randers parameter to h-arc length of the base geodesic.
double base_arc_length(double sigma, double t);
/// Inverse of base_arc_length; throws DomainError when sigma s >= 2.
double randers_time(double sigma, double s);

/// Geodesic through x0 with F(x0, y0) = 1 built as P(t) = phi(t, rho(t)), where
/// rho is the h-geodesic with rho(0) = x0, rho'(0) = +-(y0 - W(x0)) and speed
/// profile |rho'|^2 = e^{-sigma t}. Reverse orientation gives the companion
/// phi(t, rho(-t)). Samples on a uniform grid of `samples` intervals.
GeodesicPath flow_compose(const RandersMetric& rd, const Point& x0, const Tangent& y0, double T, int samples = 512,
                          Orientation orientation = Orientation::Forward);

/// Same construction without the homothety requirement (sigma taken as 0).
/// Used to exhibit the failure of the composition for general winds.
GeodesicPath flow_compose_unchecked(const RandersMetric& rd, const Point& x0, const Tangent& y0, double T,
                                    int samples = 512, Orientation orientation = Orientation::Forward);

/// Point and velocity of the flow-composed geodesic at a single time.
PathSample flow_composed_state(const RandersMetric& rd, const Point& x0, const Tangent& base_velocity, double t);

/// The base curve rho(t) = phi(-t, P(t)) of a flow-composed path.
GeodesicPath recover_base(const RandersMetric& rd, const GeodesicPath& path);

/// Samples of the Riemannian geodesic exp_x(t v), t in [0, length], with the
/// velocity carried along; method RiemannianBase.
GeodesicPath riemannian_geodesic(const ModelSpace& space, const Point& x, const Tangent& v, double length,
                                 int samples = 512);

/// Max over the grid of d_h between the direct and the flow-composed geodesic.
double cross_validate(const RandersMetric& rd, const Point& x0, const Tangent& y0, double T, int steps = 512);

/// Flag curvature K(x, y, v) from finite differences of G = Ghat + zeta in a
/// local chart (steps 1e-3 and 5e-4, Richardson extrapolated).
double flag_curvature(const RandersMetric& rd, const Point& x, const Tangent& y, const Tangent& v);

/// Largest |F(x(t), v(t)) - f_speed| over the samples.
double speed_drift(const RandersMetric& rd, const GeodesicPath& path);

}  // namespace zermelo
