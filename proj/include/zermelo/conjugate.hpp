#pragma once

#include <string>
#include <vector>

#include "zermelo/geodesic.hpp"

namespace zermelo {

/// Zeros s > 0 of the normal Jacobi fields along a unit-speed geodesic of the
/// given length: k pi on the unit sphere, none on the flat or hyperbolic model.
std::vector<double> riem_conjugate_times(const ModelSpace& space, double length);

struct JacobiSample {
  double s;
  Tangent J;   // J(s) = f(s) E(s)
  Tangent DJ;  // covariant derivative f'(s) E(s)
};

/// Normal Jacobi field along the unit-speed geodesic exp_x(s u) with J(0) = 0,
/// DJ(0) = e, where e is h-unit and h-orthogonal to u. Closed forms: f = sin s,
/// s, sinh s for curvature +1, 0, -1, and E the parallel transport of e.
struct JacobiField {
  GeodesicPath base;
  std::vector<JacobiSample> samples;
};

JacobiSample jacobi_at(const ModelSpace& space, const Point& x, const Tangent& u, const Tangent& e, double s);
JacobiField jacobi_field(const ModelSpace& space, const Point& x, const Tangent& u, const Tangent& e, double length,
                         int samples = 512);

/// Jacobi field of a flow-composed F-geodesic: J(t) = dphi_t (Jhat(s(t))),
/// where Jhat is the Jacobi field along the base rho with DJhat(0) = e and
/// s(t) the base arc length.
struct PushedJacobiSample {
  double t;
  Point x;        // P(t)
  Tangent J;      // pushed field at P(t)
  Tangent J_base; // Jhat at rho(t)
};
std::vector<PushedJacobiSample> pushed_jacobi(const RandersMetric& rd, const GeodesicPath& P, const Tangent& e);

struct ConjugatePoint {
  double t;
  Point x;
};

/// Points conjugate to P(0) along P: the base conjugate parameters mapped
/// through the time change, restricted to [0, duration(P)].
std::vector<ConjugatePoint> randers_conjugate_points(const RandersMetric& rd, const GeodesicPath& P);

struct ConvexityReport {
  bool holds = true;
  double bound = 0.0;            // 1/2 sigma^2
  double min_second_derivative;  // min over samples of d2/ds2 |W|^2
};

/// Checks d2/ds2 |W(eta(s))|^2 >= 1/2 sigma^2 - 1e-6 at every sample of a unit
/// speed h-geodesic, with a central difference of step 1e-4 along the geodesic.
ConvexityReport w_norm_convexity(const WindField& w, const GeodesicPath& eta);

/// Thrown when the hypotheses of the minimizer criterion do not hold.
class CriteriaInapplicable : public InvalidArgument {
 public:
  CriteriaInapplicable() : InvalidArgument("criteria inapplicable") {}
};

/// For a flow-composed P on [0, l]: true iff its base rho is an h-minimizer,
/// i.e. h-length(rho) matches d_h(rho(0), rho(l)) within 1e-7. Requires a
/// homothety wind, and for sigma != 0 the convexity inequality.
bool certify_global_minimizer(const RandersMetric& rd, const GeodesicPath& P);

struct CutPoint {
  double ell;
  Point q;
  Point base_cut;  // phi(-ell, q), the Riemannian cut point of p
};

/// Cut point of p along the F-geodesic with initial velocity y0. Only the
/// sphere has a finite Riemannian cut parameter (pi); elsewhere DomainError.
CutPoint cut_point(const RandersMetric& rd, const Point& p, const Tangent& y0);

struct CurvatureReport {
  bool nonpositive = true;
  double max_curvature;        // over the non-degenerate samples
  int skipped = 0;             // samples with W parallel to eta'
  std::vector<double> skipped_at;
};

/// Sectional curvature of span{eta', W} along eta, from finite differences of
/// the Christoffel symbols. Degenerate planes are skipped and reported.
CurvatureReport curvature_sufficiency(const WindField& w, const GeodesicPath& eta);

}  // namespace zermelo
