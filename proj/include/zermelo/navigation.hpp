#pragma once

#include <optional>
#include <vector>

#include "zermelo/geodesic.hpp"

namespace zermelo {

/// Time-optimal route from p to q under the wind.
struct NavigationSolution {
  double tau = 0.0;        // optimal travel time
  GeodesicPath base;       // Riemannian geodesic rho from p to q(tau)
  GeodesicPath path;       // P(t) = phi(t, rho(t)), t in [0, tau]
  double residual = 0.0;   // |L(tau) - tau| at termination
  Point target;            // q(tau) = phi(-tau, q)
  Tangent heading;         // unit base velocity rho'(0)
  bool antipodal_tie = false;
};

struct SolveOptions {
  /// Upper end of the bracket search; defaults to pi on the sphere, 2 pi elsewhere.
  std::optional<double> tau_max;
  int march_steps = 1024;
  double gap_tol = 1e-10;
  int samples = 512;
};

/// q(tau) = phi(-tau, q).
Point pre_orbit(const WindField& w, const Point& q, double tau);

/// L(tau) - tau, where L(tau) is the Randers time needed to reach q(tau) along
/// the h-minimizing geodesic under the speed profile |rho'|^2 = e^{-sigma t}:
/// L = d_h when sigma = 0, L = -(2/sigma) ln(1 - sigma d_h / 2) otherwise.
double travel_time_gap(const RandersMetric& rd, const Point& p, const Point& q, double tau);

/// Smallest root tau_o of travel_time_gap in (0, tau_max], located by marching
/// in steps of tau_max / march_steps and then bisecting, together with the
/// composed geodesic from p to q.
NavigationSolution solve(const RandersMetric& rd, const Point& p, const Point& q, const SolveOptions& opt = {});

/// One panel of the pre-orbit construction for a trial time tau: the reverse
/// flow from q to q(tau), the h-geodesic rho from p toward q(tau), and
/// P(t) = phi(t, rho(t)), all on [0, tau].
struct ConstructionPanel {
  double tau = 0.0;
  std::vector<Point> pre_orbit;
  GeodesicPath base;
  GeodesicPath path;
};

/// Panels for tau_- < tau_o < tau_+ with tau_-+ = (1 -+ spread) tau_o; tau_+
/// is pulled toward tau_o while its path leaves the admissible region.
std::vector<ConstructionPanel> construction_panels(const RandersMetric& rd, const Point& p, const Point& q,
                                                   const NavigationSolution& sol, double spread = 0.4,
                                                   int samples = 256);

}  // namespace zermelo
