#include "zermelo/navigation.hpp"

#include <cmath>

namespace zermelo {

Point pre_orbit(const WindField& w, const Point& q, double tau) {
  Point x = w.flow(-tau, q);
  return w.space().project_point(x);
}

double travel_time_gap(const RandersMetric& rd, const Point& p, const Point& q, double tau) {
  const WindField& w = rd.wind();
  const double d = rd.space().distance(p, pre_orbit(w, q, tau));
  return randers_time(w.sigma(), d) - tau;
}

NavigationSolution solve(const RandersMetric& rd, const Point& p, const Point& q, const SolveOptions& opt) {
  const ModelSpace& space = rd.space();
  const WindField& w = rd.wind();
  rd.require_admissible(p);
  rd.require_admissible(q);
  if (!w.is_homothety()) throw InvalidArgument("navigation requires a homothety wind");

  NavigationSolution sol;
  if (space.distance(p, q) == 0.0) {
    sol.target = q;
    sol.heading = Tangent::Zero(p.size());
    return sol;
  }

  const double tau_max = opt.tau_max.value_or(space.kind() == ModelSpace::Kind::Sphere ? M_PI : 2.0 * M_PI);
  const double dtau = tau_max / opt.march_steps;

  // gap(0) = L(0) > 0; march to the first nonpositive value.
  double lo = 0.0, hi = -1.0;
  for (int k = 1; k <= opt.march_steps; ++k) {
    const double tau = k * dtau;
    double g;
    try {
      g = travel_time_gap(rd, p, q, tau);
    } catch (const DomainError&) {
      continue;  // sigma d_h >= 2: q(tau) not reachable, keep marching
    }
    if (g <= 0.0) {
      hi = tau;
      break;
    }
    lo = tau;
  }
  if (hi < 0.0) throw NumericalError("no fixed point in range");

  double gap_hi = travel_time_gap(rd, p, q, hi);
  double tau = hi, gap = gap_hi;
  for (int it = 0; it < 200 && std::abs(gap) >= opt.gap_tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g = travel_time_gap(rd, p, q, mid);
    if (g > 0.0) {
      lo = mid;
    } else {
      hi = mid;
      gap_hi = g;
    }
    tau = mid;
    gap = g;
  }

  sol.tau = tau;
  sol.residual = std::abs(gap);
  sol.target = pre_orbit(w, q, tau);
  const Tangent log = space.log(p, sol.target, &sol.antipodal_tie);
  sol.heading = log / space.norm(p, log);

  const Tangent y0 = w.eval(p) + sol.heading;
  sol.path = flow_compose(rd, p, y0, tau, opt.samples);
  sol.base = recover_base(rd, sol.path);
  return sol;
}

namespace {

ConstructionPanel panel(const RandersMetric& rd, const Point& p, const Point& q, double tau, int samples) {
  const ModelSpace& space = rd.space();
  const WindField& w = rd.wind();
  ConstructionPanel c;
  c.tau = tau;
  for (int j = 0; j <= samples; ++j) c.pre_orbit.push_back(pre_orbit(w, q, tau * j / samples));
  const Tangent log = space.log(p, c.pre_orbit.back());
  const Tangent u = log / space.norm(p, log);
  c.path = flow_compose(rd, p, Tangent(w.eval(p) + u), tau, samples);
  c.base = recover_base(rd, c.path);
  return c;
}

}  // namespace

std::vector<ConstructionPanel> construction_panels(const RandersMetric& rd, const Point& p, const Point& q,
                                                   const NavigationSolution& sol, double spread, int samples) {
  if (!(sol.tau > 0.0)) throw InvalidArgument("construction needs p != q");
  if (!(spread > 0.0 && spread < 1.0)) throw InvalidArgument("spread must lie in (0, 1)");
  std::vector<ConstructionPanel> out;
  out.push_back(panel(rd, p, q, (1.0 - spread) * sol.tau, samples));
  out.push_back(panel(rd, p, q, sol.tau, samples));
  for (double f = spread;; f *= 0.5) {
    try {
      out.push_back(panel(rd, p, q, (1.0 + f) * sol.tau, samples));
      break;
    } catch (const DomainError&) {
      if (f < 1e-3) throw;
    }
  }
  return out;
}

}  // namespace zermelo
