#pragma once

// Thin wrapper around boost::odeint's controlled Fehlberg 7(8) pair that stops
// exactly on a prescribed output grid and lets the caller re-project the state
// after every accepted step.

#include <cmath>
#include <functional>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "zermelo/types.hpp"

namespace zermelo::detail {

using OdeState = std::vector<double>;
using OdeRhs = std::function<void(const OdeState&, OdeState&, double)>;
using StepHook = std::function<void(OdeState&, double)>;

struct OdeOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  double initial_step = 1e-2;
  double min_step = 1e-13;
  long max_steps = 2'000'000;
};

/// Integrates from times.front() and returns the state at every grid time.
/// times must be ascending; result[0] is x0 itself.
inline std::vector<OdeState> integrate_grid(const OdeRhs& rhs, OdeState x, const std::vector<double>& times,
                                            const OdeOptions& opt = {}, const StepHook& hook = {}) {
  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_controlled(opt.abs_tol, opt.rel_tol, odeint::runge_kutta_fehlberg78<OdeState>());

  std::vector<OdeState> out;
  out.reserve(times.size());
  if (times.empty()) return out;
  out.push_back(x);

  double t = times.front();
  double dt = opt.initial_step;
  long steps = 0;
  for (std::size_t k = 1; k < times.size(); ++k) {
    const double target = times[k];
    while (target - t > 1e-15 * std::max(1.0, std::abs(target))) {
      const double proposed = dt;
      const bool clamped = t + dt > target;
      double step = clamped ? target - t : dt;
      const auto res = stepper.try_step(rhs, x, t, step);
      if (res == odeint::success) {
        if (hook) hook(x, t);
        dt = clamped ? std::max(proposed, step) : step;
        if (++steps > opt.max_steps) throw NumericalError("integrator exceeded its step budget");
      } else {
        dt = step;
        if (dt < opt.min_step) throw NumericalError("integrator step size collapsed");
      }
    }
    t = target;
    out.push_back(x);
  }
  return out;
}

}  // namespace zermelo::detail
