// SPDX-License-Identifier: Apache-2.0

#include "linear_ode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

namespace modslab::detail {

namespace odeint = boost::numeric::odeint;

namespace {

using Stepper = odeint::runge_kutta_fehlberg78<State>;
using Controlled = odeint::controlled_runge_kutta<Stepper>;

struct Integrator {
  const Rhs& f;
  Controlled stepper;
  const OdeOptions& opts;
  std::size_t steps = 0;

  // Advances y from x0 to x1 exactly; dt carries the last accepted step size.
  void run(State& y, double x0, double x1, double& dt) {
    const double probe = 0.5 * (x0 + x1);
    const double dir = x1 > x0 ? 1.0 : -1.0;
    const double span = std::abs(x1 - x0);
    if (span == 0.0) return;
    const double floor_dt = 1e-15 * std::max(span, 1.0);
    dt = dir * std::min(std::abs(dt), span);
    double x = x0;
    auto system = [this, probe](const State& s, State& d, double t) { f(s, d, t, probe); };
    while (dir * (x1 - x) > 0.0) {
      if (std::abs(dt) > opts.max_step) dt = dir * opts.max_step;
      bool clipped = false;
      const double unclipped = dt;
      if (dir * (x + dt - x1) >= 0.0) {
        dt = x1 - x;
        clipped = true;
      }
      const double before = x;
      const auto res = stepper.try_step(system, y, x, dt);
      if (res == odeint::success) {
        if (clipped) {
          x = x1;
          dt = unclipped;
        }
        if (++steps > opts.max_steps) {
          throw IntegrationFailure("step budget exhausted at x = " + std::to_string(before));
        }
      } else if (std::abs(dt) < floor_dt) {
        throw IntegrationFailure("step size underflow at x = " + std::to_string(x));
      }
      for (const Complex& z : y) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
          throw IntegrationFailure("non-finite state at x = " + std::to_string(x));
        }
      }
    }
  }
};

}  // namespace

void integrate_piecewise(const Rhs& f, State& y, std::span<const double> breakpoints, double from,
                         double to, const OdeOptions& opts, std::span<const double> samples,
                         std::vector<State>* recorded) {
  if (!samples.empty() && recorded == nullptr) {
    throw DomainError("integrate_piecewise: samples requested without output buffer");
  }
  const double dir = to >= from ? 1.0 : -1.0;

  // Stops: interior breakpoints and sample points, in integration order.
  struct Stop {
    double x;
    bool sample;
  };
  std::vector<Stop> stops;
  for (double b : breakpoints) {
    if (dir * (b - from) > 0.0 && dir * (to - b) > 0.0) stops.push_back({b, false});
  }
  for (double s : samples) {
    if (dir * (s - from) < 0.0 || dir * (s - to) > 0.0) {
      throw DomainError("integrate_piecewise: sample outside the integration range");
    }
    stops.push_back({s, true});
  }
  stops.push_back({to, false});
  std::stable_sort(stops.begin(), stops.end(),
                   [dir](const Stop& l, const Stop& r) { return dir * l.x < dir * r.x; });

  Integrator integ{f, Controlled(odeint::default_error_checker<double, odeint::range_algebra,
                                                               odeint::default_operations>(
                                     opts.abs_tol, opts.rel_tol)),
                   opts};
  double dt = std::abs(to - from) / 64.0;
  if (dt == 0.0) dt = 1.0;
  double x = from;
  for (const Stop& s : stops) {
    integ.run(y, x, s.x, dt);
    x = s.x;
    if (s.sample) recorded->push_back(y);
  }
}

}  // namespace modslab::detail
