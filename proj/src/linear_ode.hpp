// SPDX-License-Identifier: Apache-2.0
//
// Adaptive integration of complex ODE systems over piecewise-smooth
// coefficients. The step sequence restarts at every breakpoint so no step
// straddles a discontinuity of the profile.

#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "modslab/core.hpp"

namespace modslab::detail {

using State = std::vector<Complex>;
// `probe` is the midpoint of the breakpoint interval being integrated; use it
// (not x) to select piecewise-constant coefficients, since Runge-Kutta stages
// are also evaluated at the interval endpoints.
using Rhs = std::function<void(const State& y, State& dydx, double x, double probe)>;

struct OdeOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  std::size_t max_steps = 2'000'000;
  // Upper bound on |dt|. Embedded error estimates can vanish by accident on
  // a long step over a purely oscillatory right-hand side, so callers cap
  // the step at a fraction of the fastest phase period.
  double max_step = std::numeric_limits<double>::infinity();
};

/// Integrates y' = f(y, x) from `from` to `to` (either direction), stopping
/// at each breakpoint that lies strictly between them. If `samples` is
/// non-empty it must be ordered along the direction of integration; the
/// state at each sample point is appended to `recorded`.
void integrate_piecewise(const Rhs& f, State& y, std::span<const double> breakpoints, double from,
                         double to, const OdeOptions& opts, std::span<const double> samples = {},
                         std::vector<State>* recorded = nullptr);

}  // namespace modslab::detail
