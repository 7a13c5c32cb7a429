// SPDX-License-Identifier: Apache-2.0

#include "modslab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "linear_ode.hpp"

namespace modslab {

namespace {

constexpr Complex kI{0.0, 1.0};

// State layout per shot: psi_0..psi_N, then psi'_0..psi'_N.
struct ChannelSystem {
  const PotentialProfile& profile;
  std::vector<double> w;
  int shots;

  [[nodiscard]] int channels() const { return static_cast<int>(w.size()); }

  void operator()(const detail::State& y, detail::State& dy, double /*x*/, double probe) const {
    const int nc = channels();
    const Complex v1 = profile.v1_at(probe);
    for (int s = 0; s < shots; ++s) {
      const Complex* psi = &y[static_cast<std::size_t>(2 * nc * s)];
      const Complex* dpsi = psi + nc;
      Complex* out = &dy[static_cast<std::size_t>(2 * nc * s)];
      for (int n = 0; n < nc; ++n) {
        out[n] = dpsi[n];
        Complex acc = (profile.v0_at(probe, w[n]) - w[n] * w[n]) * psi[n];
        if (n > 0) acc += v1 * psi[n - 1];
        out[nc + n] = acc;
      }
    }
  }
};

struct Matching {
  std::vector<Complex> c;  // weight of shot j
  OracleAmplitudes amplitudes;
  std::vector<Complex> r;
  std::vector<Complex> tt;
};

std::vector<double> channel_wavenumbers(const WaveParameters& wp, int n_max) {
  if (n_max < 0 || n_max > wp.channel_count()) {
    throw DomainError("oracle: n_max = " + std::to_string(n_max) + " outside 0..N(k)");
  }
  std::vector<double> w(static_cast<std::size_t>(n_max + 1));
  for (int n = 0; n <= n_max; ++n) w[n] = wp.omega(n);
  return w;
}

void check_thickness(const PotentialProfile& profile, const WaveParameters& wp) {
  if (std::abs(profile.thickness() - wp.a()) > 1e-12 * wp.a()) {
    throw DomainError("profile thickness does not match the wave parameters");
  }
}

detail::OdeOptions ode_options(const OracleOptions& opts, const WaveParameters& wp) {
  detail::OdeOptions o;
  o.abs_tol = opts.abs_tol;
  o.rel_tol = opts.rel_tol;
  o.max_step = 1.0 / wp.k();
  return o;
}

// Shot j leaves the slab as e^{i w_j (x - a)} in channel j only. Integrating
// all shots back to x = 0 and superposing them so that the left-moving
// content on the left is the unit incident wave fixes the amplitudes.
Matching match(const PotentialProfile& profile, const WaveParameters& wp, int n_max,
               const OracleOptions& opts) {
  check_thickness(profile, wp);
  ChannelSystem sys{profile, channel_wavenumbers(wp, n_max), n_max + 1};
  const int nc = sys.channels();
  const double a = wp.a();

  detail::State y(static_cast<std::size_t>(2 * nc * nc), Complex{});
  for (int j = 0; j < nc; ++j) {
    y[static_cast<std::size_t>(2 * nc * j + j)] = 1.0;
    y[static_cast<std::size_t>(2 * nc * j + nc + j)] = kI * sys.w[j];
  }
  const auto breaks = profile.breakpoints();
  detail::integrate_piecewise(std::cref(sys), y, breaks, a, 0.0, ode_options(opts, wp));

  auto left = [&](int j, int n) {
    const Complex psi = y[static_cast<std::size_t>(2 * nc * j + n)];
    const Complex dpsi = y[static_cast<std::size_t>(2 * nc * j + nc + n)];
    const Complex q = dpsi / (kI * sys.w[n]);
    return std::pair<Complex, Complex>{0.5 * (psi + q), 0.5 * (psi - q)};
  };

  Matching m;
  m.c.assign(static_cast<std::size_t>(nc), Complex{});
  // Shot j has no content below channel j, so the system is lower triangular.
  for (int n = 0; n < nc; ++n) {
    Complex rhs = n == 0 ? Complex{1.0} : Complex{};
    for (int j = 0; j < n; ++j) rhs -= m.c[j] * left(j, n).first;
    const Complex diag = left(n, n).first;
    if (std::abs(diag) < wp.tolerances().num) throw SpectralSingularity(n, std::abs(diag));
    m.c[n] = rhs / diag;
  }
  m.r.assign(static_cast<std::size_t>(nc), Complex{});
  m.tt.assign(static_cast<std::size_t>(nc), Complex{});
  for (int n = 0; n < nc; ++n) {
    for (int j = 0; j <= n; ++j) m.r[n] += m.c[j] * left(j, n).second;
    m.tt[n] = m.c[n] * std::exp(-kI * (sys.w[n] * a));
  }
  m.amplitudes.t_minus = m.r;
  m.amplitudes.t_plus = m.tt;
  m.amplitudes.t_plus[0] -= 1.0;
  return m;
}

double amplitude_change(const OracleAmplitudes& a, const OracleAmplitudes& b) {
  double worst = 0.0;
  auto scan = [&worst](const std::vector<Complex>& u, const std::vector<Complex>& v) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      worst = std::max(worst, std::abs(u[i] - v[i]) / std::max(1.0, std::abs(v[i])));
    }
  };
  scan(a.t_minus, b.t_minus);
  scan(a.t_plus, b.t_plus);
  return worst;
}

}  // namespace

OracleAmplitudes oracle_scatter(const PotentialProfile& profile, const WaveParameters& wp,
                                int n_max, const OracleOptions& opts) {
  return match(profile, wp, n_max, opts).amplitudes;
}

ChannelSolution oracle_solution(const PotentialProfile& profile, const WaveParameters& wp,
                                int n_max, double margin, int points, const OracleOptions& opts) {
  if (points < 2) throw DomainError("oracle_solution: need at least 2 grid points");
  if (!(margin >= 0.0)) throw DomainError("oracle_solution: margin must be >= 0");
  const Matching m = match(profile, wp, n_max, opts);
  const int nc = n_max + 1;
  const double a = wp.a();

  ChannelSolution sol;
  sol.r = m.r;
  sol.tt = m.tt;
  sol.x.resize(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    sol.x[i] = -margin + (a + 2.0 * margin) * i / (points - 1);
  }
  sol.psi.assign(static_cast<std::size_t>(nc),
                 std::vector<Complex>(static_cast<std::size_t>(points)));

  // Interior points, integrated once more from x = a with the matched data.
  std::vector<double> inside;
  std::vector<int> where;
  for (int i = points - 1; i >= 0; --i) {
    if (sol.x[i] >= 0.0 && sol.x[i] <= a) {
      inside.push_back(sol.x[i]);
      where.push_back(i);
    }
  }
  ChannelSystem sys{profile, channel_wavenumbers(wp, n_max), 1};
  detail::State y(static_cast<std::size_t>(2 * nc), Complex{});
  for (int n = 0; n < nc; ++n) {
    y[n] = m.c[n];
    y[nc + n] = kI * sys.w[n] * m.c[n];
  }
  std::vector<detail::State> recorded;
  const auto breaks = profile.breakpoints();
  detail::integrate_piecewise(std::cref(sys), y, breaks, a, 0.0, ode_options(opts, wp),
                              inside, &recorded);
  for (std::size_t s = 0; s < where.size(); ++s) {
    for (int n = 0; n < nc; ++n) sol.psi[n][where[s]] = recorded[s][n];
  }

  for (int i = 0; i < points; ++i) {
    const double x = sol.x[i];
    if (x >= 0.0 && x <= a) continue;
    for (int n = 0; n < nc; ++n) {
      const double w = sys.w[n];
      if (x < 0.0) {
        sol.psi[n][i] = m.r[n] * std::exp(-kI * (w * x));
        if (n == 0) sol.psi[n][i] += std::exp(kI * (w * x));
      } else {
        sol.psi[n][i] = m.tt[n] * std::exp(kI * (w * x));
      }
    }
  }
  return sol;
}

ConvergenceReport source_convergence(const PotentialProfile& profile, const WaveParameters& wp,
                                     double tol) {
  if (!(tol > 0.0)) throw DomainError("source_convergence: tol must be positive");
  constexpr double kFloor = 1e-15;
  const int n_max = wp.channel_count();
  double ode_tol = std::clamp(tol / 10.0, 1e-13, 1e-6);
  OracleAmplitudes prev = oracle_scatter(profile, wp, n_max, {ode_tol, ode_tol});
  ConvergenceReport rep;
  while (ode_tol / 2.0 >= kFloor) {
    ode_tol /= 2.0;
    ++rep.refinements;
    OracleAmplitudes next = oracle_scatter(profile, wp, n_max, {ode_tol, ode_tol});
    rep.last_change = amplitude_change(next, prev);
    prev = std::move(next);
    if (rep.last_change < tol) {
      rep.amplitudes = std::move(prev);
      rep.final_tol = ode_tol;
      return rep;
    }
  }
  throw NoConvergence("oracle amplitudes still moving by " + std::to_string(rep.last_change) +
                      " at integrator tolerance " + std::to_string(ode_tol));
}

}  // namespace modslab
