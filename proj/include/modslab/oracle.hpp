// SPDX-License-Identifier: Apache-2.0
//
// Independent check on the transfer-matrix pipeline. The ansatz
// psi = sum_n psi_n(x) e^{i n alpha y} reduces the two-dimensional problem to
//
//   psi_n'' + omega_n^2 psi_n = v0 psi_n + v1 psi_{n-1},   0 <= x <= a,
//
// which is integrated directly in the lab frame. Outside the slab every
// channel is a free plane wave, so the boundary conditions are imposed by
// exact matching at x = 0 and x = a. No transfer matrix is formed.

#pragma once

#include <vector>

#include "modslab/core.hpp"

namespace modslab {

struct OracleOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
};

/// t_n^- = r_n and t_n^+ = tt_n - delta_{n0}, n = 0..n_max.
struct OracleAmplitudes {
  std::vector<Complex> t_minus;
  std::vector<Complex> t_plus;
};

/// Scattering of the unit wave e^{ikx} in channel 0. n_max <= N(k).
/// Throws DomainError, IntegrationFailure or SpectralSingularity (the
/// outgoing problem of channel n has no solution).
[[nodiscard]] OracleAmplitudes oracle_scatter(const PotentialProfile& profile,
                                              const WaveParameters& wp, int n_max,
                                              const OracleOptions& opts = {});

/// Field samples of every channel on a uniform grid over [-margin, a + margin].
struct ChannelSolution {
  std::vector<double> x;
  std::vector<std::vector<Complex>> psi;  // psi[n][i] at x[i]
  std::vector<Complex> r;                 // reflected amplitude per channel
  std::vector<Complex> tt;                // transmitted amplitude (tt_0 includes the incident 1)
};

[[nodiscard]] ChannelSolution oracle_solution(const PotentialProfile& profile,
                                              const WaveParameters& wp, int n_max, double margin,
                                              int points, const OracleOptions& opts = {});

struct ConvergenceReport {
  OracleAmplitudes amplitudes;
  double final_tol = 0.0;  // integrator tolerance of the certified pass
  int refinements = 0;     // halvings performed
  double last_change = 0.0;
};

/// Halves the integrator tolerance until all amplitudes move by less than
/// tol (relative to max(1, |t|)). Starts at clamp(tol / 10, 1e-13, 1e-6).
/// Throws NoConvergence when the tolerance floor is reached first.
[[nodiscard]] ConvergenceReport source_convergence(const PotentialProfile& profile,
                                                   const WaveParameters& wp, double tol);

}  // namespace modslab
