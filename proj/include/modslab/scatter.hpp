// SPDX-License-Identifier: Apache-2.0
//
// Scattered wave of a left-incident unit plane wave. Reflection and
// transmission are delta combs on p = n alpha,
//
//   T_-(p) = 2 pi sum_n t_n^- delta(p - n alpha),
//   T_+(p) = 2 pi sum_n t_n^+ delta(p - n alpha),   n = 0..N(k),
//
// and the coefficients follow from the channel matrices by forward
// substitution (the shift couples channel n only to lower channels).

#pragma once

#include <array>
#include <span>
#include <vector>

#include "modslab/core.hpp"
#include "modslab/dyson.hpp"

namespace modslab {

struct ScatteringResult {
  double k = 0.0;
  double alpha = 0.0;
  std::vector<Complex> t_minus;
  std::vector<Complex> t_plus;
  std::vector<double> theta_plus;   // arcsin(n alpha / k)
  std::vector<double> theta_minus;  // pi - theta_plus

  [[nodiscard]] int channels() const { return static_cast<int>(t_minus.size()) - 1; }
};

/// t_0^- = -M21^(0)(0)/M22^(0)(0) and
/// t_l^- = -[M21^(l)(l a) + sum_{m=1..l} M22^(m)(l a) t_{l-m}^-] / M22^(0)(l a).
/// Throws SpectralSingularity(l) when |M22^(0)(l alpha)| < tol.num.
[[nodiscard]] std::vector<Complex> solve_t_minus(std::span<const ChannelMatrixSet> cm,
                                                 const WaveParameters& wp);

/// Same coefficients as t^- = sum_{n=0..N} A^n b with the strictly lower
/// triangular A_{nn'} = -M22^(n-n')(n a)/M22^(0)(n a), b_n = -M21^(n)(n a)/M22^(0)(n a).
[[nodiscard]] std::vector<Complex> solve_t_minus_matrix_form(std::span<const ChannelMatrixSet> cm,
                                                             const WaveParameters& wp);

/// Both printed forms of t_0^+: M12 t_0^- + M11 - 1 and 1/M22 - 1.
[[nodiscard]] std::array<Complex, 2> t0_plus_forms(const ChannelMatrixSet& cm0, Complex t0_minus);

/// t_0^+ = 1/M22^(0)(0) - 1 (checked against the other form),
/// t_l^+ = M11^(l)(l a) + sum_{m=0..l} M12^(l-m)(l a) t_m^-.
[[nodiscard]] std::vector<Complex> solve_t_plus(std::span<const ChannelMatrixSet> cm,
                                                std::span<const Complex> t_minus,
                                                const WaveParameters& wp);

/// Assembles t^+-, angles and bookkeeping from precomputed channel matrices.
[[nodiscard]] ScatteringResult scattering_from_channels(std::span<const ChannelMatrixSet> cm,
                                                        const WaveParameters& wp);

/// Full pipeline: lattice propagation followed by the recursions.
[[nodiscard]] ScatteringResult solve_scattering(const PotentialProfile& profile,
                                                const WaveParameters& wp);

/// f(theta) = -i sqrt(2 pi) sum_n [t_n^+ delta(theta - theta_n^+) + t_n^- delta(theta - theta_n^-)]
/// as a list of spikes. Zero weights are dropped, so f = 0 gives empty combs.
struct AngularSpike {
  int n;
  double theta;
  Complex weight;
};

struct ScatteringAmplitude {
  std::vector<AngularSpike> forward;   // theta_n^+ in [0, pi/2]
  std::vector<AngularSpike> backward;  // theta_n^- in [pi/2, pi]
};

[[nodiscard]] ScatteringAmplitude scattering_amplitude(const ScatteringResult& result);

/// T_-(p) and T_+(p) as momentum combs (weights t_n^-, t_n^+).
[[nodiscard]] std::array<ChannelComb, 2> momentum_combs(const ScatteringResult& result);

enum class BeamKind { kIncident, kReflected, kTransmitted };

struct FluxBeam {
  BeamKind kind;
  int n;
  double ex;         // direction cos(theta)
  double ey;         // direction sin(theta)
  double magnitude;  // W/m^2 for E0 in V/m
};

/// Time-averaged Poynting flux of a TE wave, channel by channel:
/// incident |E0|^2/(2 mu0 c) along e_0^+, reflected |t_n^-|^2 along e_n^-,
/// transmitted |1 + t_0^+|^2 along e_0^+ and |t_n^+|^2 along e_n^+, all
/// scaled by |E0|^2/(2 mu0 c). Zero-weight scattered beams are omitted.
[[nodiscard]] std::vector<FluxBeam> flux_decomposition(const ScatteringResult& result, Complex e0);

}  // namespace modslab
