// SPDX-License-Identifier: Apache-2.0
//
// Optical-slab physics for the permittivity 1 + (z0 + z1 e^{i alpha y}) on
// 0 <= x <= a: closed-form first-order amplitudes, the grazing-angle
// resonance near k = N alpha, and spectral-singularity (lasing) thresholds.

#pragma once

#include <optional>

#include "modslab/core.hpp"
#include "modslab/scatter.hpp"
#include "modslab/transfer1d.hpp"

namespace modslab {

/// How the unmodulated part of the slab acts on channel p.
///
/// kIndexScaled: every channel sees the homogeneous index n at its own
/// longitudinal wavenumber (interior wavenumber omega(p) n). This is the
/// model behind the slab closed forms (F0/G0 at omega(p), F1, t1).
///
/// kHelmholtz: every channel sees the fixed potential -k^2 z0 (interior
/// wavenumber sqrt(k^2 n^2 - p^2)), the literal two-dimensional Helmholtz
/// equation. It does not reproduce the closed forms for p != 0.
enum class ChannelModel { kIndexScaled, kHelmholtz };

/// v0 and v1 of the slab as a PotentialProfile; v1 = -k^2 z1 in both models.
[[nodiscard]] PotentialProfile slab_profile(const SlabMaterial& material, const WaveParameters& wp,
                                            ChannelModel model = ChannelModel::kIndexScaled);

struct FirstOrderAmplitudes {
  Complex t_minus;
  Complex t_plus;
};

/// t_1^+- = z1 k^3 A^+- / (n^2 alpha^2 w1 B) for alpha < k < 2 alpha.
[[nodiscard]] FirstOrderAmplitudes closed_form_t1(const SlabMaterial& material,
                                                  const WaveParameters& wp);

struct ResonanceAsymptotic {
  Complex t1;                  // shared leading term of t_1^+ and t_1^-
  double delta_theta;          // sqrt(2 dk / alpha)
  double theta_plus_deg;       // arcsin(alpha / k)
  double theta_minus_deg;      // 180 - theta_plus_deg
  double theta_plus_approx_deg;   // 90 - delta_theta
  double theta_minus_approx_deg;  // 90 + delta_theta
};

/// t_1 ~ -z1 / ( n [n + i cot(a alpha n / 2)] dtheta ) for k = alpha + dk.
[[nodiscard]] ResonanceAsymptotic resonance_asymptotic(const SlabMaterial& material, double alpha,
                                                       double a, double delta_k,
                                                       const Tolerances& tol = {});

struct NormalizedAmplitude {
  Complex t_hat_minus;
  Complex t_hat_plus;
};

/// t_hat_n^+- = t_n^+- omega_n / (z1^n alpha) from the full pipeline.
[[nodiscard]] NormalizedAmplitude resonance_scaling_check(
    const SlabMaterial& material, const WaveParameters& wp, int n,
    ChannelModel model = ChannelModel::kIndexScaled);

struct SlabGeometry {
  double alpha;  // rad/um
  double a;      // um
};

struct LasingRoot {
  double k;          // rad/um
  double im_index;   // Im(n) at threshold, negative for gain
  double gain;       // -2 k Im(n), 1/um
  double residual;   // |M22^(0)(n alpha)| at the root
  int iterations;
};

struct LasingSolution {
  int m;
  int n;
  double q;           // m / n
  double g_star;      // 1/um
  double k_star;      // rad/um
  double theta_plus;  // rad
  // Regime ratios: |Im n| / (eta - 1) and (eta - 1) / (a k*); both small
  // where the approximate formulas apply.
  double im_ratio;
  double slab_ratio;
  std::optional<LasingRoot> exact;
};

/// Threshold gain, lasing wavenumber and emission angle of mode (m, n).
[[nodiscard]] LasingSolution lasing_threshold_approx(double eta, const SlabGeometry& geom, int m,
                                                     int n);

struct NewtonOptions {
  double residual_tol = 1e-10;
  int max_iterations = 100;
  double fd_step_rel = 1e-7;
};

/// |M22^(0)(n alpha)| = |F0(a, -omega_n)| for index eta + i im_index.
[[nodiscard]] Complex lasing_residual(double eta, const SlabGeometry& geom, int n, double k,
                                      double im_index);

/// Solves M22^(0)(n alpha) = 0 for (k, Im n) by damped Newton iteration.
/// Throws NoConvergence or PassiveSlab.
[[nodiscard]] LasingRoot lasing_threshold_exact(double eta, const SlabGeometry& geom, int n,
                                                double k_guess, double im_index_guess,
                                                const NewtonOptions& opts = {});

}  // namespace modslab
