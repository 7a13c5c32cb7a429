// SPDX-License-Identifier: Apache-2.0
//
// One-dimensional transfer matrices: the closed form for a homogeneous slab
// and products over piecewise-constant profiles. These supply M0(p) for the
// two-dimensional problem through the substitution k -> omega(p).
//
// Convention: a wave A e^{i w x} + B e^{-i w x} on the left maps to
// (A', B') on the right, with phases referenced to x = 0 on both sides.

#pragma once

#include "modslab/core.hpp"

namespace modslab {

/// Optical slab with relative permittivity 1 + (z0 + z1 e^{i alpha y}).
class SlabMaterial {
 public:
  static SlabMaterial from_susceptibility(Complex z0, Complex z1);
  /// z0 = n^2 - 1 for the given refractive index.
  static SlabMaterial from_index(Complex index, Complex z1);

  [[nodiscard]] Complex z0() const noexcept { return z0_; }
  [[nodiscard]] Complex z1() const noexcept { return z1_; }
  /// sqrt(1 + z0) on the branch with positive real part.
  [[nodiscard]] Complex index() const noexcept { return n_; }
  /// (n^2 + 1) / 2n
  [[nodiscard]] Complex index_plus() const noexcept { return n_plus_; }
  /// (n^2 - 1) / 2n
  [[nodiscard]] Complex index_minus() const noexcept { return n_minus_; }

  [[nodiscard]] SlabMaterial with_z1(Complex z1) const { return from_susceptibility(z0_, z1); }

 private:
  SlabMaterial(Complex z0, Complex z1, Complex n);

  Complex z0_;
  Complex z1_;
  Complex n_;
  Complex n_plus_;
  Complex n_minus_;
};

/// F0(x, w) = [cos(x w n) + i n_+ sin(x w n)] e^{-i x w}; w may be negative.
[[nodiscard]] Complex slab_f0(const SlabMaterial& m, double x, double w);
/// G0(x, w) = i n_- sin(x w n) e^{-i x w}.
[[nodiscard]] Complex slab_g0(const SlabMaterial& m, double x, double w);

/// M0(x, p) of a homogeneous slab occupying [0, x]:
/// [[F0(x, w), G0(x, w)], [G0(x, -w), F0(x, -w)]].
[[nodiscard]] TransferMatrix slab_transfer(const SlabMaterial& material, const WaveParameters& wp,
                                           double x, double omega);

/// Transfer matrix of one constant piece with local potential v on [x0, x1]
/// at longitudinal wavenumber omega.
[[nodiscard]] TransferMatrix segment_transfer(Complex v, double x0, double x1, double omega);

/// Product of segment matrices for v0 over [0, a] at wavenumber omega.
[[nodiscard]] TransferMatrix transfer_general(const PotentialProfile& profile, double omega);
/// Same, restricted to [0, x]: M0(x, p).
[[nodiscard]] TransferMatrix transfer_general(const PotentialProfile& profile, double omega,
                                              double x);

struct ReflectionTransmission {
  Complex reflection_left;
  Complex transmission;
};

/// R^l = -M21/M22, T = 1/M22. Throws SpectralSingularity (channel 0) when
/// |M22| < tol.num.
[[nodiscard]] ReflectionTransmission reflection_transmission(const TransferMatrix& m,
                                                             const Tolerances& tol = {});

}  // namespace modslab
