// SPDX-License-Identifier: Apache-2.0

#include "modslab/transfer1d.hpp"

#include <cmath>

namespace modslab {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex positive_branch_sqrt(Complex z) {
  Complex r = std::sqrt(z);
  if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() < 0.0)) r = -r;
  return r;
}

// sin(z d)/z, finite as z -> 0.
Complex sinc_times(Complex z, double d) {
  const Complex zd = z * d;
  if (std::abs(zd) < 1e-4) {
    const Complex zd2 = zd * zd;
    return d * (1.0 - zd2 / 6.0 + zd2 * zd2 / 120.0);
  }
  return std::sin(zd) / z;
}

}  // namespace

SlabMaterial::SlabMaterial(Complex z0, Complex z1, Complex n)
    : z0_(z0), z1_(z1), n_(n), n_plus_((n * n + 1.0) / (2.0 * n)),
      n_minus_((n * n - 1.0) / (2.0 * n)) {}

SlabMaterial SlabMaterial::from_susceptibility(Complex z0, Complex z1) {
  const Complex n = positive_branch_sqrt(1.0 + z0);
  if (!(n.real() > 0.0)) throw DomainError("refractive index must have positive real part");
  return SlabMaterial(z0, z1, n);
}

SlabMaterial SlabMaterial::from_index(Complex index, Complex z1) {
  if (!(index.real() > 0.0)) throw DomainError("refractive index must have positive real part");
  return SlabMaterial(index * index - 1.0, z1, index);
}

Complex slab_f0(const SlabMaterial& m, double x, double w) {
  const Complex phase = x * w * m.index();
  return (std::cos(phase) + kI * m.index_plus() * std::sin(phase)) * std::exp(-kI * (x * w));
}

Complex slab_g0(const SlabMaterial& m, double x, double w) {
  const Complex phase = x * w * m.index();
  return kI * m.index_minus() * std::sin(phase) * std::exp(-kI * (x * w));
}

TransferMatrix slab_transfer(const SlabMaterial& material, const WaveParameters& wp, double x,
                             double omega) {
  if (x < 0.0 || x > wp.a()) throw DomainError("slab_transfer: x outside [0, a]");
  if (!(omega > 0.0)) throw DomainError("slab_transfer: omega must be positive");
  return {slab_f0(material, x, omega), slab_g0(material, x, omega),
          slab_g0(material, x, -omega), slab_f0(material, x, -omega)};
}

TransferMatrix segment_transfer(Complex v, double x0, double x1, double omega) {
  if (!(omega > 0.0)) throw DomainError("segment_transfer: omega must be positive");
  const double d = x1 - x0;
  // Interior wavenumber; either sign gives the same propagator.
  const Complex kappa = std::sqrt(omega * omega - v);
  const Complex c = std::cos(kappa * d);
  const Complex s_over = sinc_times(kappa, d);  // sin(kappa d)/kappa
  const Complex s_times = kappa * kappa * s_over;  // kappa sin(kappa d)

  // (psi, psi') propagator over the piece.
  const Complex p11 = c, p12 = s_over, p21 = -s_times, p22 = c;

  // Phi_w(x) maps (A, B) to (psi, psi'); M = Phi_w(x1)^{-1} P Phi_w(x0).
  const Complex e0 = std::exp(kI * (omega * x0));
  const Complex e1 = std::exp(kI * (omega * x1));
  const Complex iw = kI * omega;
  // Columns of P * Phi_w(x0).
  const Complex a1 = p11 * e0 + p12 * iw * e0;
  const Complex b1 = p21 * e0 + p22 * iw * e0;
  const Complex a2 = p11 / e0 - p12 * iw / e0;
  const Complex b2 = p21 / e0 - p22 * iw / e0;
  // Phi_w(x1)^{-1} = [[e^{-iwx}/2, e^{-iwx}/(2iw)], [e^{iwx}/2, -e^{iwx}/(2iw)]].
  return {(a1 + b1 / iw) / (2.0 * e1), (a2 + b2 / iw) / (2.0 * e1), (a1 - b1 / iw) * e1 / 2.0,
          (a2 - b2 / iw) * e1 / 2.0};
}

TransferMatrix transfer_general(const PotentialProfile& profile, double omega) {
  return transfer_general(profile, omega, profile.thickness());
}

TransferMatrix transfer_general(const PotentialProfile& profile, double omega, double x) {
  if (x < 0.0 || x > profile.thickness()) throw DomainError("transfer_general: x outside [0, a]");
  if (!(omega > 0.0)) throw DomainError("transfer_general: omega must be positive");
  TransferMatrix m = TransferMatrix::identity();
  for (const Segment& s : profile.v0()) {
    if (s.x_lo >= x) break;
    const double hi = std::min(s.x_hi, x);
    m = segment_transfer(s.potential(omega), s.x_lo, hi, omega) * m;
  }
  return m;
}

ReflectionTransmission reflection_transmission(const TransferMatrix& m, const Tolerances& tol) {
  const double mag = std::abs(m.m22);
  if (mag < tol.num) throw SpectralSingularity(0, mag);
  return {-m.m21 / m.m22, 1.0 / m.m22};
}

}  // namespace modslab
