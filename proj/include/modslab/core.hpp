// SPDX-License-Identifier: Apache-2.0
//
// Domain types shared by all modules.
//
// Units: lengths in micrometres, wavenumbers in rad/um, potentials in
// rad^2/um^2. Conversions from nanometre wavelengths live here and nowhere
// else.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "modslab/errors.hpp"

namespace modslab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Wavenumber 2*pi/lambda in rad/um for a wavelength given in nanometres.
[[nodiscard]] double wavenumber_from_nm(double lambda_nm);
/// Inverse of wavenumber_from_nm.
[[nodiscard]] double wavelength_nm(double wavenumber);

struct Tolerances {
  double channel_rel = 1e-6;  // eps_channel in units of alpha
  double det = 1e-10;         // |det M0 - 1| for unimodular matrices
  double num = 1e-9;          // generic identity / vanishing-denominator check
  double ode_abs = 1e-10;
  double ode_rel = 1e-10;
};

/// Incident wavenumber k, modulation wavenumber alpha and slab thickness a.
/// Construction rejects grazing configurations (k within eps_channel of a
/// positive multiple of alpha), so every retained channel has omega_n > 0.
class WaveParameters {
 public:
  WaveParameters(double k, double alpha, double a, const Tolerances& tol = {});

  static WaveParameters from_nm(double lambda_nm, double lambda_alpha_nm, double a_um,
                                const Tolerances& tol = {});

  [[nodiscard]] double k() const noexcept { return k_; }
  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] double a() const noexcept { return a_; }
  [[nodiscard]] const Tolerances& tolerances() const noexcept { return tol_; }

  /// N(k) = floor(k / alpha).
  [[nodiscard]] int channel_count() const noexcept { return channels_; }
  /// omega_n = sqrt(k^2 - (n alpha)^2) for 0 <= n <= N(k).
  [[nodiscard]] double omega(int n) const;
  /// omega(p) = sqrt(k^2 - p^2) for an arbitrary real |p| < k.
  [[nodiscard]] double omega_at(double p) const;
  /// theta_n^+ = arcsin(n alpha / k) in [0, pi/2].
  [[nodiscard]] double theta_plus(int n) const;
  [[nodiscard]] double theta_minus(int n) const { return kPi - theta_plus(n); }

 private:
  double k_;
  double alpha_;
  double a_;
  Tolerances tol_;
  int channels_;
};

[[nodiscard]] int channel_count(const WaveParameters& wp);
[[nodiscard]] double omega(const WaveParameters& wp, int n);

/// One constant piece of a potential on [x_lo, x_hi).
///
/// The potential seen by a channel with longitudinal wavenumber omega is
/// value - susceptibility * omega^2. A fixed Schrodinger potential has zero
/// susceptibility; a medium whose index scales each channel's own
/// wavenumber (omega -> omega * n) has value 0 and susceptibility n^2 - 1.
struct Segment {
  double x_lo = 0.0;
  double x_hi = 0.0;
  Complex value{};
  Complex susceptibility{};

  [[nodiscard]] Complex potential(double omega) const {
    return value - susceptibility * (omega * omega);
  }
};

/// Piecewise-constant v0(x), v1(x) on [0, a], vanishing outside.
class PotentialProfile {
 public:
  /// Throws DomainError unless each list partitions [0, a] exactly.
  PotentialProfile(double a, std::vector<Segment> v0, std::vector<Segment> v1);

  /// Single-segment profile with constant v0 (plus susceptibility) and v1.
  static PotentialProfile uniform(double a, Complex v0, Complex v1, Complex chi0 = {});

  [[nodiscard]] double thickness() const noexcept { return a_; }
  [[nodiscard]] std::span<const Segment> v0() const noexcept { return v0_; }
  [[nodiscard]] std::span<const Segment> v1() const noexcept { return v1_; }

  /// Value at x (segments are half-open, the last one includes a); zero
  /// outside [0, a].
  [[nodiscard]] Complex v0_at(double x, double omega) const;
  [[nodiscard]] Complex v1_at(double x) const;

  /// Sorted union of all segment endpoints, including 0 and a.
  [[nodiscard]] std::vector<double> breakpoints() const;

  [[nodiscard]] bool v1_vanishes() const;

  /// Same profile with v1 multiplied by c.
  [[nodiscard]] PotentialProfile scaled_v1(Complex c) const;

 private:
  double a_;
  std::vector<Segment> v0_;
  std::vector<Segment> v1_;
};

/// 2x2 complex matrix acting on plane-wave coefficients (A, B).
struct TransferMatrix {
  Complex m11{1.0};
  Complex m12{};
  Complex m21{};
  Complex m22{1.0};

  static constexpr TransferMatrix identity() { return {}; }
  static constexpr TransferMatrix zero() { return {0.0, 0.0, 0.0, 0.0}; }

  [[nodiscard]] Complex det() const { return m11 * m22 - m12 * m21; }
  [[nodiscard]] TransferMatrix inverse() const;
  [[nodiscard]] bool finite() const;
  [[nodiscard]] double max_abs() const;

  friend TransferMatrix operator*(const TransferMatrix& l, const TransferMatrix& r) {
    return {l.m11 * r.m11 + l.m12 * r.m21, l.m11 * r.m12 + l.m12 * r.m22,
            l.m21 * r.m11 + l.m22 * r.m21, l.m21 * r.m12 + l.m22 * r.m22};
  }
  friend TransferMatrix operator+(const TransferMatrix& l, const TransferMatrix& r) {
    return {l.m11 + r.m11, l.m12 + r.m12, l.m21 + r.m21, l.m22 + r.m22};
  }
  friend TransferMatrix operator-(const TransferMatrix& l, const TransferMatrix& r) {
    return {l.m11 - r.m11, l.m12 - r.m12, l.m21 - r.m21, l.m22 - r.m22};
  }
  friend TransferMatrix operator*(Complex s, const TransferMatrix& m) {
    return {s * m.m11, s * m.m12, s * m.m21, s * m.m22};
  }
};

/// Largest entrywise |a - b| / max(1, |b|).
[[nodiscard]] double max_rel_diff(const TransferMatrix& a, const TransferMatrix& b);

/// Weights on the momentum comb {n alpha}. Locations are derived from the
/// integer index so they are exact multiples of alpha.
class ChannelComb {
 public:
  struct Entry {
    int n;
    Complex weight;
  };

  ChannelComb(double alpha, std::vector<Entry> entries);

  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] std::span<const Entry> entries() const noexcept { return entries_; }
  [[nodiscard]] double location(std::size_t i) const { return entries_.at(i).n * alpha_; }

 private:
  double alpha_;
  std::vector<Entry> entries_;
};

}  // namespace modslab
