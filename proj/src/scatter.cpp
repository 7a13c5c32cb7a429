// SPDX-License-Identifier: Apache-2.0

#include "modslab/scatter.hpp"

#include <cmath>
#include <string>

namespace modslab {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kMu0 = 1.25663706212e-6;    // N/A^2
constexpr double kLightSpeed = 299792458.0;  // m/s

void check_sets(std::span<const ChannelMatrixSet> cm, const WaveParameters& wp) {
  const auto expected = static_cast<std::size_t>(wp.channel_count() + 1);
  if (cm.size() != expected) {
    throw DomainError("expected channel matrices for l = 0.." +
                      std::to_string(wp.channel_count()));
  }
  for (std::size_t l = 0; l < cm.size(); ++l) {
    if (cm[l].ell != static_cast<int>(l) || cm[l].matrices.size() != l + 1) {
      throw DomainError("channel matrix set " + std::to_string(l) + " is malformed");
    }
  }
}

Complex checked_m22(const ChannelMatrixSet& set, const Tolerances& tol) {
  const Complex m22 = set[0].m22;
  if (std::abs(m22) < tol.num) throw SpectralSingularity(set.ell, std::abs(m22));
  return m22;
}

}  // namespace

std::vector<Complex> solve_t_minus(std::span<const ChannelMatrixSet> cm, const WaveParameters& wp) {
  check_sets(cm, wp);
  std::vector<Complex> t(cm.size());
  for (std::size_t l = 0; l < cm.size(); ++l) {
    const Complex denom = checked_m22(cm[l], wp.tolerances());
    Complex acc = cm[l][static_cast<int>(l)].m21;
    for (std::size_t m = 1; m <= l; ++m) acc += cm[l][static_cast<int>(m)].m22 * t[l - m];
    t[l] = -acc / denom;
  }
  return t;
}

std::vector<Complex> solve_t_minus_matrix_form(std::span<const ChannelMatrixSet> cm,
                                               const WaveParameters& wp) {
  check_sets(cm, wp);
  const std::size_t size = cm.size();
  std::vector<Complex> a(size * size, Complex{});
  std::vector<Complex> b(size);
  for (std::size_t n = 0; n < size; ++n) {
    const Complex denom = checked_m22(cm[n], wp.tolerances());
    b[n] = -cm[n][static_cast<int>(n)].m21 / denom;
    for (std::size_t np = 0; np < n; ++np) {
      a[n * size + np] = -cm[n][static_cast<int>(n - np)].m22 / denom;
    }
  }
  // sum_{j=0..N} A^j b; A is nilpotent so the sum is exact.
  std::vector<Complex> term = b;
  std::vector<Complex> total = b;
  std::vector<Complex> next(size);
  for (std::size_t j = 1; j < size; ++j) {
    for (std::size_t r = 0; r < size; ++r) {
      Complex s{};
      for (std::size_t c = 0; c < r; ++c) s += a[r * size + c] * term[c];
      next[r] = s;
    }
    term.swap(next);
    for (std::size_t r = 0; r < size; ++r) total[r] += term[r];
  }
  return total;
}

std::array<Complex, 2> t0_plus_forms(const ChannelMatrixSet& cm0, Complex t0_minus) {
  const TransferMatrix& m = cm0[0];
  return {m.m12 * t0_minus + m.m11 - 1.0, 1.0 / m.m22 - 1.0};
}

std::vector<Complex> solve_t_plus(std::span<const ChannelMatrixSet> cm,
                                  std::span<const Complex> t_minus, const WaveParameters& wp) {
  check_sets(cm, wp);
  if (t_minus.size() != cm.size()) throw DomainError("t_minus has the wrong length");
  std::vector<Complex> t(cm.size());

  checked_m22(cm[0], wp.tolerances());
  const auto forms = t0_plus_forms(cm[0], t_minus[0]);
  // The two forms differ by (det M0(0) - 1)/M22.
  const double gap = std::abs(forms[0] - forms[1]);
  if (gap > 1e-6 * std::max(1.0, std::abs(forms[1]))) {
    throw DomainError("t0+ forms disagree: M0(0) is not unimodular");
  }
  t[0] = forms[1];

  for (std::size_t l = 1; l < cm.size(); ++l) {
    Complex acc = cm[l][static_cast<int>(l)].m11;
    for (std::size_t m = 0; m <= l; ++m) acc += cm[l][static_cast<int>(l - m)].m12 * t_minus[m];
    t[l] = acc;
  }
  return t;
}

ScatteringResult scattering_from_channels(std::span<const ChannelMatrixSet> cm,
                                          const WaveParameters& wp) {
  ScatteringResult r;
  r.k = wp.k();
  r.alpha = wp.alpha();
  r.t_minus = solve_t_minus(cm, wp);
  r.t_plus = solve_t_plus(cm, r.t_minus, wp);
  for (int n = 0; n <= wp.channel_count(); ++n) {
    r.theta_plus.push_back(wp.theta_plus(n));
    r.theta_minus.push_back(wp.theta_minus(n));
  }
  return r;
}

ScatteringResult solve_scattering(const PotentialProfile& profile, const WaveParameters& wp) {
  const auto cm = all_channel_matrices(profile, wp);
  return scattering_from_channels(cm, wp);
}

ScatteringAmplitude scattering_amplitude(const ScatteringResult& result) {
  if (result.t_plus.size() != result.t_minus.size() ||
      result.theta_plus.size() != result.t_minus.size() ||
      result.theta_minus.size() != result.t_minus.size()) {
    throw DomainError("scattering result has inconsistent lengths");
  }
  const Complex pre = -kI * std::sqrt(2.0 * kPi);
  ScatteringAmplitude f;
  for (std::size_t n = 0; n < result.t_minus.size(); ++n) {
    const int idx = static_cast<int>(n);
    if (result.t_plus[n] != Complex{}) {
      f.forward.push_back({idx, result.theta_plus[n], pre * result.t_plus[n]});
    }
    if (result.t_minus[n] != Complex{}) {
      f.backward.push_back({idx, result.theta_minus[n], pre * result.t_minus[n]});
    }
  }
  return f;
}

std::array<ChannelComb, 2> momentum_combs(const ScatteringResult& result) {
  std::vector<ChannelComb::Entry> minus, plus;
  for (std::size_t n = 0; n < result.t_minus.size(); ++n) {
    minus.push_back({static_cast<int>(n), result.t_minus[n]});
    plus.push_back({static_cast<int>(n), result.t_plus[n]});
  }
  return {ChannelComb(result.alpha, std::move(minus)), ChannelComb(result.alpha, std::move(plus))};
}

std::vector<FluxBeam> flux_decomposition(const ScatteringResult& result, Complex e0) {
  const double unit = std::norm(e0) / (2.0 * kMu0 * kLightSpeed);
  std::vector<FluxBeam> beams;
  beams.push_back({BeamKind::kIncident, 0, 1.0, 0.0, unit});
  for (std::size_t n = 0; n < result.t_minus.size(); ++n) {
    const double w = std::norm(result.t_minus[n]);
    if (w == 0.0) continue;
    const double th = result.theta_minus[n];
    beams.push_back({BeamKind::kReflected, static_cast<int>(n), std::cos(th), std::sin(th), unit * w});
  }
  for (std::size_t n = 0; n < result.t_plus.size(); ++n) {
    const double w = n == 0 ? std::norm(1.0 + result.t_plus[0]) : std::norm(result.t_plus[n]);
    if (w == 0.0) continue;
    const double th = result.theta_plus[n];
    beams.push_back({BeamKind::kTransmitted, static_cast<int>(n), std::cos(th), std::sin(th), unit * w});
  }
  return beams;
}

}  // namespace modslab
