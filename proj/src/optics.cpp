// SPDX-License-Identifier: Apache-2.0

#include "modslab/optics.hpp"

#include <cmath>
#include <string>

namespace modslab {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

PotentialProfile slab_profile(const SlabMaterial& material, const WaveParameters& wp,
                              ChannelModel model) {
  const double k2 = wp.k() * wp.k();
  const Complex v1 = -k2 * material.z1();
  switch (model) {
    case ChannelModel::kIndexScaled:
      return PotentialProfile::uniform(wp.a(), 0.0, v1, material.z0());
    case ChannelModel::kHelmholtz:
      return PotentialProfile::uniform(wp.a(), -k2 * material.z0(), v1);
  }
  throw DomainError("unknown channel model");
}

FirstOrderAmplitudes closed_form_t1(const SlabMaterial& material, const WaveParameters& wp) {
  if (wp.channel_count() != 1) throw DomainError("closed_form_t1 requires alpha < k < 2 alpha");
  const double a = wp.a();
  const double k = wp.k();
  const double alpha = wp.alpha();
  const double w1 = wp.omega(1);
  const double kp = k + w1;
  const double km = k - w1;
  const Complex n = material.index();
  const Complex np = material.index_plus();
  const Complex nm = material.index_minus();

  const Complex a_minus =
      -(km * (1.0 - std::cos(a * kp * n)) +
        kI * (nm * kp * std::sin(a * km * n) + np * km * std::sin(a * kp * n))) /
      k;
  const Complex a_plus =
      std::exp(-kI * (a * w1)) *
      (kp * (std::cos(a * k * n) - std::cos(a * w1 * n)) +
       kI * ((k / n + n * w1) * std::sin(a * w1 * n) - (n * k + w1 / n) * std::sin(a * k * n))) /
      k;
  const Complex b = nm * nm * std::cos(a * km * n) - (np * np + 1.0) * std::cos(a * kp * n) +
                    2.0 * kI * np * std::sin(a * kp * n);
  if (std::abs(b) < wp.tolerances().num) throw SpectralSingularity(1, std::abs(b));

  const Complex pre = material.z1() * (k * k * k) / (n * n * (alpha * alpha) * w1 * b);
  return {pre * a_minus, pre * a_plus};
}

ResonanceAsymptotic resonance_asymptotic(const SlabMaterial& material, double alpha, double a,
                                         double delta_k, const Tolerances& tol) {
  if (!(delta_k > 0.0)) throw DomainError("resonance_asymptotic requires dk > 0");
  const WaveParameters wp(alpha + delta_k, alpha, a, tol);
  const Complex n = material.index();
  const Complex half = a * alpha * n / 2.0;
  const Complex s = std::sin(half);
  if (std::abs(s) < 1e-14) throw DomainError("cot(a alpha n / 2) has a pole");
  const Complex cot = std::cos(half) / s;
  const double dtheta = std::sqrt(2.0 * delta_k / alpha);

  ResonanceAsymptotic r{};
  r.t1 = -material.z1() / (n * (n + kI * cot) * dtheta);
  r.delta_theta = dtheta;
  r.theta_plus_deg = wp.theta_plus(1) * 180.0 / kPi;
  r.theta_minus_deg = 180.0 - r.theta_plus_deg;
  r.theta_plus_approx_deg = 90.0 - dtheta * 180.0 / kPi;
  r.theta_minus_approx_deg = 90.0 + dtheta * 180.0 / kPi;
  return r;
}

NormalizedAmplitude resonance_scaling_check(const SlabMaterial& material, const WaveParameters& wp,
                                            int n, ChannelModel model) {
  if (n < 1 || n > wp.channel_count()) throw DomainError("channel n must satisfy 1 <= n <= N(k)");
  if (material.z1() == Complex{}) throw DomainError("normalization needs z1 != 0");
  const ScatteringResult r = solve_scattering(slab_profile(material, wp, model), wp);
  const Complex scale = wp.omega(n) / (std::pow(material.z1(), n) * wp.alpha());
  return {r.t_minus[static_cast<std::size_t>(n)] * scale,
          r.t_plus[static_cast<std::size_t>(n)] * scale};
}

LasingSolution lasing_threshold_approx(double eta, const SlabGeometry& geom, int m, int n) {
  if (!(eta > 1.0)) throw DomainError("lasing requires eta = Re(n) > 1");
  if (m < 1 || n < 1) throw DomainError("mode numbers m and n must be >= 1");
  if (!(geom.alpha > 0.0) || !(geom.a > 0.0)) throw DomainError("alpha and a must be positive");
  const double a = geom.a;
  const double alpha = geom.alpha;
  const double q = static_cast<double>(m) / n;

  const double x = kPi * q / (eta * alpha * a);
  const double sin_t = 1.0 / std::sqrt(1.0 + x * x);
  const double theta = std::asin(sin_t);
  const double cos_t = std::abs(std::cos(theta));
  const double root = std::sqrt(eta * eta - sin_t * sin_t);
  const double g = 4.0 * root / (eta * a) * std::log((root + cos_t) / std::sqrt(eta * eta - 1.0));
  const double pm = kPi * m / (eta * a);
  const double k_star = std::sqrt(pm * pm + (alpha * n) * (alpha * n));

  LasingSolution s{};
  s.m = m;
  s.n = n;
  s.q = q;
  s.g_star = g;
  s.k_star = k_star;
  s.theta_plus = theta;
  s.im_ratio = (g / (2.0 * k_star)) / (eta - 1.0);
  s.slab_ratio = (eta - 1.0) / (a * k_star);
  return s;
}

Complex lasing_residual(double eta, const SlabGeometry& geom, int n, double k, double im_index) {
  const double p = n * geom.alpha;
  if (!(k > p)) throw DomainError("lasing_residual: omega_n is not real");
  const double w = std::sqrt((k - p) * (k + p));
  const auto mat = SlabMaterial::from_index(Complex(eta, im_index), 0.0);
  return slab_f0(mat, geom.a, -w);
}

LasingRoot lasing_threshold_exact(double eta, const SlabGeometry& geom, int n, double k_guess,
                                  double im_index_guess, const NewtonOptions& opts) {
  if (n < 0) throw DomainError("channel n must be >= 0");
  const double k_floor = n * geom.alpha;
  if (!(k_guess > k_floor)) throw DomainError("initial k must exceed n alpha");

  double k = k_guess;
  double s = im_index_guess;
  auto eval = [&](double kk, double ss) { return lasing_residual(eta, geom, n, kk, ss); };
  Complex f = eval(k, s);

  for (int it = 0; it < opts.max_iterations; ++it) {
    if (std::abs(f) < opts.residual_tol) {
      if (s >= 0.0) {
        throw PassiveSlab("lasing root has Im(n) = " + std::to_string(s) + " >= 0");
      }
      return {k, s, -2.0 * k * s, std::abs(f), it};
    }
    // Central-difference Jacobian of (Re f, Im f) in (k, s).
    const double hk = opts.fd_step_rel * std::max(std::abs(k), 1e-3);
    const double hs = opts.fd_step_rel * std::max(std::abs(s), 1e-3);
    const Complex dk = (eval(k + hk, s) - eval(k - hk, s)) / (2.0 * hk);
    const Complex ds = (eval(k, s + hs) - eval(k, s - hs)) / (2.0 * hs);
    const double j11 = dk.real(), j12 = ds.real(), j21 = dk.imag(), j22 = ds.imag();
    const double det = j11 * j22 - j12 * j21;
    if (det == 0.0 || !std::isfinite(det)) throw NoConvergence("singular Jacobian in lasing search");
    const double step_k = -(j22 * f.real() - j12 * f.imag()) / det;
    const double step_s = -(-j21 * f.real() + j11 * f.imag()) / det;

    double lambda = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving, lambda *= 0.5) {
      const double kn = k + lambda * step_k;
      if (!(kn > k_floor)) continue;
      const Complex fn = eval(kn, s + lambda * step_s);
      if (std::abs(fn) < std::abs(f)) {
        k = kn;
        s += lambda * step_s;
        f = fn;
        accepted = true;
        break;
      }
    }
    if (!accepted) throw NoConvergence("line search stalled at |M22| = " + std::to_string(std::abs(f)));
  }
  if (std::abs(f) < opts.residual_tol && s < 0.0) {
    return {k, s, -2.0 * k * s, std::abs(f), opts.max_iterations};
  }
  throw NoConvergence("no lasing root within " + std::to_string(opts.max_iterations) +
                      " iterations (|M22| = " + std::to_string(std::abs(f)) + ")");
}

}  // namespace modslab
