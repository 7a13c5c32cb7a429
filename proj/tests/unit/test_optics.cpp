// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "modslab/optics.hpp"

using namespace modslab;

namespace {

constexpr double kDeg = 180.0 / kPi;

Tolerances fine_channels() {
  Tolerances t;
  t.channel_rel = 1e-12;
  return t;
}

WaveParameters near_threshold(double rel, int n = 1) {
  const double alpha = wavenumber_from_nm(fixtures::kLambdaAlpha);
  return WaveParameters(n * alpha * (1.0 + rel), alpha, fixtures::kA, fine_channels());
}

}  // namespace

TEST_CASE("closed-form t1 basics") {
  const auto wp = fixtures::figure1_wave(850.0);
  const auto zero = closed_form_t1(fixtures::figure1_material(0.0), wp);
  CHECK(zero.t_minus == Complex{});
  CHECK(zero.t_plus == Complex{});
  const auto one = closed_form_t1(fixtures::figure1_material(1.0), wp);
  const auto two = closed_form_t1(fixtures::figure1_material(2.0), wp);
  CHECK(std::abs(two.t_minus - 2.0 * one.t_minus) < 1e-15);
  CHECK_THROWS_AS((void)closed_form_t1(fixtures::figure1_material(), fixtures::figure1_wave(480.0)),
                  DomainError);
  CHECK_THROWS_AS((void)closed_form_t1(fixtures::figure1_material(), fixtures::figure1_wave(1200.0)),
                  DomainError);
}

TEST_CASE("closed-form t1 reference values") {
  // Evaluated independently from the printed A-, A+, B expressions.
  const auto mat = fixtures::figure1_material(1.0);
  const auto at990 = closed_form_t1(mat, fixtures::figure1_wave(990.0));
  CHECK(std::abs(at990.t_minus - Complex(-0.46642072422631614, -0.13022354272333897)) < 1e-12);
  CHECK(std::abs(at990.t_plus - Complex(0.2300853207278059, 0.43362208650187495)) < 1e-12);
  const auto at800 = closed_form_t1(mat, fixtures::figure1_wave(800.0));
  CHECK(std::abs(at800.t_minus - Complex(0.008431965097271779, -0.010316080125893634)) < 1e-13);
  CHECK(std::abs(at800.t_plus - Complex(-0.1066039052038806, -0.3103245998356562)) < 1e-12);
}

TEST_CASE("slab profile models") {
  const auto mat = fixtures::figure1_material(0.1);
  const auto wp = fixtures::figure1_wave(900.0);
  const auto scaled = slab_profile(mat, wp, ChannelModel::kIndexScaled);
  const auto helm = slab_profile(mat, wp, ChannelModel::kHelmholtz);
  const double k = wp.k();
  const double w1 = wp.omega(1);
  CHECK(std::abs(scaled.v0_at(1.0, k) - helm.v0_at(1.0, k)) < 1e-12);
  CHECK(std::abs(scaled.v0_at(1.0, w1) + w1 * w1 * mat.z0()) < 1e-12);
  CHECK(std::abs(helm.v0_at(1.0, w1) + k * k * mat.z0()) < 1e-12);
  CHECK(scaled.v1_at(1.0) == helm.v1_at(1.0));
}

TEST_CASE("resonance asymptotic converges to the exact amplitude") {
  const auto mat = fixtures::figure1_material();
  const double alpha = wavenumber_from_nm(fixtures::kLambdaAlpha);
  double previous = 1e300;
  for (double rel : {1e-2, 1e-6, 1e-8, 1e-10}) {
    const auto wp = near_threshold(rel);
    const auto as = resonance_asymptotic(mat, alpha, fixtures::kA, rel * alpha, fine_channels());
    const auto cf = closed_form_t1(mat, wp);
    const double dev = std::max(std::abs(cf.t_minus / as.t1 - 1.0), std::abs(cf.t_plus / as.t1 - 1.0));
    CHECK(dev < previous);
    previous = dev;
  }
  // The correction is of order a alpha n dtheta; it is below 1% only by 1e-10.
  CHECK(previous < 1e-2);
}

TEST_CASE("resonance asymptotic bookkeeping") {
  const auto mat = fixtures::figure1_material();
  const double alpha = wavenumber_from_nm(fixtures::kLambdaAlpha);
  const double dk = 1e-6 * alpha;
  const auto as = resonance_asymptotic(mat, alpha, fixtures::kA, dk);
  CHECK(as.delta_theta == doctest::Approx(std::sqrt(2e-6)));
  CHECK(std::abs(as.theta_plus_deg - as.theta_plus_approx_deg) < 1e-3 * as.delta_theta * kDeg);
  CHECK(as.theta_minus_deg == doctest::Approx(180.0 - as.theta_plus_deg));
  CHECK(std::abs(as.theta_minus_deg - as.theta_minus_approx_deg) < 1e-3 * as.delta_theta * kDeg);
  const auto doubled = resonance_asymptotic(mat.with_z1(2.0 * mat.z1()), alpha, fixtures::kA, dk);
  CHECK(std::abs(doubled.t1 - 2.0 * as.t1) < 1e-15 * std::abs(as.t1));
  CHECK_THROWS_AS((void)resonance_asymptotic(mat, alpha, fixtures::kA, 1e-9 * alpha), GrazingDegeneracy);
  CHECK_THROWS_AS((void)resonance_asymptotic(mat, alpha, fixtures::kA, -1.0), DomainError);
  // n = 1 and a alpha = 2 pi put the cotangent on a pole.
  CHECK_THROWS_AS((void)resonance_asymptotic(SlabMaterial::from_index(1.0, 0.1), 2.0 * kPi, 1.0, 1e-3),
                  DomainError);
}

TEST_CASE("normalized amplitude has a finite nonzero limit at the threshold") {
  const auto mat = fixtures::figure1_material();
  std::vector<NormalizedAmplitude> ladder;
  for (double rel : {1e-9, 1e-10, 1e-11}) ladder.push_back(resonance_scaling_check(mat, near_threshold(rel), 1));
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    for (std::size_t j = i + 1; j < ladder.size(); ++j) {
      CHECK(std::abs(ladder[i].t_hat_minus / ladder[j].t_hat_minus - 1.0) < 0.02);
      CHECK(std::abs(ladder[i].t_hat_plus / ladder[j].t_hat_plus - 1.0) < 0.02);
    }
  }
  CHECK(std::abs(ladder.back().t_hat_minus) > 1e-2);

  const auto wp = near_threshold(1e-6);
  const auto a = resonance_scaling_check(mat, wp, 1);
  const auto b = resonance_scaling_check(mat.with_z1(2.0 * mat.z1()), wp, 1);
  CHECK(std::abs(a.t_hat_minus - b.t_hat_minus) < 1e-9 * std::abs(a.t_hat_minus));
  CHECK(std::abs(a.t_hat_plus - b.t_hat_plus) < 1e-9 * std::abs(a.t_hat_plus));

  const auto two = resonance_scaling_check(mat.with_z1(0.05), near_threshold(1e-9, 2), 2);
  CHECK(std::isfinite(std::abs(two.t_hat_minus)));
  CHECK(std::abs(two.t_hat_minus) > 0.0);
  CHECK(std::abs(two.t_hat_plus) > 0.0);

  CHECK_THROWS_AS((void)resonance_scaling_check(mat, wp, 2), DomainError);
  CHECK_THROWS_AS((void)resonance_scaling_check(mat.with_z1(0.0), wp, 1), DomainError);
}

TEST_CASE("lasing formulas are internally consistent and depend only on q") {
  const SlabGeometry g{wavenumber_from_nm(1000.0), 10.0};
  const auto s = lasing_threshold_approx(2.892, g, 60, 1);
  CHECK(s.q == 60.0);
  CHECK(std::abs(s.k_star - g.alpha / std::sin(s.theta_plus)) < 1e-12 * s.k_star);
  CHECK(std::sin(s.theta_plus) > 0.0);
  CHECK(std::sin(s.theta_plus) <= 1.0);
  CHECK(s.theta_plus * kDeg == doctest::Approx(43.95).epsilon(1e-4));
  CHECK(s.k_star == doctest::Approx(9.053203161).epsilon(1e-9));
  CHECK(s.g_star == doctest::Approx(0.101851).epsilon(1e-5));
  CHECK(s.slab_ratio < 0.05);

  const auto a = lasing_threshold_approx(2.892, g, 2, 1);
  const auto b = lasing_threshold_approx(2.892, g, 4, 2);
  CHECK(a.theta_plus == b.theta_plus);
  CHECK(a.g_star == b.g_star);
  CHECK(b.k_star == doctest::Approx(2.0 * a.k_star));

  CHECK_THROWS_AS((void)lasing_threshold_approx(1.0, g, 60, 1), DomainError);
  CHECK_THROWS_AS((void)lasing_threshold_approx(2.0, g, 0, 1), DomainError);
}

TEST_CASE("exact spectral singularity") {
  const SlabGeometry g{wavenumber_from_nm(1000.0), 10.0};
  const auto s = lasing_threshold_approx(2.892, g, 60, 1);
  const auto root = lasing_threshold_exact(2.892, g, 1, s.k_star, -s.g_star / (2.0 * s.k_star));
  CHECK(root.residual < 1e-10);
  CHECK(std::abs(lasing_residual(2.892, g, 1, root.k, root.im_index)) < 1e-10);
  CHECK(root.im_index < 0.0);
  CHECK(root.gain == doctest::Approx(-2.0 * root.k * root.im_index));
  CHECK(std::abs(root.k - s.k_star) / root.k < 0.05);
  CHECK_THROWS_AS((void)lasing_threshold_exact(2.892, g, 1, 0.5 * g.alpha, -0.01), DomainError);
  NewtonOptions one_step;
  one_step.max_iterations = 1;
  CHECK_THROWS_AS((void)lasing_threshold_exact(2.892, g, 1, 8.0, -0.05, one_step), NoConvergence);
}

TEST_CASE("one-dimensional limit: the n = 0 root is a 1D spectral singularity") {
  const SlabGeometry g{wavenumber_from_nm(1000.0), 10.0};
  const auto root = lasing_threshold_exact(2.892, g, 0, 9.0, -0.01);
  CHECK(root.residual < 1e-10);
  const auto mat = SlabMaterial::from_index(Complex(2.892, root.im_index), 0.0);
  const WaveParameters wp(root.k, g.alpha, g.a);
  CHECK_THROWS_AS((void)reflection_transmission(slab_transfer(mat, wp, g.a, root.k)),
                  SpectralSingularity);
}

TEST_CASE("a lossy slab has no spectral singularity on the real axis") {
  const auto mat = fixtures::figure1_material(0.0);
  double smallest = 1e300;
  for (int i = 0; i <= 4000; ++i) {
    const double k = 6.0 + 4.0 * i / 4000.0;
    smallest = std::min(smallest, std::abs(slab_f0(mat, fixtures::kA, -k)));
  }
  CHECK(smallest > 1.0);
}
