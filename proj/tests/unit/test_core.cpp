// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "modslab/core.hpp"

using namespace modslab;

TEST_CASE("wavelength conversion round trip") {
  CHECK(wavenumber_from_nm(1000.0) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(wavelength_nm(wavenumber_from_nm(812.5)) == doctest::Approx(812.5).epsilon(1e-14));
  CHECK_THROWS_AS((void)wavenumber_from_nm(0.0), DomainError);
  CHECK_THROWS_AS((void)wavelength_nm(-1.0), DomainError);
}

TEST_CASE("channel count and longitudinal wavenumbers") {
  const double alpha = 2.0 * kPi;
  const WaveParameters wp(2.5 * alpha, alpha, 3.0);
  CHECK(wp.channel_count() == 2);
  CHECK(channel_count(wp) == 2);
  for (int n = 0; n <= 2; ++n) {
    const double w = omega(wp, n);
    CHECK(w > 0.0);
    CHECK(std::abs(w * w + (n * alpha) * (n * alpha) - wp.k() * wp.k()) < 1e-9);
    CHECK(std::sin(wp.theta_plus(n)) == doctest::Approx(n * alpha / wp.k()).epsilon(1e-12));
    CHECK(wp.theta_minus(n) == doctest::Approx(kPi - wp.theta_plus(n)));
  }
  CHECK_THROWS_AS((void)wp.omega(3), DomainError);
  CHECK_THROWS_AS((void)wp.omega(-1), DomainError);
  CHECK_THROWS_AS((void)wp.omega_at(2.6 * alpha), DomainError);

  const WaveParameters below(0.7 * alpha, alpha, 1.0);
  CHECK(below.channel_count() == 0);
  CHECK(below.omega(0) == doctest::Approx(below.k()));
}

TEST_CASE("grazing degeneracy guard") {
  const double alpha = 2.0 * kPi;
  CHECK_THROWS_AS(WaveParameters(alpha * (1.0 + 1e-7), alpha, 1.0), GrazingDegeneracy);
  CHECK_THROWS_AS(WaveParameters(alpha * (2.0 - 1e-8), alpha, 1.0), GrazingDegeneracy);
  try {
    (void)WaveParameters(3.0 * alpha, alpha, 1.0);
    FAIL("expected GrazingDegeneracy");
  } catch (const GrazingDegeneracy& e) {
    CHECK(e.channel() == 3);
    CHECK(e.offset() == doctest::Approx(0.0));
  }
  // Offsets of exactly eps_channel are admitted.
  CHECK_NOTHROW(WaveParameters(alpha * (1.0 + 1e-6), alpha, 1.0));
  Tolerances loose;
  loose.channel_rel = 1e-12;
  CHECK_NOTHROW(WaveParameters(alpha * (1.0 + 1e-10), alpha, 1.0, loose));
  CHECK_THROWS_AS(WaveParameters(-1.0, alpha, 1.0), DomainError);
  CHECK_THROWS_AS(WaveParameters(1.0, alpha, 0.0), DomainError);
}

TEST_CASE("potential profile partition and lookup") {
  const Complex v0a{1.0, 0.5}, v0b{-2.0, 0.0}, v1{0.25, -0.25};
  const PotentialProfile p(3.0, {{0.0, 1.0, v0a, {}}, {1.0, 3.0, v0b, {0.5, 0.0}}},
                           {{0.0, 3.0, v1, {}}});
  CHECK(p.thickness() == 3.0);
  CHECK(p.v0_at(0.0, 2.0) == v0a);
  CHECK(p.v0_at(0.999, 2.0) == v0a);
  // Half-open segments; the right endpoint of the slab belongs to the last.
  CHECK(p.v0_at(1.0, 2.0) == v0b - 0.5 * 4.0);
  CHECK(p.v0_at(3.0, 2.0) == v0b - 0.5 * 4.0);
  CHECK(p.v0_at(-0.1, 2.0) == Complex{});
  CHECK(p.v0_at(3.1, 2.0) == Complex{});
  CHECK(p.v1_at(2.0) == v1);
  CHECK(p.v1_at(4.0) == Complex{});
  CHECK(p.breakpoints() == std::vector<double>{0.0, 1.0, 3.0});
  CHECK_FALSE(p.v1_vanishes());
  CHECK(p.scaled_v1(0.0).v1_vanishes());
  CHECK(p.scaled_v1(2.0).v1_at(1.5) == 2.0 * v1);

  CHECK_THROWS_AS(PotentialProfile(3.0, {{0.0, 1.0, 1.0, {}}, {1.5, 3.0, 1.0, {}}},
                                   {{0.0, 3.0, 0.0, {}}}),
                  DomainError);
  CHECK_THROWS_AS(PotentialProfile(3.0, {{0.0, 2.0, 1.0, {}}}, {{0.0, 3.0, 0.0, {}}}), DomainError);
  CHECK_THROWS_AS(PotentialProfile(3.0, {{0.0, 3.0, 1.0, {}}}, {{0.0, 3.0, 1.0, 0.5}}), DomainError);
  CHECK_THROWS_AS(PotentialProfile(3.0, {}, {{0.0, 3.0, 1.0, {}}}), DomainError);
}

TEST_CASE("segment potential seen by a channel") {
  const Segment s{0.0, 1.0, Complex{2.0, 1.0}, Complex{0.5, 0.0}};
  CHECK(s.potential(2.0) == Complex{0.0, 1.0});
  CHECK(s.potential(0.0) == Complex{2.0, 1.0});
}

TEST_CASE("transfer matrix algebra") {
  const TransferMatrix m{Complex{1.0, 2.0}, Complex{0.5, -1.0}, Complex{0.0, 3.0}, Complex{2.0, 0.0}};
  const TransferMatrix e = m * m.inverse();
  CHECK(max_rel_diff(e, TransferMatrix::identity()) < 1e-15);
  CHECK(TransferMatrix::identity().det() == Complex{1.0});
  CHECK(TransferMatrix::zero().max_abs() == 0.0);
  CHECK_THROWS_AS((void)TransferMatrix::zero().inverse(), DomainError);
  CHECK((m + m - m).m21 == m.m21);
  CHECK((Complex{2.0} * m).m12 == 2.0 * m.m12);
  CHECK(m.finite());
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_FALSE(TransferMatrix{Complex{inf, 0.0}, 0.0, 0.0, 1.0}.finite());
}

TEST_CASE("momentum comb sits exactly on multiples of alpha") {
  const double alpha = 2.0 * kPi / 0.7;
  const ChannelComb comb(alpha, {{0, 1.0}, {1, 0.5}, {3, 0.25}});
  CHECK(comb.location(0) == 0.0);
  CHECK(comb.location(1) == alpha);
  CHECK(comb.location(2) == 3 * alpha);
  CHECK_THROWS_AS(ChannelComb(alpha, {{1, 1.0}, {1, 1.0}}), DomainError);
  CHECK_THROWS_AS(ChannelComb(alpha, {{-1, 1.0}}), DomainError);
}
