// SPDX-License-Identifier: Apache-2.0
//
// Shared slab and profile fixtures.

#pragma once

#include <random>
#include <vector>

#include "modslab/core.hpp"
#include "modslab/transfer1d.hpp"

namespace fixtures {

using modslab::Complex;

// a = 10 um, n = 2.892 + 4.5e-5 i, lambda_alpha = 1000 nm.
inline constexpr double kA = 10.0;
inline constexpr double kLambdaAlpha = 1000.0;
inline const Complex kIndex{2.892, 4.5e-5};

inline modslab::SlabMaterial figure1_material(Complex z1 = 1e-3) {
  return modslab::SlabMaterial::from_index(kIndex, z1);
}

inline modslab::WaveParameters figure1_wave(double lambda_nm, modslab::Tolerances tol = {}) {
  return modslab::WaveParameters::from_nm(lambda_nm, kLambdaAlpha, kA, tol);
}

/// Three unequal constant pieces with complex v0 and v1, no susceptibility.
inline modslab::PotentialProfile three_segment(std::mt19937_64& rng, double a, double v_scale) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double x1 = a * (0.25 + 0.1 * u(rng));
  const double x2 = a * (0.6 + 0.1 * u(rng));
  auto c = [&] { return Complex(v_scale * u(rng), 0.1 * v_scale * u(rng)); };
  std::vector<modslab::Segment> v0 = {{0.0, x1, c(), {}}, {x1, x2, c(), {}}, {x2, a, c(), {}}};
  std::vector<modslab::Segment> v1 = {{0.0, x2, c(), {}}, {x2, a, c(), {}}};
  return modslab::PotentialProfile(a, std::move(v0), std::move(v1));
}

}  // namespace fixtures
