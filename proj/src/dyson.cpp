// SPDX-License-Identifier: Apache-2.0

#include "modslab/dyson.hpp"

#include <cmath>
#include <string>

#include "linear_ode.hpp"

namespace modslab {

namespace {

constexpr Complex kI{0.0, 1.0};

// (v / 2w) e^{-i w x s3} K e^{i w' x s3}
TransferMatrix coupling_block(Complex v, double w, double w_src, double x) {
  const Complex scale = v / (2.0 * w);
  const Complex e = std::exp(-kI * (w * x));
  const Complex e_src = std::exp(kI * (w_src * x));
  return {scale * e * e_src, scale * e / e_src, -scale * e_src / e, -scale / (e * e_src)};
}

void check_thickness(const PotentialProfile& profile, const WaveParameters& wp) {
  if (std::abs(profile.thickness() - wp.a()) > 1e-12 * wp.a()) {
    throw DomainError("profile thickness does not match the wave parameters");
  }
}

}  // namespace

TransferMatrix effective_hamiltonian_term(const PotentialProfile& profile, const WaveParameters& wp,
                                          double x, double p, int j) {
  if (j != 0 && j != 1) throw DomainError("effective_hamiltonian_term: j must be 0 or 1");
  const double w = wp.omega_at(p);
  const double w_src = wp.omega_at(p - j * wp.alpha());
  const Complex v = j == 0 ? profile.v0_at(x, w) : profile.v1_at(x);
  if (v == Complex{}) return TransferMatrix::zero();
  return coupling_block(v, w, w_src, x);
}

LatticePropagator::LatticePropagator(int top, std::vector<TransferMatrix> blocks)
    : top_(top), blocks_(std::move(blocks)) {
  if (top < 0 || blocks_.size() != static_cast<std::size_t>((top + 1) * (top + 1))) {
    throw DomainError("lattice propagator: block count does not match size");
  }
}

const TransferMatrix& LatticePropagator::block(int row, int col) const {
  if (row < 0 || col < 0 || row > top_ || col > top_) {
    throw DomainError("lattice propagator: block index out of range");
  }
  return blocks_[static_cast<std::size_t>(row * (top_ + 1) + col)];
}

ChannelMatrixSet LatticePropagator::row_set(int ell) const {
  ChannelMatrixSet set{ell, {}};
  set.matrices.reserve(static_cast<std::size_t>(ell + 1));
  for (int m = 0; m <= ell; ++m) set.matrices.push_back(block(ell, ell - m));
  return set;
}

LatticePropagator propagate_lattice(const PotentialProfile& profile, const WaveParameters& wp,
                                    int top) {
  check_thickness(profile, wp);
  if (top < 0 || top > wp.channel_count()) {
    throw DomainError("lattice top site " + std::to_string(top) + " outside 0..N(k)");
  }
  const int sites = top + 1;
  const int dim = 2 * sites;
  std::vector<double> w(static_cast<std::size_t>(sites));
  for (int m = 0; m < sites; ++m) w[m] = wp.omega(m);

  // Column-major dim x dim state, U(0) = I.
  detail::State u(static_cast<std::size_t>(dim * dim), Complex{});
  for (int i = 0; i < dim; ++i) u[static_cast<std::size_t>(i * dim + i)] = 1.0;

  std::vector<TransferMatrix> diag(static_cast<std::size_t>(sites));
  std::vector<TransferMatrix> sub(static_cast<std::size_t>(sites));
  auto rhs = [&](const detail::State& y, detail::State& dy, double x, double probe) {
    const Complex v1 = profile.v1_at(probe);
    for (int m = 0; m < sites; ++m) {
      diag[m] = coupling_block(profile.v0_at(probe, w[m]), w[m], w[m], x);
      sub[m] = m > 0 && v1 != Complex{} ? coupling_block(v1, w[m], w[m - 1], x)
                                        : TransferMatrix::zero();
    }
    for (int c = 0; c < dim; ++c) {
      const Complex* col = &y[static_cast<std::size_t>(c * dim)];
      Complex* out = &dy[static_cast<std::size_t>(c * dim)];
      // Sites below the source are never populated.
      for (int m = 0; m < sites; ++m) {
        const Complex a0 = col[2 * m], b0 = col[2 * m + 1];
        Complex ra = diag[m].m11 * a0 + diag[m].m12 * b0;
        Complex rb = diag[m].m21 * a0 + diag[m].m22 * b0;
        if (m > 0) {
          const Complex a1 = col[2 * m - 2], b1 = col[2 * m - 1];
          ra += sub[m].m11 * a1 + sub[m].m12 * b1;
          rb += sub[m].m21 * a1 + sub[m].m22 * b1;
        }
        out[2 * m] = -kI * ra;
        out[2 * m + 1] = -kI * rb;
      }
    }
  };

  const auto& tol = wp.tolerances();
  const auto breaks = profile.breakpoints();
  detail::OdeOptions ode{tol.ode_abs, tol.ode_rel};
  // Couplings oscillate as e^{i(w_m + w_src) x}, at most 2k.
  ode.max_step = 0.5 / wp.k();
  detail::integrate_piecewise(rhs, u, breaks, 0.0, wp.a(), ode);

  std::vector<TransferMatrix> blocks(static_cast<std::size_t>(sites * sites));
  for (int r = 0; r < sites; ++r) {
    for (int c = 0; c < sites; ++c) {
      auto at = [&](int i, int j) { return u[static_cast<std::size_t>(j * dim + i)]; };
      blocks[static_cast<std::size_t>(r * sites + c)] = {at(2 * r, 2 * c), at(2 * r, 2 * c + 1),
                                                          at(2 * r + 1, 2 * c),
                                                          at(2 * r + 1, 2 * c + 1)};
    }
  }
  return LatticePropagator(top, std::move(blocks));
}

ChannelMatrixSet channel_matrices(const PotentialProfile& profile, const WaveParameters& wp,
                                  int ell) {
  return propagate_lattice(profile, wp, ell).row_set(ell);
}

std::vector<ChannelMatrixSet> all_channel_matrices(const PotentialProfile& profile,
                                                   const WaveParameters& wp) {
  const int top = wp.channel_count();
  const LatticePropagator prop = propagate_lattice(profile, wp, top);
  std::vector<ChannelMatrixSet> sets;
  sets.reserve(static_cast<std::size_t>(top + 1));
  for (int ell = 0; ell <= top; ++ell) sets.push_back(prop.row_set(ell));
  return sets;
}

Complex closed_form_f1(const SlabMaterial& material, const WaveParameters& wp, double mu,
                       double nu) {
  if (nu == 0.0) throw DomainError("closed_form_f1: nu = 0");
  if (mu * mu == nu * nu) throw DomainError("closed_form_f1: mu = +-nu is not evaluated");
  const double a = wp.a();
  const Complex n = material.index();
  const Complex n2 = n * n;
  const Complex pre =
      material.z1() * (mu * mu) * std::exp(-kI * (a * nu)) / (2.0 * n2 * n * (mu * mu - nu * nu) * nu);
  const Complex body = n * (mu + nu) * (std::cos(a * mu * n) - std::cos(a * nu * n)) +
                       kI * ((mu * n2 + nu) * std::sin(a * mu * n) -
                             (mu + nu * n2) * std::sin(a * nu * n));
  return pre * body;
}

TransferMatrix closed_form_m1(const SlabMaterial& material, const WaveParameters& wp) {
  const double k = wp.k();
  const double w1 = wp.omega(1);
  return {closed_form_f1(material, wp, k, w1), closed_form_f1(material, wp, -k, w1),
          closed_form_f1(material, wp, k, -w1), closed_form_f1(material, wp, -k, -w1)};
}

}  // namespace modslab
