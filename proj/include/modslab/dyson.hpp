// SPDX-License-Identifier: Apache-2.0
//
// Channel-coupling matrices M_n(p) of the two-dimensional transfer matrix
//
//   M(p) = sum_n M_n(p) S_{n alpha},   M_n(p) = M0(p) Mhat_n(p),
//
// evaluated on the momentum comb p = l*alpha. Rather than summing the
// n-fold time-ordered integrals, the x-ordered exponential is propagated
// directly on the lattice {0, alpha, ..., L alpha}: site m evolves under
// H0(x, m alpha) and is fed from site m-1 through H1(x, m alpha). The block
// (l, l-m) of the resulting propagator is M^(m)(l alpha). Because the shift
// only raises the site index the block lower-triangular structure is exact
// and truncating the lattice at site L loses nothing for rows <= L.
//
// Only rows 0..N(k) are ever needed for a left-incident wave (A_-(p) is
// supported at p = 0), so the N(2k) tail of the operator series is not
// propagated.

#pragma once

#include <vector>

#include "modslab/core.hpp"
#include "modslab/transfer1d.hpp"

namespace modslab {

/// M^(0)(l alpha), ..., M^(l)(l alpha) for one target channel l.
struct ChannelMatrixSet {
  int ell = 0;
  std::vector<TransferMatrix> matrices;  // matrices[m] = M^(m)(l alpha)

  [[nodiscard]] const TransferMatrix& operator[](int m) const { return matrices.at(m); }
};

/// H_j(x, p) = (v_j(x) chi_a(x) / 2 w(p)) e^{-i w(p) x s3} K e^{i w(p - j alpha) x s3},
/// K = s3 + i s2. Throws DomainError if either w is not real.
[[nodiscard]] TransferMatrix effective_hamiltonian_term(const PotentialProfile& profile,
                                                        const WaveParameters& wp, double x,
                                                        double p, int j);

/// Block lower-triangular propagator of the lattice {0, ..., top} alpha.
class LatticePropagator {
 public:
  LatticePropagator(int top, std::vector<TransferMatrix> blocks);

  [[nodiscard]] int top() const noexcept { return top_; }
  /// Block mapping site `col` at x = 0 to site `row` at x = a.
  [[nodiscard]] const TransferMatrix& block(int row, int col) const;
  [[nodiscard]] ChannelMatrixSet row_set(int ell) const;

 private:
  int top_;
  std::vector<TransferMatrix> blocks_;  // row-major (top+1)^2
};

/// Integrates the lattice system up to site `top` (<= N(k)).
[[nodiscard]] LatticePropagator propagate_lattice(const PotentialProfile& profile,
                                                  const WaveParameters& wp, int top);

/// M^(m)(l alpha) for m = 0..l, from a lattice truncated at site l.
[[nodiscard]] ChannelMatrixSet channel_matrices(const PotentialProfile& profile,
                                                const WaveParameters& wp, int ell);

/// Channel sets for l = 0..N(k) from a single lattice propagation.
[[nodiscard]] std::vector<ChannelMatrixSet> all_channel_matrices(const PotentialProfile& profile,
                                                                 const WaveParameters& wp);

/// Closed form of the first-order coupling for a homogeneous slab,
///   F1(mu, nu) = z1 mu^2 e^{-i a nu} / (2 n^3 (mu^2 - nu^2) nu)
///                * { n (mu + nu) [cos(a mu n) - cos(a nu n)]
///                    + i [(mu n^2 + nu) sin(a mu n) - (mu + nu n^2) sin(a nu n)] },
/// so that M^(1)(alpha) = [[F1(k, w1), F1(-k, w1)], [F1(k, -w1), F1(-k, -w1)]].
/// mu = +-nu is a removable singularity and is rejected, as is nu = 0.
[[nodiscard]] Complex closed_form_f1(const SlabMaterial& material, const WaveParameters& wp,
                                     double mu, double nu);

/// The four F1 entries arranged as M^(1)(alpha).
[[nodiscard]] TransferMatrix closed_form_m1(const SlabMaterial& material, const WaveParameters& wp);

}  // namespace modslab
