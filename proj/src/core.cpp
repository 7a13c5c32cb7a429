// SPDX-License-Identifier: Apache-2.0

#include "modslab/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace modslab {

double wavenumber_from_nm(double lambda_nm) {
  if (!(lambda_nm > 0.0)) throw DomainError("wavelength must be positive");
  return 2.0 * kPi / (lambda_nm * 1e-3);
}

double wavelength_nm(double wavenumber) {
  if (!(wavenumber > 0.0)) throw DomainError("wavenumber must be positive");
  return 2.0 * kPi / wavenumber * 1e3;
}

WaveParameters::WaveParameters(double k, double alpha, double a, const Tolerances& tol)
    : k_(k), alpha_(alpha), a_(a), tol_(tol), channels_(0) {
  if (!(k > 0.0) || !(alpha > 0.0) || !(a > 0.0) || !std::isfinite(k) ||
      !std::isfinite(alpha) || !std::isfinite(a)) {
    throw DomainError("wave parameters require finite k > 0, alpha > 0, a > 0");
  }
  const double ratio = k / alpha;
  channels_ = static_cast<int>(std::floor(ratio));

  // Offsets equal to eps_channel up to rounding are admitted.
  const double eps = tol.channel_rel * alpha;
  const auto nearest = static_cast<int>(std::lround(ratio));
  if (nearest >= 1) {
    const double offset = std::abs(k - nearest * alpha);
    if (offset < eps * (1.0 - 1e-9)) throw GrazingDegeneracy(nearest, offset);
  }
}

WaveParameters WaveParameters::from_nm(double lambda_nm, double lambda_alpha_nm, double a_um,
                                       const Tolerances& tol) {
  return WaveParameters(wavenumber_from_nm(lambda_nm), wavenumber_from_nm(lambda_alpha_nm),
                        a_um, tol);
}

double WaveParameters::omega(int n) const {
  if (n < 0 || n > channels_) {
    throw DomainError("channel " + std::to_string(n) + " is outside 0.." +
                      std::to_string(channels_));
  }
  const double p = n * alpha_;
  return std::sqrt((k_ - p) * (k_ + p));
}

double WaveParameters::omega_at(double p) const {
  if (!(std::abs(p) < k_)) throw DomainError("omega(p) is not real for |p| >= k");
  return std::sqrt((k_ - p) * (k_ + p));
}

double WaveParameters::theta_plus(int n) const {
  if (n < 0 || n > channels_) throw DomainError("channel outside the retained range");
  return std::asin(n * alpha_ / k_);
}

int channel_count(const WaveParameters& wp) { return wp.channel_count(); }

double omega(const WaveParameters& wp, int n) { return wp.omega(n); }

namespace {

void check_partition(double a, const std::vector<Segment>& segs, const char* name) {
  if (segs.empty()) throw DomainError(std::string(name) + ": no segments");
  if (segs.front().x_lo != 0.0) throw DomainError(std::string(name) + ": must start at x = 0");
  if (segs.back().x_hi != a) throw DomainError(std::string(name) + ": must end at x = a");
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    if (!(s.x_lo < s.x_hi)) throw DomainError(std::string(name) + ": empty or reversed segment");
    if (i > 0 && segs[i - 1].x_hi != s.x_lo) {
      throw DomainError(std::string(name) + ": segments leave a gap or overlap");
    }
    if (!std::isfinite(std::abs(s.value)) || !std::isfinite(std::abs(s.susceptibility))) {
      throw DomainError(std::string(name) + ": non-finite segment value");
    }
  }
}

const Segment* find_segment(std::span<const Segment> segs, double x, double a) {
  if (x < 0.0 || x > a) return nullptr;
  auto it = std::upper_bound(segs.begin(), segs.end(), x,
                             [](double v, const Segment& s) { return v < s.x_hi; });
  if (it == segs.end()) return &segs.back();
  return &*it;
}

}  // namespace

PotentialProfile::PotentialProfile(double a, std::vector<Segment> v0, std::vector<Segment> v1)
    : a_(a), v0_(std::move(v0)), v1_(std::move(v1)) {
  if (!(a > 0.0)) throw DomainError("profile thickness must be positive");
  check_partition(a_, v0_, "v0");
  check_partition(a_, v1_, "v1");
  for (const auto& s : v1_) {
    if (s.susceptibility != Complex{}) {
      throw DomainError("v1: the modulation term cannot carry a susceptibility");
    }
  }
}

PotentialProfile PotentialProfile::uniform(double a, Complex v0, Complex v1, Complex chi0) {
  return PotentialProfile(a, {Segment{0.0, a, v0, chi0}}, {Segment{0.0, a, v1, {}}});
}

Complex PotentialProfile::v0_at(double x, double omega) const {
  const Segment* s = find_segment(v0_, x, a_);
  return s ? s->potential(omega) : Complex{};
}

Complex PotentialProfile::v1_at(double x) const {
  const Segment* s = find_segment(v1_, x, a_);
  return s ? s->value : Complex{};
}

std::vector<double> PotentialProfile::breakpoints() const {
  std::vector<double> pts;
  pts.reserve(2 * (v0_.size() + v1_.size()));
  for (const auto* list : {&v0_, &v1_}) {
    for (const auto& s : *list) {
      pts.push_back(s.x_lo);
      pts.push_back(s.x_hi);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

bool PotentialProfile::v1_vanishes() const {
  return std::all_of(v1_.begin(), v1_.end(), [](const Segment& s) { return s.value == Complex{}; });
}

PotentialProfile PotentialProfile::scaled_v1(Complex c) const {
  auto v1 = v1_;
  for (auto& s : v1) s.value *= c;
  return PotentialProfile(a_, v0_, std::move(v1));
}

TransferMatrix TransferMatrix::inverse() const {
  const Complex d = det();
  if (d == Complex{}) throw DomainError("singular transfer matrix");
  return {m22 / d, -m12 / d, -m21 / d, m11 / d};
}

bool TransferMatrix::finite() const {
  for (const Complex& z : {m11, m12, m21, m22}) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double TransferMatrix::max_abs() const {
  return std::max({std::abs(m11), std::abs(m12), std::abs(m21), std::abs(m22)});
}

double max_rel_diff(const TransferMatrix& a, const TransferMatrix& b) {
  auto rel = [](Complex x, Complex y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); };
  return std::max({rel(a.m11, b.m11), rel(a.m12, b.m12), rel(a.m21, b.m21), rel(a.m22, b.m22)});
}

ChannelComb::ChannelComb(double alpha, std::vector<Entry> entries)
    : alpha_(alpha), entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].n < 0) throw DomainError("comb index must be non-negative");
    if (i > 0 && entries_[i].n <= entries_[i - 1].n) {
      throw DomainError("comb indices must be strictly increasing");
    }
  }
}

}  // namespace modslab
