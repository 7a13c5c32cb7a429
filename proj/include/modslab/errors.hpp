// SPDX-License-Identifier: Apache-2.0
//
// Error hierarchy shared by every modslab module. All failures are reported
// by exception; the numerical variants carry the data a caller needs to
// recover (channel index, offending magnitude).

#pragma once

#include <stdexcept>
#include <string>

namespace modslab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition or input-shape violation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// k lies within eps_channel of n*alpha: channel n propagates at grazing
/// incidence and its amplitudes diverge.
class GrazingDegeneracy : public Error {
 public:
  GrazingDegeneracy(int channel, double offset)
      : Error("grazing degeneracy: |k - n*alpha| = " + std::to_string(offset) +
              " for channel n = " + std::to_string(channel)),
        channel_(channel),
        offset_(offset) {}

  [[nodiscard]] int channel() const noexcept { return channel_; }
  [[nodiscard]] double offset() const noexcept { return offset_; }

 private:
  int channel_;
  double offset_;
};

/// A transfer-matrix entry M22 vanished. This is the lasing condition for
/// gain media and is surfaced rather than swallowed.
class SpectralSingularity : public Error {
 public:
  SpectralSingularity(int channel, double magnitude)
      : Error("spectral singularity in channel " + std::to_string(channel) +
              ": |M22| = " + std::to_string(magnitude)),
        channel_(channel),
        magnitude_(magnitude) {}

  [[nodiscard]] int channel() const noexcept { return channel_; }
  [[nodiscard]] double magnitude() const noexcept { return magnitude_; }

 private:
  int channel_;
  double magnitude_;
};

class IntegrationFailure : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// The root of the lasing condition sits at Im(n) >= 0, i.e. no gain.
class PassiveSlab : public Error {
 public:
  using Error::Error;
};

}  // namespace modslab
