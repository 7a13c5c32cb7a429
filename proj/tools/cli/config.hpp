// SPDX-License-Identifier: Apache-2.0
//
// Run configuration for the modslab command line. The file is a flat JSON
// object; every dimensional key carries its unit in the name.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modslab/core.hpp"
#include "modslab/optics.hpp"
#include "modslab/transfer1d.hpp"

namespace modslab::cli {

enum class Mode { kAmplitudes, kSweep, kFigure1, kLasing, kOracleCheck };
enum class Format { kCsv, kJson };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[nodiscard]] Mode parse_mode(const std::string& name);
[[nodiscard]] const char* mode_name(Mode mode);
[[nodiscard]] Format parse_format(const std::string& name);

struct LambdaGrid {
  double start_nm = 0.0;
  double stop_nm = 0.0;
  int points = 0;

  /// Inclusive uniform grid.
  [[nodiscard]] std::vector<double> values() const;
};

struct RunConfig {
  Mode mode = Mode::kSweep;

  // Material: either (z0, z1) or (eta + i im_n, z1).
  std::optional<Complex> z0;
  std::optional<double> eta;
  double im_n = 0.0;
  Complex z1{};

  double a_um = 0.0;
  double lambda_alpha_nm = 0.0;
  std::optional<LambdaGrid> grid;
  std::optional<double> lambda_nm;

  Format format = Format::kCsv;
  std::string out_path;  // empty: stdout

  Tolerances tolerances;
  ChannelModel channel_model = ChannelModel::kIndexScaled;

  // lasing
  std::vector<std::pair<int, int>> modes;  // (m, n)

  [[nodiscard]] SlabMaterial material() const;
};

/// Parses and validates a configuration for the given mode. Figure-1
/// defaults (a = 10 um, n = 2.892 + 4.5e-5 i, z1 = 1, lambda_alpha = 1000 nm,
/// 700-995 nm in 512 points) fill any key the figure1 mode leaves unset.
[[nodiscard]] RunConfig parse_config(const std::string& text, Mode mode);
[[nodiscard]] RunConfig load_config(const std::string& path, Mode mode);

}  // namespace modslab::cli
