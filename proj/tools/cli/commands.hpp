// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

#include "cli/config.hpp"

namespace modslab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

// Rows whose pipeline and oracle amplitudes differ by more than this fail
// the oracle check.
inline constexpr double kOracleTolerance = 1e-6;

struct CommandOptions {
  bool oracle_check = false;
  bool asymptotic = false;
  unsigned jobs = 1;
};

/// Runs one mode, writing data to `out` and diagnostics to `log`. Returns
/// the process exit code; configuration problems throw ConfigError.
int run_command(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out,
                std::ostream& log);

}  // namespace modslab::cli
