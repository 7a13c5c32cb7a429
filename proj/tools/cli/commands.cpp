// SPDX-License-Identifier: Apache-2.0

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <string>

#include "cli/table.hpp"
#include "cli/worker_pool.hpp"
#include "modslab/optics.hpp"
#include "modslab/oracle.hpp"
#include "modslab/scatter.hpp"

namespace modslab::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kDeg = 180.0 / kPi;

struct ChannelRow {
  int n = 0;
  Complex t_minus, t_plus;
  double theta_plus_deg = 0.0;
  double omega = 0.0;
  Complex oracle_minus, oracle_plus;
  double oracle_dev = kNaN;
};

struct PointResult {
  double lambda_nm = 0.0;
  std::string status = "ok";
  std::string detail;
  bool hard_failure = false;
  double k = 0.0;
  std::vector<ChannelRow> channels;
};

double rel_dev(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

PointResult solve_point(const RunConfig& cfg, double lambda_nm, bool oracle) {
  PointResult p;
  p.lambda_nm = lambda_nm;
  try {
    const auto wp = WaveParameters::from_nm(lambda_nm, cfg.lambda_alpha_nm, cfg.a_um, cfg.tolerances);
    p.k = wp.k();
    const auto profile = slab_profile(cfg.material(), wp, cfg.channel_model);
    const auto res = solve_scattering(profile, wp);
    std::optional<OracleAmplitudes> orc;
    if (oracle) orc = oracle_scatter(profile, wp, wp.channel_count());
    for (int n = 0; n <= res.channels(); ++n) {
      ChannelRow row;
      row.n = n;
      row.t_minus = res.t_minus[n];
      row.t_plus = res.t_plus[n];
      row.theta_plus_deg = res.theta_plus[n] * kDeg;
      row.omega = wp.omega(n);
      if (orc) {
        row.oracle_minus = orc->t_minus[n];
        row.oracle_plus = orc->t_plus[n];
        row.oracle_dev = std::max(rel_dev(row.oracle_minus, row.t_minus),
                                  rel_dev(row.oracle_plus, row.t_plus));
        if (!(row.oracle_dev < kOracleTolerance)) {
          p.status = "oracle_mismatch";
          p.hard_failure = true;
        }
      }
      p.channels.push_back(row);
    }
  } catch (const GrazingDegeneracy& e) {
    p.status = "grazing";
    p.detail = e.what();
  } catch (const SpectralSingularity& e) {
    p.status = "singular";
    p.detail = e.what();
  } catch (const Error& e) {
    p.status = "failed";
    p.detail = e.what();
    p.hard_failure = true;
  }
  return p;
}

Table sweep_table(const std::vector<PointResult>& points, bool oracle) {
  Table t;
  t.schema = oracle ? "modslab-sweep/1+oracle" : "modslab-sweep/1";
  t.columns = {"lambda_nm", "n", "re_t_minus", "im_t_minus", "re_t_plus", "im_t_plus",
               "theta_plus_deg", "omega_n", "status"};
  if (oracle) {
    for (const char* c : {"re_oracle_t_minus", "im_oracle_t_minus", "re_oracle_t_plus",
                          "im_oracle_t_plus", "oracle_rel_dev"}) {
      t.columns.emplace_back(c);
    }
  }
  for (const auto& p : points) {
    if (p.channels.empty()) {
      std::vector<Cell> row(t.columns.size());
      row[0] = p.lambda_nm;
      row[8] = p.status;
      t.rows.push_back(std::move(row));
      continue;
    }
    for (const auto& c : p.channels) {
      std::vector<Cell> row = {p.lambda_nm,        c.n,          c.t_minus.real(),
                               c.t_minus.imag(),   c.t_plus.real(), c.t_plus.imag(),
                               c.theta_plus_deg,   c.omega,      p.status};
      if (oracle) {
        row.insert(row.end(), {c.oracle_minus.real(), c.oracle_minus.imag(), c.oracle_plus.real(),
                               c.oracle_plus.imag(), c.oracle_dev});
      }
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

void emit(const Table& t, Format format, std::ostream& out) {
  if (format == Format::kJson) {
    write_json(t, out);
  } else {
    write_csv(t, out);
  }
}

int report_points(const std::vector<PointResult>& points, bool oracle, std::ostream& log) {
  int code = kExitOk;
  double worst = 0.0;
  for (const auto& p : points) {
    if (p.status != "ok") {
      log << "lambda_nm=" << format_double(p.lambda_nm) << " status=" << p.status;
      if (!p.detail.empty()) log << " (" << p.detail << ")";
      log << '\n';
    }
    if (p.hard_failure) code = kExitNumerical;
    for (const auto& c : p.channels) {
      if (std::isfinite(c.oracle_dev)) worst = std::max(worst, c.oracle_dev);
    }
  }
  if (oracle) log << "oracle: max relative deviation " << format_double(worst) << '\n';
  return code;
}

int cmd_sweep(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out,
              std::ostream& log) {
  const bool oracle = opts.oracle_check || cfg.mode == Mode::kOracleCheck;
  std::vector<double> lambdas =
      cfg.mode == Mode::kAmplitudes ? std::vector<double>{*cfg.lambda_nm} : cfg.grid->values();
  const auto points = parallel_map<PointResult>(lambdas.size(), opts.jobs, [&](std::size_t i) {
    return solve_point(cfg, lambdas[i], oracle);
  });
  emit(sweep_table(points, oracle), cfg.format, out);
  return report_points(points, oracle, log);
}

struct Figure1Row {
  double lambda_nm = 0.0;
  std::string status = "ok";
  double theta_deg = kNaN;
  double omega1 = kNaN;
  double abs_minus = kNaN;
  double abs_plus = kNaN;
  double abs_asym = kNaN;
  double dev_minus = kNaN;
  double dev_plus = kNaN;
  bool hard_failure = false;
};

Figure1Row figure1_point(const RunConfig& cfg, double lambda_nm, bool asymptotic) {
  Figure1Row r;
  r.lambda_nm = lambda_nm;
  const PointResult p = solve_point(cfg, lambda_nm, false);
  r.status = p.status;
  r.hard_failure = p.hard_failure;
  if (p.status != "ok") return r;
  if (p.channels.size() < 2) {
    r.status = "no_channel";
    return r;
  }
  const ChannelRow& c = p.channels[1];
  r.theta_deg = c.theta_plus_deg;
  r.omega1 = c.omega;
  r.abs_minus = std::abs(c.t_minus / cfg.z1);
  r.abs_plus = std::abs(c.t_plus / cfg.z1);
  if (asymptotic) {
    const double alpha = wavenumber_from_nm(cfg.lambda_alpha_nm);
    try {
      const auto as = resonance_asymptotic(cfg.material(), alpha, cfg.a_um, p.k - alpha, cfg.tolerances);
      r.abs_asym = std::abs(as.t1 / cfg.z1);
      r.dev_minus = std::abs(c.t_minus / as.t1 - 1.0);
      r.dev_plus = std::abs(c.t_plus / as.t1 - 1.0);
    } catch (const Error&) {
      // leave the asymptotic columns empty
    }
  }
  return r;
}

int cmd_figure1(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out,
                std::ostream& log) {
  const auto lambdas = cfg.grid->values();
  const auto rows = parallel_map<Figure1Row>(lambdas.size(), opts.jobs, [&](std::size_t i) {
    return figure1_point(cfg, lambdas[i], opts.asymptotic);
  });

  Table t;
  t.schema = opts.asymptotic ? "modslab-figure1/1+asymptotic" : "modslab-figure1/1";
  t.columns = {"lambda_nm", "theta_plus_deg", "omega_1", "abs_t1_minus_over_z1",
               "abs_t1_plus_over_z1"};
  if (opts.asymptotic) {
    t.columns.insert(t.columns.end(), {"abs_asymptotic_over_z1", "asym_dev_minus", "asym_dev_plus"});
  }
  t.columns.emplace_back("status");

  int code = kExitOk;
  double th_lo = std::numeric_limits<double>::infinity();
  double th_hi = -th_lo;
  for (const auto& r : rows) {
    std::vector<Cell> row = {r.lambda_nm, r.theta_deg, r.omega1, r.abs_minus, r.abs_plus};
    if (opts.asymptotic) row.insert(row.end(), {r.abs_asym, r.dev_minus, r.dev_plus});
    row.emplace_back(r.status);
    t.rows.push_back(std::move(row));
    if (r.status == "ok") {
      th_lo = std::min(th_lo, r.theta_deg);
      th_hi = std::max(th_hi, r.theta_deg);
    } else {
      log << "lambda_nm=" << format_double(r.lambda_nm) << " status=" << r.status << '\n';
    }
    if (r.hard_failure) code = kExitNumerical;
  }

  // Strict growth over the last tenth of lambda_alpha.
  auto last_drop = [&](double Figure1Row::*field) {
    double prev = kNaN;
    double where = kNaN;
    for (const auto& r : rows) {
      if (r.status != "ok" || r.lambda_nm < 0.9 * cfg.lambda_alpha_nm) continue;
      if (std::isfinite(prev) && !(r.*field > prev)) where = r.lambda_nm;
      prev = r.*field;
    }
    return where;
  };
  const double drop_minus = last_drop(&Figure1Row::abs_minus);
  const double drop_plus = last_drop(&Figure1Row::abs_plus);

  t.summary.emplace_back("theta1_plus_min_deg", th_lo);
  t.summary.emplace_back("theta1_plus_max_deg", th_hi);
  t.summary.emplace_back("theta1_plus_within_82_90", th_lo >= 82.0 && th_hi <= 90.0);
  t.summary.emplace_back("increasing_last_tenth_minus", std::isnan(drop_minus));
  t.summary.emplace_back("increasing_last_tenth_plus", std::isnan(drop_plus));
  t.summary.emplace_back("last_nonincrease_minus_nm", drop_minus);
  t.summary.emplace_back("last_nonincrease_plus_nm", drop_plus);

  // Singular growth, closed form at 0.99 and 0.8 lambda_alpha.
  try {
    auto t1_at = [&](double frac) {
      const auto wp = WaveParameters::from_nm(frac * cfg.lambda_alpha_nm, cfg.lambda_alpha_nm,
                                              cfg.a_um, cfg.tolerances);
      return closed_form_t1(cfg.material(), wp);
    };
    const auto near = t1_at(0.99);
    const auto far = t1_at(0.8);
    const double g_minus = std::abs(near.t_minus) / std::abs(far.t_minus);
    const double g_plus = std::abs(near.t_plus) / std::abs(far.t_plus);
    t.summary.emplace_back("growth_099_vs_080_minus", g_minus);
    t.summary.emplace_back("growth_099_vs_080_plus", g_plus);
    t.summary.emplace_back("growth_at_least_5x", g_minus >= 5.0 && g_plus >= 5.0);
  } catch (const Error& e) {
    log << "growth check skipped: " << e.what() << '\n';
  }
  if (opts.asymptotic && !rows.empty() && std::isfinite(rows.back().dev_minus)) {
    t.summary.emplace_back("asym_dev_minus_at_last", rows.back().dev_minus);
    t.summary.emplace_back("asym_dev_plus_at_last", rows.back().dev_plus);
  }

  emit(t, cfg.format, out);
  for (const auto& [key, value] : t.summary) {
    log << "summary: " << key << '=';
    if (const double* d = std::get_if<double>(&value)) {
      log << format_double(*d);
    } else if (const bool* b = std::get_if<bool>(&value)) {
      log << (*b ? "true" : "false");
    }
    log << '\n';
  }
  return code;
}

struct LasingRow {
  LasingSolution sol;
  std::string status = "ok";
  double rel_err = kNaN;
};

int cmd_lasing(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out,
               std::ostream& log) {
  const SlabGeometry geom{wavenumber_from_nm(cfg.lambda_alpha_nm), cfg.a_um};
  const double eta = *cfg.eta;
  const auto rows = parallel_map<LasingRow>(cfg.modes.size(), opts.jobs, [&](std::size_t i) {
    const auto [m, n] = cfg.modes[i];
    LasingRow r;
    r.sol = lasing_threshold_approx(eta, geom, m, n);
    try {
      r.sol.exact = lasing_threshold_exact(eta, geom, n, r.sol.k_star,
                                           -r.sol.g_star / (2.0 * r.sol.k_star));
      r.rel_err = std::abs(r.sol.exact->k - r.sol.k_star) / r.sol.exact->k;
    } catch (const PassiveSlab&) {
      r.status = "passive";
    } catch (const NoConvergence&) {
      r.status = "no_convergence";
    }
    return r;
  });

  Table t;
  t.schema = "modslab-lasing/1";
  t.columns = {"m",      "n",           "q",          "theta_plus_deg", "g_star_per_cm",
               "k_star", "lambda_star_nm", "exact_k", "exact_im_n",     "rel_err",
               "status"};
  for (const auto& r : rows) {
    const auto& s = r.sol;
    std::vector<Cell> row = {s.m, s.n, s.q, s.theta_plus * kDeg, s.g_star * 1e4, s.k_star,
                             wavelength_nm(s.k_star)};
    if (s.exact) {
      row.insert(row.end(), {s.exact->k, s.exact->im_index, r.rel_err});
    } else {
      row.insert(row.end(), {Cell{}, Cell{}, Cell{}});
      log << "m=" << s.m << " n=" << s.n << " status=" << r.status << '\n';
    }
    row.emplace_back(r.status);
    t.rows.push_back(std::move(row));
  }
  emit(t, cfg.format, out);
  return kExitOk;
}

}  // namespace

int run_command(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out,
                std::ostream& log) {
  switch (cfg.mode) {
    case Mode::kAmplitudes:
    case Mode::kSweep:
    case Mode::kOracleCheck:
      return cmd_sweep(cfg, opts, out, log);
    case Mode::kFigure1:
      return cmd_figure1(cfg, opts, out, log);
    case Mode::kLasing:
      return cmd_lasing(cfg, opts, out, log);
  }
  return kExitConfig;
}

}  // namespace modslab::cli
