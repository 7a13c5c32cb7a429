// SPDX-License-Identifier: Apache-2.0

#include "cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace modslab::cli {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {
    "mode",        "z0_re",        "z0_im",           "z1_re",          "z1_im",
    "eta",         "im_n",         "a_um",            "lambda_alpha_nm", "lambda_nm",
    "lambda_start_nm", "lambda_stop_nm", "lambda_points", "format",     "out",
    "eps_channel", "eps_det",      "eps_num",         "ode_abs",        "ode_rel",
    "channel_model", "modes",      "m_range",         "n_range"};

double number(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(std::string("'") + key + "' must be finite");
  return x;
}

std::optional<double> maybe(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return number(j, key);
}

int integer(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ConfigError(what + " must be an integer");
  return v.get<int>();
}

std::pair<int, int> range(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_array() || v.size() != 2) throw ConfigError(std::string("'") + key + "' must be [lo, hi]");
  const int lo = integer(v[0], key);
  const int hi = integer(v[1], key);
  if (lo < 1 || hi < lo) throw ConfigError(std::string("'") + key + "' needs 1 <= lo <= hi");
  return {lo, hi};
}

void positive(double x, const char* key) {
  if (!(x > 0.0)) throw ConfigError(std::string("'") + key + "' must be positive");
}

void read_tolerances(const json& j, Tolerances& tol) {
  auto set = [&](const char* key, double& field) {
    if (auto v = maybe(j, key)) {
      positive(*v, key);
      field = *v;
    }
  };
  set("eps_channel", tol.channel_rel);
  set("eps_det", tol.det);
  set("eps_num", tol.num);
  set("ode_abs", tol.ode_abs);
  set("ode_rel", tol.ode_rel);
}

void read_material(const json& j, RunConfig& cfg) {
  const bool has_z0 = j.contains("z0_re") || j.contains("z0_im");
  const bool has_eta = j.contains("eta") || j.contains("im_n");
  if (has_z0 && has_eta) throw ConfigError("give the material as z0_re/z0_im or eta/im_n, not both");
  if (has_z0) {
    cfg.z0 = Complex(maybe(j, "z0_re").value_or(0.0), maybe(j, "z0_im").value_or(0.0));
    cfg.eta.reset();
  }
  if (has_eta) {
    if (!j.contains("eta")) throw ConfigError("'im_n' needs 'eta'");
    cfg.eta = number(j, "eta");
    cfg.im_n = maybe(j, "im_n").value_or(0.0);
    cfg.z0.reset();
  }
  if (j.contains("z1_re") || j.contains("z1_im")) {
    cfg.z1 = Complex(maybe(j, "z1_re").value_or(0.0), maybe(j, "z1_im").value_or(0.0));
  }
}

void read_grid(const json& j, RunConfig& cfg) {
  const bool any = j.contains("lambda_start_nm") || j.contains("lambda_stop_nm") ||
                   j.contains("lambda_points");
  if (!any) return;
  LambdaGrid g = cfg.grid.value_or(LambdaGrid{});
  if (auto v = maybe(j, "lambda_start_nm")) g.start_nm = *v;
  if (auto v = maybe(j, "lambda_stop_nm")) g.stop_nm = *v;
  if (j.contains("lambda_points")) g.points = integer(j.at("lambda_points"), "'lambda_points'");
  cfg.grid = g;
}

void validate_grid(const LambdaGrid& g) {
  if (!(g.start_nm > 0.0)) throw ConfigError("lambda grid must be strictly positive");
  if (!(g.start_nm < g.stop_nm)) throw ConfigError("lambda grid needs start < stop");
  if (g.points < 2) throw ConfigError("lambda grid needs at least 2 points");
}

RunConfig figure1_defaults() {
  RunConfig cfg;
  cfg.eta = 2.892;
  cfg.im_n = 4.5e-5;
  cfg.z1 = 1.0;
  cfg.a_um = 10.0;
  cfg.lambda_alpha_nm = 1000.0;
  cfg.grid = LambdaGrid{700.0, 995.0, 512};
  return cfg;
}

}  // namespace

Mode parse_mode(const std::string& name) {
  if (name == "amplitudes") return Mode::kAmplitudes;
  if (name == "sweep") return Mode::kSweep;
  if (name == "figure1") return Mode::kFigure1;
  if (name == "lasing") return Mode::kLasing;
  if (name == "oracle-check") return Mode::kOracleCheck;
  throw ConfigError("unknown mode '" + name + "'");
}

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::kAmplitudes: return "amplitudes";
    case Mode::kSweep: return "sweep";
    case Mode::kFigure1: return "figure1";
    case Mode::kLasing: return "lasing";
    case Mode::kOracleCheck: return "oracle-check";
  }
  return "?";
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw ConfigError("unknown format '" + name + "' (csv|json)");
}

std::vector<double> LambdaGrid::values() const {
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    v[i] = i == points - 1 ? stop_nm : start_nm + (stop_nm - start_nm) * i / (points - 1);
  }
  return v;
}

SlabMaterial RunConfig::material() const {
  if (eta) return SlabMaterial::from_index(Complex(*eta, im_n), z1);
  if (z0) return SlabMaterial::from_susceptibility(*z0, z1);
  throw ConfigError("no material given (z0_re/z0_im or eta/im_n)");
}

RunConfig parse_config(const std::string& text, Mode mode) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& item : j.items()) {
    if (!kKnownKeys.count(item.key())) throw ConfigError("unknown config key '" + item.key() + "'");
  }

  RunConfig cfg = mode == Mode::kFigure1 ? figure1_defaults() : RunConfig{};
  cfg.mode = mode;
  try {
    if (j.contains("mode")) {
      if (!j["mode"].is_string() || parse_mode(j["mode"].get<std::string>()) != mode) {
        throw ConfigError(std::string("config mode does not match the requested mode '") +
                          mode_name(mode) + "'");
      }
    }
    read_material(j, cfg);
    if (auto v = maybe(j, "a_um")) cfg.a_um = *v;
    if (auto v = maybe(j, "lambda_alpha_nm")) cfg.lambda_alpha_nm = *v;
    if (auto v = maybe(j, "lambda_nm")) cfg.lambda_nm = *v;
    read_grid(j, cfg);
    read_tolerances(j, cfg.tolerances);
    if (j.contains("format")) {
      if (!j["format"].is_string()) throw ConfigError("'format' must be a string");
      cfg.format = parse_format(j["format"].get<std::string>());
    }
    if (j.contains("out")) {
      if (!j["out"].is_string()) throw ConfigError("'out' must be a string");
      cfg.out_path = j["out"].get<std::string>();
    }
    if (j.contains("channel_model")) {
      const auto name = j["channel_model"].is_string() ? j["channel_model"].get<std::string>() : "";
      if (name == "index_scaled") {
        cfg.channel_model = ChannelModel::kIndexScaled;
      } else if (name == "helmholtz") {
        cfg.channel_model = ChannelModel::kHelmholtz;
      } else {
        throw ConfigError("'channel_model' must be \"index_scaled\" or \"helmholtz\"");
      }
    }
    if (j.contains("modes")) {
      if (j.contains("m_range") || j.contains("n_range")) {
        throw ConfigError("give lasing modes as 'modes' or as 'm_range'/'n_range', not both");
      }
      if (!j["modes"].is_array()) throw ConfigError("'modes' must be a list of [m, n] pairs");
      for (const auto& p : j["modes"]) {
        if (!p.is_array() || p.size() != 2) throw ConfigError("'modes' entries must be [m, n]");
        cfg.modes.emplace_back(integer(p[0], "m"), integer(p[1], "n"));
      }
    } else if (j.contains("m_range") || j.contains("n_range")) {
      if (!j.contains("m_range") || !j.contains("n_range")) {
        throw ConfigError("'m_range' and 'n_range' go together");
      }
      const auto [m_lo, m_hi] = range(j, "m_range");
      const auto [n_lo, n_hi] = range(j, "n_range");
      for (int m = m_lo; m <= m_hi; ++m) {
        for (int n = n_lo; n <= n_hi; ++n) cfg.modes.emplace_back(m, n);
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config value: ") + e.what());
  }

  positive(cfg.a_um, "a_um");
  positive(cfg.lambda_alpha_nm, "lambda_alpha_nm");
  switch (mode) {
    case Mode::kAmplitudes:
      if (!cfg.lambda_nm) throw ConfigError("amplitudes mode needs 'lambda_nm'");
      positive(*cfg.lambda_nm, "lambda_nm");
      (void)cfg.material();
      break;
    case Mode::kSweep:
    case Mode::kOracleCheck:
    case Mode::kFigure1:
      if (!cfg.grid) throw ConfigError("a wavelength grid needs lambda_start_nm, lambda_stop_nm and lambda_points");
      validate_grid(*cfg.grid);
      (void)cfg.material();
      if (mode == Mode::kFigure1 && cfg.z1 == Complex{}) {
        throw ConfigError("figure1 normalizes by z1, which must be nonzero");
      }
      break;
    case Mode::kLasing:
      if (!cfg.eta) throw ConfigError("lasing mode needs 'eta'");
      if (!(*cfg.eta > 1.0)) throw ConfigError("lasing requires eta > 1");
      if (cfg.modes.empty()) throw ConfigError("lasing mode needs 'modes' or 'm_range'/'n_range'");
      for (const auto& [m, n] : cfg.modes) {
        if (m < 1 || n < 1) throw ConfigError("lasing modes need m, n >= 1");
      }
      break;
  }
  return cfg;
}

RunConfig load_config(const std::string& path, Mode mode) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), mode);
}

}  // namespace modslab::cli
