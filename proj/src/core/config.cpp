// Copyright 2026 The jcring Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/config.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>

namespace jcring {

using nlohmann::json;

ExperimentKind experiment_kind_from_string(const std::string& s) {
  if (s == "spectrum") return ExperimentKind::Spectrum;
  if (s == "degeneracy") return ExperimentKind::Degeneracy;
  if (s == "protocol") return ExperimentKind::Protocol;
  if (s == "sweep-u") return ExperimentKind::SweepU;
  if (s == "sweep-eps") return ExperimentKind::SweepEps;
  if (s == "compensation") return ExperimentKind::Compensation;
  if (s == "adiabatic") return ExperimentKind::Adiabatic;
  throw ConfigError("unknown experiment kind: " + s);
}

std::string to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::Spectrum: return "spectrum";
    case ExperimentKind::Degeneracy: return "degeneracy";
    case ExperimentKind::Protocol: return "protocol";
    case ExperimentKind::SweepU: return "sweep-u";
    case ExperimentKind::SweepEps: return "sweep-eps";
    case ExperimentKind::Compensation: return "compensation";
    case ExperimentKind::Adiabatic: return "adiabatic";
  }
  return "?";
}

SystemParams ExperimentConfig::system_params() const {
  SystemParams p;
  p.omega0 = hz_to_radps(omega0_hz);
  p.delta = hz_to_radps(delta_hz);
  p.g = hz_to_radps(g_hz);
  p.j_hop = hz_to_radps(j_hz);
  p.kappa = hz_to_radps(kappa_hz);
  p.gamma_q = hz_to_radps(gamma_q_hz);
  for (double d : delta_omega0_hz) p.delta_omega0.push_back(hz_to_radps(d));
  for (double d : delta_g_hz) p.delta_g.push_back(hz_to_radps(d));
  return p;
}

ModelKind ExperimentConfig::model_kind() const {
  if (model == "full_jc") return ModelKind::FullJC;
  if (model == "bose_hubbard") return ModelKind::BoseHubbard;
  throw ConfigError("model must be \"full_jc\" or \"bose_hubbard\", got \"" + model + "\"");
}

std::vector<std::string> ExperimentConfig::warnings() const {
  std::vector<std::string> w = system_params().validate();
  if (epsilon_hz > j_hz)
    w.push_back("epsilon > J: the drive is outside the weak-pumping regime");
  return w;
}

namespace {

double get_number(const json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number())
    throw ConfigError("config key \"" + key + "\" must be a number, got " + v.dump());
  return v.get<double>();
}

int get_int(const json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer())
    throw ConfigError("config key \"" + key + "\" must be an integer, got " + v.dump());
  return v.get<int>();
}

bool get_bool(const json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_boolean())
    throw ConfigError("config key \"" + key + "\" must be a boolean, got " + v.dump());
  return v.get<bool>();
}

std::string get_string(const json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_string())
    throw ConfigError("config key \"" + key + "\" must be a string, got " + v.dump());
  return v.get<std::string>();
}

std::vector<double> get_number_list(const json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_array())
    throw ConfigError("config key \"" + key + "\" must be an array of numbers, got " + v.dump());
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number())
      throw ConfigError("config key \"" + key + "\" must be an array of numbers, got " + v.dump());
    out.push_back(e.get<double>());
  }
  return out;
}

ExperimentConfig config_from_json(ExperimentKind kind, const json& j) {
  ExperimentConfig c;
  c.kind = kind;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "experiment") {
      const std::string want = get_string(j, key);
      if (experiment_kind_from_string(want) != kind)
        throw ConfigError("config experiment \"" + want + "\" does not match the subcommand \"" +
                          to_string(kind) + "\"");
    } else if (key == "omega0_hz") c.omega0_hz = get_number(j, key);
    else if (key == "delta_hz") c.delta_hz = get_number(j, key);
    else if (key == "g_hz") c.g_hz = get_number(j, key);
    else if (key == "j_hz") c.j_hz = get_number(j, key);
    else if (key == "kappa_hz") c.kappa_hz = get_number(j, key);
    else if (key == "gamma_q_hz") c.gamma_q_hz = get_number(j, key);
    else if (key == "epsilon_hz") c.epsilon_hz = get_number(j, key);
    else if (key == "gamma_p_hz") c.gamma_p_hz = get_number(j, key);
    else if (key == "delta_omega0_hz") c.delta_omega0_hz = get_number_list(j, key);
    else if (key == "delta_g_hz") c.delta_g_hz = get_number_list(j, key);
    else if (key == "model") c.model = get_string(j, key);
    else if (key == "photon_cutoff") c.photon_cutoff = get_int(j, key);
    else if (key == "n_max") c.n_max = get_int(j, key);
    else if (key == "dissipation") c.dissipation = get_bool(j, key);
    else if (key == "tol") c.tol = get_number(j, key);
    else if (key == "frame") c.frame = get_string(j, key);
    else if (key == "spectrum_sectors") c.spectrum_sectors = get_int(j, key);
    else if (key == "trajectory_samples") c.trajectory_samples = get_int(j, key);
    else if (key == "eps_over_j_list") c.eps_over_j_list = get_number_list(j, key);
    else if (key == "gamma_p_over_j") c.gamma_p_over_j = get_number(j, key);
    else if (key == "gamma_p_over_j_list") c.gamma_p_over_j_list = get_number_list(j, key);
    else if (key == "u_over_j") c.u_over_j = get_number(j, key);
    else if (key == "sweep_u_min") c.sweep_u_min = get_number(j, key);
    else if (key == "sweep_u_max") c.sweep_u_max = get_number(j, key);
    else if (key == "sweep_u_points") c.sweep_u_points = get_int(j, key);
    else if (key == "sweep_eps_min") c.sweep_eps_min = get_number(j, key);
    else if (key == "sweep_eps_max") c.sweep_eps_max = get_number(j, key);
    else if (key == "sweep_eps_points") c.sweep_eps_points = get_int(j, key);
    else if (key == "delta_g_over_g_list") c.delta_g_over_g_list = get_number_list(j, key);
    else if (key == "comp_domega_min") c.comp_domega_min = get_number(j, key);
    else if (key == "comp_domega_max") c.comp_domega_max = get_number(j, key);
    else if (key == "comp_points") c.comp_points = get_int(j, key);
    else if (key == "adiabatic_ratio") c.adiabatic_ratio = get_number(j, key);
    else if (key == "delta_final_over_g") c.delta_final_over_g = get_number(j, key);
    else throw ConfigError("unknown config key: \"" + key + "\"");
  }

  if (!(c.omega0_hz > 0.0)) throw ConfigError("omega0_hz must be > 0");
  if (!(c.g_hz > 0.0)) throw ConfigError("g_hz must be > 0");
  if (c.j_hz < 0.0) throw ConfigError("j_hz must be >= 0");
  if (c.kappa_hz < 0.0 || c.gamma_q_hz < 0.0)
    throw ConfigError("damping rates must be >= 0");
  if (!(c.epsilon_hz > 0.0)) throw ConfigError("epsilon_hz must be > 0");
  if (!std::isfinite(c.omega0_hz) || !std::isfinite(c.g_hz) || !std::isfinite(c.j_hz) ||
      !std::isfinite(c.epsilon_hz))
    throw ConfigError("frequencies must be finite");
  if (c.photon_cutoff < 1) throw ConfigError("photon_cutoff must be >= 1");
  if (!(c.tol > 0.0)) throw ConfigError("tol must be > 0");
  if (c.frame != "rotating" && c.frame != "lab")
    throw ConfigError("frame must be \"rotating\" or \"lab\"");
  if (!c.delta_omega0_hz.empty() && c.delta_omega0_hz.size() != 4)
    throw ConfigError("delta_omega0_hz must list one value per site (4)");
  if (!c.delta_g_hz.empty() && c.delta_g_hz.size() != 4)
    throw ConfigError("delta_g_hz must list one value per site (4)");
  c.model_kind();
  return c;
}

json apply_overrides(json j, const std::vector<std::string>& overrides) {
  for (const auto& ov : overrides) {
    const auto eq = ov.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConfigError("override must be key=value, got \"" + ov + "\"");
    const std::string key = ov.substr(0, eq);
    const std::string raw = ov.substr(eq + 1);
    json value = json::parse(raw, nullptr, false);
    if (value.is_discarded()) value = raw;  // bare strings (e.g. model=full_jc)
    j[key] = value;
  }
  return j;
}

}  // namespace

ExperimentConfig parse_config_text(ExperimentKind kind, const std::string& json_text,
                                   const std::vector<std::string>& overrides) {
  json j = json::object();
  if (!json_text.empty()) {
    j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) throw ConfigError("config is not valid JSON");
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
  }
  return config_from_json(kind, apply_overrides(std::move(j), overrides));
}

ExperimentConfig parse_config(ExperimentKind kind, const std::string& json_path,
                              const std::vector<std::string>& overrides) {
  std::string text;
  if (!json_path.empty()) {
    std::ifstream in(json_path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + json_path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_config_text(kind, text, overrides);
}

}  // namespace jcring
