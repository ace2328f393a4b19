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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/protocol.hpp"

namespace jcring {

enum class ExperimentKind {
  Spectrum,
  Degeneracy,
  Protocol,
  SweepU,
  SweepEps,
  Compensation,
  Adiabatic,
};

ExperimentKind experiment_kind_from_string(const std::string& s);
std::string to_string(ExperimentKind k);

/// Fully resolved experiment configuration. Frequencies are accepted in Hz
/// at this boundary and converted to rad/s before reaching the physics.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Spectrum;

  // Physical parameters in Hz (as configured).
  double omega0_hz = 10e9;
  double delta_hz = 0.0;
  double g_hz = 100e6;
  double j_hz = 50e6;
  double kappa_hz = 10e3;
  double gamma_q_hz = 100e3;
  double epsilon_hz = 5e6;
  std::optional<double> gamma_p_hz;  ///< overrides (kappa + gamma_q)/2
  std::vector<double> delta_omega0_hz;
  std::vector<double> delta_g_hz;

  std::string model = "bose_hubbard";  ///< "full_jc" | "bose_hubbard"
  int photon_cutoff = 2;
  int n_max = -1;  ///< -1 = default per model (4 for full_jc, none for bose_hubbard)
  bool dissipation = true;
  double tol = 1e-8;
  std::string frame = "rotating";  ///< "rotating" | "lab"
  int spectrum_sectors = 2;
  int trajectory_samples = 32;  ///< per pulse segment

  // Sweep grids (dimensionless, in units of J or g).
  std::vector<double> eps_over_j_list = {0.02, 0.04, 0.1};
  double gamma_p_over_j = 2e-4;
  std::vector<double> gamma_p_over_j_list = {0.0, 2e-4, 2e-3, 0.01};
  double u_over_j = 2.0;
  double sweep_u_min = 0.0, sweep_u_max = 4.0;
  int sweep_u_points = 33;
  double sweep_eps_min = 0.005, sweep_eps_max = 0.3;
  int sweep_eps_points = 25;
  std::vector<double> delta_g_over_g_list = {0.1, 0.0, -0.1};
  double comp_domega_min = -0.1, comp_domega_max = 0.1;
  int comp_points = 21;

  // Adiabatic switch.
  double adiabatic_ratio = 0.01;     ///< (d omega_z/dt) / (4 g^2)
  double delta_final_over_g = 10.0;  ///< ramp target detuning in units of g

  SystemParams system_params() const;
  ModelKind model_kind() const;
  double epsilon() const { return hz_to_radps(epsilon_hz); }
  std::optional<double> gamma_p() const {
    return gamma_p_hz ? std::optional<double>(hz_to_radps(*gamma_p_hz)) : std::nullopt;
  }

  std::vector<std::string> warnings() const;
};

/// Parse a JSON config file plus `key=value` overrides. Unknown keys are
/// rejected; malformed values raise ConfigError naming the key. An absent
/// or empty path applies defaults only.
ExperimentConfig parse_config(ExperimentKind kind, const std::string& json_path,
                              const std::vector<std::string>& overrides);

/// Same, from a JSON string (used by tests and the C API).
ExperimentConfig parse_config_text(ExperimentKind kind, const std::string& json_text,
                                   const std::vector<std::string>& overrides);

}  // namespace jcring
