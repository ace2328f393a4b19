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

#include <map>

#include "core/dynamics.hpp"
#include "core/spectrum.hpp"

namespace jcring {

/// Two-pulse pumping schedule: a uniform pulse at omega0 - g + J for a
/// duration pi/(2 sqrt(2) eps), then an alternating-phase pulse
/// eps(1,-1,1,-1) at omega0 - g - J for pi/(2 eps).
Schedule build_two_pulse_schedule(const SystemParams& params, double epsilon,
                                  std::vector<std::string>* warnings = nullptr);

enum class ModelKind { FullJC, BoseHubbard };

struct ProtocolOptions {
  int photon_cutoff = 2;
  /// Global excitation cutoff; -1 = none. The full model defaults to 4,
  /// the effective model to none.
  std::optional<int> n_max;
  Frame frame = Frame::Rotating;
  double rtol = 1e-8;
  /// Effective-model overrides used by the parameter sweeps.
  std::optional<double> u_override;
  std::optional<double> gamma_p_override;
  /// Trajectory samples per segment for observable dumps (0 = boundaries only).
  int samples_per_segment = 0;
};

struct TrajectoryPoint {
  double time = 0.0;
  double pop_ground = 0.0;
  double pop_psi_1_4 = 0.0;
  double pop_psi_2_3 = 0.0;
  double fidelity = 0.0;
  double trace = 0.0;
  double min_eig = 0.0;
  bool segment_boundary = false;
};

struct ProtocolResult {
  double fidelity = 0.0;     ///< <psi_2,3| rho_f |psi_2,3>
  double total_duration = 0.0;  ///< seconds
  std::vector<TrajectoryPoint> trajectory;  ///< includes segment boundaries
  NamedStates named;
  Schedule schedule;
  bool pure_state = false;   ///< true when evolved without dissipation
  QuantumState psi_final;    ///< valid when pure_state
  DensityMatrix rho_final;   ///< valid when !pure_state
  std::vector<std::string> warnings;
};

/// Run the two-pulse generation protocol from the ground state and report
/// the fidelity against the identified |psi_2,3>. Channels with zero rate
/// are dropped; with no remaining channel the evolution is pure-state.
ProtocolResult run_protocol(ModelKind model, const SystemParams& params, double epsilon,
                            bool dissipation, const ProtocolOptions& opts = {});

/// The 4x4 single-particle eigenmode map of the ring, c = M a. M is real
/// orthogonal and symmetric (M^2 = 1); its rows are hopping eigenvectors
/// with eigenvalues {0, -2J, 0, +2J}.
Eigen::Matrix4d momentum_matrix();

/// Creation operator of momentum mode m: c_m^dag = sum_k M_mk a_k^dag.
OperatorMatrix momentum_mode_creator(const BasisPtr& basis, int m);

/// (a1^dag a3^dag - a2^dag a4^dag)|vac>/sqrt(2), qubits (if any) down.
QuantumState spatial_entangled_pair(const BasisPtr& basis);
/// (c1^dag c3^dag - c2^dag c4^dag)|vac>/sqrt(2) via the mode map.
QuantumState momentum_entangled_pair(const BasisPtr& basis);

/// Rewrite two-particle coefficients between the site and mode pictures:
/// sum_jk Q_jk a_j^dag a_k^dag |vac>  =  sum_mn (M Q M^T)_mn c_m^dag c_n^dag |vac>.
Eigen::Matrix4cd to_momentum_pair_coefficients(const Eigen::Matrix4cd& spatial);

/// <to| (sum_j eps_j a_j^dag) |from> in rad/s.
cplx raising_matrix_element(const DriveGenerator& drive, const QuantumState& to,
                            const QuantumState& from);

struct FidelityCurve {
  std::string label;
  std::map<std::string, double> meta;  ///< fixed parameters of the curve
  std::vector<double> x;
  std::vector<double> fidelity;
};

/// Fidelity versus U/J for each drive amplitude in eps_over_j (effective model).
std::vector<FidelityCurve> sweep_fidelity_vs_u(const SystemParams& params,
                                               const std::vector<double>& eps_over_j,
                                               const std::vector<double>& u_over_j_grid,
                                               double gamma_p_over_j,
                                               const ProtocolOptions& opts = {});

/// Fidelity versus eps/J for each damping rate in gamma_p_over_j (effective model).
std::vector<FidelityCurve> sweep_fidelity_vs_epsilon(const SystemParams& params,
                                                     const std::vector<double>& gamma_p_over_j,
                                                     const std::vector<double>& eps_over_j_grid,
                                                     double u_over_j,
                                                     const ProtocolOptions& opts = {});

struct CompensationCurve {
  double delta_g_over_g = 0.0;
  std::vector<double> delta_omega0_over_g;
  std::vector<double> detuning_over_g;  ///< compensating Delta / g
  std::vector<double> u_over_j;         ///< effective U/J after compensation
};

/// Compensating detuning and post-compensation interaction across a grid of
/// fabrication errors.
std::vector<CompensationCurve> compensation_curve(const std::vector<double>& delta_g_over_g,
                                                  const std::vector<double>& delta_omega0_over_g,
                                                  double g, double j_hop);

/// Evenly spaced and log-spaced grids for the sweep defaults.
std::vector<double> linspace(double lo, double hi, int n);
std::vector<double> logspace(double lo, double hi, int n);

}  // namespace jcring
