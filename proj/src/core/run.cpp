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

#include "core/run.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "core/csv.hpp"

namespace jcring {

using nlohmann::json;

const char* version_string() { return "0.1.0"; }

namespace {

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

json config_json(const ExperimentConfig& c) {
  json j;
  j["experiment"] = to_string(c.kind);
  j["omega0_hz"] = c.omega0_hz;
  j["delta_hz"] = c.delta_hz;
  j["g_hz"] = c.g_hz;
  j["j_hz"] = c.j_hz;
  j["kappa_hz"] = c.kappa_hz;
  j["gamma_q_hz"] = c.gamma_q_hz;
  j["epsilon_hz"] = c.epsilon_hz;
  if (c.gamma_p_hz) j["gamma_p_hz"] = *c.gamma_p_hz;
  j["delta_omega0_hz"] = c.delta_omega0_hz;
  j["delta_g_hz"] = c.delta_g_hz;
  j["model"] = c.model;
  j["photon_cutoff"] = c.photon_cutoff;
  j["n_max"] = c.n_max;
  j["dissipation"] = c.dissipation;
  j["tol"] = c.tol;
  j["frame"] = c.frame;
  j["spectrum_sectors"] = c.spectrum_sectors;
  j["trajectory_samples"] = c.trajectory_samples;
  j["eps_over_j_list"] = c.eps_over_j_list;
  j["gamma_p_over_j"] = c.gamma_p_over_j;
  j["gamma_p_over_j_list"] = c.gamma_p_over_j_list;
  j["u_over_j"] = c.u_over_j;
  j["sweep_u_min"] = c.sweep_u_min;
  j["sweep_u_max"] = c.sweep_u_max;
  j["sweep_u_points"] = c.sweep_u_points;
  j["sweep_eps_min"] = c.sweep_eps_min;
  j["sweep_eps_max"] = c.sweep_eps_max;
  j["sweep_eps_points"] = c.sweep_eps_points;
  j["delta_g_over_g_list"] = c.delta_g_over_g_list;
  j["comp_domega_min"] = c.comp_domega_min;
  j["comp_domega_max"] = c.comp_domega_max;
  j["comp_points"] = c.comp_points;
  j["adiabatic_ratio"] = c.adiabatic_ratio;
  j["delta_final_over_g"] = c.delta_final_over_g;
  return j;
}

ProtocolOptions protocol_options(const ExperimentConfig& c) {
  ProtocolOptions o;
  o.photon_cutoff = c.photon_cutoff;
  if (c.n_max >= 0) o.n_max = c.n_max;
  o.frame = c.frame == "lab" ? Frame::Lab : Frame::Rotating;
  o.rtol = c.tol;
  if (c.gamma_p()) o.gamma_p_override = c.gamma_p();
  o.samples_per_segment = std::max(1, c.trajectory_samples);
  return o;
}

BasisPtr spectrum_basis(const ExperimentConfig& c, int sectors) {
  const bool qubits = c.model_kind() == ModelKind::FullJC;
  // Keeping only the sectors to be reported is exact: the Hamiltonian is
  // block diagonal in the excitation number.
  const int n_max = c.n_max >= 0 ? c.n_max : sectors;
  return build_basis(4, c.photon_cutoff, qubits, n_max);
}

OperatorMatrix spectrum_hamiltonian(const ExperimentConfig& c, const SystemParams& p,
                                    const BasisPtr& basis) {
  if (c.model_kind() == ModelKind::FullJC) return build_lattice_hamiltonian(p, basis);
  BoseHubbardParams bh = effective_polariton_params(p);
  return build_bose_hubbard(bh, basis);
}

void run_spectrum(const ExperimentConfig& c, const std::string& dir, RunResult& res) {
  const SystemParams p = c.system_params();
  const BasisPtr basis = spectrum_basis(c, c.spectrum_sectors);
  const OperatorMatrix h = spectrum_hamiltonian(c, p, basis);
  CsvWriter csv;
  csv.comment("sector-resolved eigenspectrum, model=" + c.model);
  csv.comment("omega0_hz=" + CsvWriter::format(c.omega0_hz) + " g_hz=" +
              CsvWriter::format(c.g_hz) + " j_hz=" + CsvWriter::format(c.j_hz) +
              " delta_hz=" + CsvWriter::format(c.delta_hz));
  csv.header({"sector", "index", "energy_over_2pi_hz", "translation_label_re",
              "translation_label_im"});
  for (int n = 0; n <= c.spectrum_sectors; ++n) {
    EigenSystem es = diagonalize_sector(h, n);
    for (int m = 0; m < es.energies.size(); ++m) {
      const cplx lab = es.translation_ok[m] ? es.translation_label[m] : cplx(0.0, 0.0);
      csv.row({static_cast<double>(n), static_cast<double>(m), radps_to_hz(es.energies[m]),
               lab.real(), lab.imag()});
    }
  }
  const std::string path = join_path(dir, "spectrum.csv");
  csv.write(path);
  res.files.push_back(path);
}

void run_degeneracy(const ExperimentConfig& c, const std::string& dir, RunResult& res) {
  ExperimentConfig cc = c;
  if (c.j_hz != 0.0 || c.delta_hz != 0.0) {
    res.warnings.push_back("degeneracy profile is defined at J=0, Delta=0; configured values ignored");
    cc.j_hz = 0.0;
    cc.delta_hz = 0.0;
  }
  SystemParams p = cc.system_params();
  if (!p.uniform())
    throw ConfigError("degeneracy experiment requires uniform site parameters");
  const BasisPtr basis = spectrum_basis(cc, cc.spectrum_sectors);
  const OperatorMatrix h = spectrum_hamiltonian(cc, p, basis);
  const auto clusters = degeneracy_profile(h, cc.spectrum_sectors, 1e-9 * p.g);
  CsvWriter csv;
  csv.comment("eigenvalue multiplicities at J=0, Delta=0, model=" + c.model);
  csv.header({"sector", "cluster", "energy_over_2pi_hz", "multiplicity"});
  int cluster_id = 0;
  int last_sector = -1;
  for (const auto& cl : clusters) {
    if (cl.sector != last_sector) {
      cluster_id = 0;
      last_sector = cl.sector;
    }
    csv.row({static_cast<double>(cl.sector), static_cast<double>(cluster_id++),
             radps_to_hz(cl.energy), static_cast<double>(cl.multiplicity)});
  }
  const std::string path = join_path(dir, "degeneracy.csv");
  csv.write(path);
  res.files.push_back(path);
}

void run_protocol_experiment(const ExperimentConfig& c, const std::string& dir, RunResult& res) {
  const SystemParams p = c.system_params();
  ProtocolResult r =
      run_protocol(c.model_kind(), p, c.epsilon(), c.dissipation, protocol_options(c));
  res.warnings.insert(res.warnings.end(), r.warnings.begin(), r.warnings.end());
  CsvWriter csv;
  csv.comment("two-pulse protocol trajectory, model=" + c.model +
              " dissipation=" + (c.dissipation ? std::string("on") : std::string("off")));
  csv.comment("epsilon_hz=" + CsvWriter::format(c.epsilon_hz));
  csv.header({"time_s", "pop_ground", "pop_psi_1_4", "pop_psi_2_3", "fidelity", "trace",
              "min_eig", "segment_boundary"});
  for (const auto& pt : r.trajectory)
    csv.row({pt.time, pt.pop_ground, pt.pop_psi_1_4, pt.pop_psi_2_3, pt.fidelity, pt.trace,
             pt.min_eig, pt.segment_boundary ? 1.0 : 0.0});
  const std::string path = join_path(dir, "protocol_trajectory.csv");
  csv.write(path);
  res.files.push_back(path);
  res.scalars["fidelity"] = r.fidelity;
  res.scalars["duration_s"] = r.total_duration;
}

void run_sweep_u(const ExperimentConfig& c, const std::string& dir, RunResult& res) {
  const SystemParams p = c.system_params();
  const auto grid = linspace(c.sweep_u_min, c.sweep_u_max, c.sweep_u_points);
  auto curves = sweep_fidelity_vs_u(p, c.eps_over_j_list, grid, c.gamma_p_over_j,
                                    protocol_options(c));
  for (const auto& curve : curves) {
    CsvWriter csv;
    csv.comment("fidelity versus U/J");
    for (const auto& [k, v] : curve.meta) csv.comment(k + "=" + CsvWriter::format(v));
    csv.header({"u_over_j", "fidelity"});
    for (std::size_t i = 0; i < curve.x.size(); ++i) csv.row({curve.x[i], curve.fidelity[i]});
    const std::string path =
        join_path(dir, "sweep_u_eps_" + fmt_g(curve.meta.at("eps_over_j")) + ".csv");
    csv.write(path);
    res.files.push_back(path);
  }
  res.scalars["n_curves"] = static_cast<double>(curves.size());
}

void run_sweep_eps(const ExperimentConfig& c, const std::string& dir, RunResult& res) {
  const SystemParams p = c.system_params();
  const auto grid = logspace(c.sweep_eps_min, c.sweep_eps_max, c.sweep_eps_points);
  auto curves = sweep_fidelity_vs_epsilon(p, c.gamma_p_over_j_list, grid, c.u_over_j,
                                          protocol_options(c));
  for (const auto& curve : curves) {
    CsvWriter csv;
    csv.comment("fidelity versus eps/J");
    for (const auto& [k, v] : curve.meta) csv.comment(k + "=" + CsvWriter::format(v));
    csv.header({"eps_over_j", "fidelity"});
    for (std::size_t i = 0; i < curve.x.size(); ++i) csv.row({curve.x[i], curve.fidelity[i]});
    const std::string path =
        join_path(dir, "sweep_eps_gammap_" + fmt_g(curve.meta.at("gamma_p_over_j")) + ".csv");
    csv.write(path);
    res.files.push_back(path);
  }
  res.scalars["n_curves"] = static_cast<double>(curves.size());
}

void run_compensation(const ExperimentConfig& c, const std::string& dir, RunResult& res) {
  const SystemParams p = c.system_params();
  const auto grid = linspace(c.comp_domega_min, c.comp_domega_max, c.comp_points);
  auto curves = compensation_curve(c.delta_g_over_g_list, grid, p.g, p.j_hop);
  for (const auto& curve : curves) {
    CsvWriter csv;
    csv.comment("compensating detuning and post-compensation U/J");
    csv.comment("delta_g_over_g=" + CsvWriter::format(curve.delta_g_over_g));
    csv.comment("g_hz=" + CsvWriter::format(c.g_hz) + " j_hz=" + CsvWriter::format(c.j_hz));
    csv.header({"delta_omega0_over_g", "Delta_over_g", "U_over_J"});
    for (std::size_t i = 0; i < curve.delta_omega0_over_g.size(); ++i)
      csv.row({curve.delta_omega0_over_g[i], curve.detuning_over_g[i], curve.u_over_j[i]});
    const std::string path =
        join_path(dir, "compensation_dg_" + fmt_g(curve.delta_g_over_g) + ".csv");
    csv.write(path);
    res.files.push_back(path);
  }
  res.scalars["n_curves"] = static_cast<double>(curves.size());
}

void run_adiabatic(const ExperimentConfig& c, const std::string& dir, RunResult& res) {
  if (c.model_kind() != ModelKind::FullJC)
    throw ConfigError("adiabatic experiment requires model=full_jc");
  const SystemParams p = c.system_params();
  const int n_max = c.n_max >= 0 ? c.n_max : 4;
  const BasisPtr basis = build_basis(4, c.photon_cutoff, true, n_max);
  const OperatorMatrix h = build_lattice_hamiltonian(p, basis);
  EigenSystem n0 = diagonalize_sector(h, 0);
  EigenSystem n1 = diagonalize_sector(h, 1);
  EigenSystem n2 = diagonalize_sector(h, 2);
  NamedStates named = identify_named_states(n0, n1, n2);
  res.warnings.insert(res.warnings.end(), named.warnings.begin(), named.warnings.end());

  RampSpec ramp;
  ramp.omega_z_start = p.omega_z();
  ramp.omega_z_end = p.omega0 + c.delta_final_over_g * p.g;
  const double delta_span = ramp.omega_z_end - ramp.omega_z_start;
  if (delta_span == 0.0) throw ConfigError("adiabatic ramp has zero span");
  ramp.duration = std::abs(delta_span) / (c.adiabatic_ratio * 4.0 * p.g * p.g);

  IntegratorOptions integ;
  integ.rtol = c.tol;
  integ.atol = c.tol * 1e-4;
  RampResult r = adiabatic_ramp(p, ramp, named.psi_2_3, integ);
  res.warnings.insert(res.warnings.end(), r.warnings.begin(), r.warnings.end());
  const QuantumState target = spatial_entangled_pair(basis);
  const double overlap = overlap_squared(target, r.state);

  CsvWriter csv;
  csv.comment("adiabatic switch of |psi_2,3> into the photon pair state");
  csv.header({"adiabaticity_ratio", "ramp_duration_s", "delta_final_over_g", "overlap"});
  csv.row({r.adiabaticity_ratio, ramp.duration, c.delta_final_over_g, overlap});
  const std::string path = join_path(dir, "adiabatic.csv");
  csv.write(path);
  res.files.push_back(path);
  res.scalars["overlap"] = overlap;
  res.scalars["adiabaticity_ratio"] = r.adiabaticity_ratio;
  res.scalars["ramp_duration_s"] = ramp.duration;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config, const std::string& out_dir) {
  const auto t_start = std::chrono::steady_clock::now();
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw ConfigError("cannot create output directory: " + out_dir);

  RunResult res;
  res.warnings = config.warnings();
  switch (config.kind) {
    case ExperimentKind::Spectrum: run_spectrum(config, out_dir, res); break;
    case ExperimentKind::Degeneracy: run_degeneracy(config, out_dir, res); break;
    case ExperimentKind::Protocol: run_protocol_experiment(config, out_dir, res); break;
    case ExperimentKind::SweepU: run_sweep_u(config, out_dir, res); break;
    case ExperimentKind::SweepEps: run_sweep_eps(config, out_dir, res); break;
    case ExperimentKind::Compensation: run_compensation(config, out_dir, res); break;
    case ExperimentKind::Adiabatic: run_adiabatic(config, out_dir, res); break;
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  json manifest;
  manifest["experiment"] = to_string(config.kind);
  manifest["config"] = config_json(config);
  manifest["version"] = version_string();
  manifest["wall_time_s"] = wall;
  manifest["outputs"] = res.files;
  manifest["warnings"] = res.warnings;
  manifest["scalars"] = res.scalars;
  const std::string mpath = join_path(out_dir, "run_manifest.json");
  std::ofstream mout(mpath, std::ios::binary);
  if (!mout) throw ConfigError("cannot write manifest: " + mpath);
  mout << manifest.dump(2) << "\n";
  res.files.push_back(mpath);
  return res;
}

}  // namespace jcring
