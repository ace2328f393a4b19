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

#include "core/protocol.hpp"

#include <Eigen/Eigenvalues>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace jcring {

Schedule build_two_pulse_schedule(const SystemParams& params, double epsilon,
                                  std::vector<std::string>* warnings) {
  if (!(epsilon > 0.0)) throw InvalidArgumentError("build_two_pulse_schedule: epsilon must be > 0");
  Schedule sched;
  PulseSegment p1;
  p1.amplitudes = {cplx(epsilon), cplx(epsilon), cplx(epsilon), cplx(epsilon)};
  p1.omega_d = params.omega0 - params.g + params.j_hop;
  p1.duration = pi / (2.0 * std::sqrt(2.0) * epsilon);
  PulseSegment p2;
  p2.amplitudes = {cplx(epsilon), cplx(-epsilon), cplx(epsilon), cplx(-epsilon)};
  p2.omega_d = params.omega0 - params.g - params.j_hop;
  p2.duration = pi / (2.0 * epsilon);
  if (warnings) {
    auto w1 = p1.validate(params.j_hop);
    warnings->insert(warnings->end(), w1.begin(), w1.end());
  }
  sched.segments = {p1, p2};
  return sched;
}

namespace {

struct PreparedModel {
  BasisPtr basis;
  OperatorMatrix h;
  OperatorMatrix n_op;
  std::vector<CollapseChannel> channels;  // all channels, including zero-rate
  std::vector<DriveGenerator> drives;
  NamedStates named;
};

PreparedModel prepare_model(ModelKind model, const SystemParams& params, const Schedule& sched,
                            const ProtocolOptions& opts, std::vector<std::string>* warnings) {
  PreparedModel m;
  if (model == ModelKind::FullJC) {
    const int n_max = opts.n_max.value_or(4);
    m.basis = build_basis(4, opts.photon_cutoff, true, n_max);
    m.h = build_lattice_hamiltonian(params, m.basis);
    for (int j = 0; j < 4; ++j) {
      m.channels.push_back({site_operator(m.basis, j, SiteOperator::Annihilate), params.kappa});
      m.channels.push_back({site_operator(m.basis, j, SiteOperator::SigmaMinus), params.gamma_q});
    }
    for (const auto& seg : sched.segments)
      m.drives.push_back(build_drive_generator(seg, m.basis));
  } else {
    const int n_max = opts.n_max.value_or(-1);
    m.basis = build_basis(4, opts.photon_cutoff, false, n_max);
    BoseHubbardParams bh = effective_polariton_params(params);
    if (opts.u_override) bh.u = *opts.u_override;
    if (opts.gamma_p_override) bh.gamma_p = *opts.gamma_p_override;
    m.h = build_bose_hubbard(bh, m.basis);
    for (int j = 0; j < 4; ++j)
      m.channels.push_back({site_operator(m.basis, j, SiteOperator::Annihilate), bh.gamma_p});
    for (const auto& seg : sched.segments)
      m.drives.push_back(build_bose_hubbard_drive(bh, seg, m.basis));
  }
  m.n_op = total_excitation_operator(m.basis);

  EigenSystem n0 = diagonalize_sector(m.h, 0);
  EigenSystem n1 = diagonalize_sector(m.h, 1);
  EigenSystem n2 = diagonalize_sector(m.h, 2);
  m.named = identify_named_states(n0, n1, n2);
  if (warnings)
    warnings->insert(warnings->end(), m.named.warnings.begin(), m.named.warnings.end());
  return m;
}

double min_eigenvalue(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

ProtocolResult run_protocol(ModelKind model, const SystemParams& params, double epsilon,
                            bool dissipation, const ProtocolOptions& opts) {
  ProtocolResult result;
  result.warnings = params.validate();
  result.schedule = build_two_pulse_schedule(params, epsilon, &result.warnings);
  result.total_duration = result.schedule.total_duration();

  PreparedModel m = prepare_model(model, params, result.schedule, opts, &result.warnings);
  result.named = m.named;

  std::vector<CollapseChannel> active;
  if (dissipation)
    for (const auto& c : m.channels)
      if (c.rate > 0.0) active.push_back(c);
  result.pure_state = active.empty();

  IntegratorOptions integ;
  integ.rtol = opts.rtol;
  integ.atol = opts.rtol * 1e-4;

  // Subdivide segments for trajectory sampling; the frame bookkeeping is
  // exact at every sub-boundary so this changes nothing but the dump density.
  std::vector<PulseSegment> segs;
  std::vector<DriveGenerator> drives;
  std::vector<bool> true_boundary = {true};  // entry 0: the initial state
  const int nsub = std::max(1, opts.samples_per_segment);
  for (std::size_t k = 0; k < result.schedule.segments.size(); ++k) {
    PulseSegment sub = result.schedule.segments[k];
    sub.duration /= nsub;
    for (int s = 0; s < nsub; ++s) {
      segs.push_back(sub);
      drives.push_back(m.drives[k]);
      true_boundary.push_back(s == nsub - 1);
    }
  }

  const auto record = [&](int done, double t, auto&& pop, double trace, double min_eig) {
    TrajectoryPoint p;
    p.time = t;
    p.pop_ground = pop(m.named.ground);
    p.pop_psi_1_4 = pop(m.named.psi_1_4);
    p.pop_psi_2_3 = pop(m.named.psi_2_3);
    p.fidelity = p.pop_psi_2_3;
    p.trace = trace;
    p.min_eig = min_eig;
    p.segment_boundary = true_boundary[done];
    result.trajectory.push_back(p);
  };

  if (result.pure_state) {
    QuantumState psi{m.basis, m.named.ground.amp, 0.0};
    auto cb = [&](int done, const QuantumState& s) {
      record(done, s.time, [&](const QuantumState& ref) { return overlap_squared(ref, s); },
             s.amp.squaredNorm(), 0.0);
    };
    result.psi_final = evolve_pulsed_state(m.h, m.n_op, segs, drives, psi, opts.frame, integ, cb);
    result.fidelity = overlap_squared(m.named.psi_2_3, result.psi_final);
  } else {
    DensityMatrix rho{m.basis,
                      m.named.ground.amp * m.named.ground.amp.adjoint(), 0.0};
    LindbladOptions lopts;
    lopts.integ = integ;
    auto cb = [&](int done, const DensityMatrix& r) {
      record(done, r.time, [&](const QuantumState& ref) { return state_fidelity(ref, r); },
             r.rho.real().trace(), min_eigenvalue(r.rho));
    };
    result.rho_final = evolve_pulsed_density(m.h, m.n_op, segs, drives, active, rho, opts.frame,
                                             lopts, cb);
    result.fidelity = state_fidelity(m.named.psi_2_3, result.rho_final);
  }

  if (result.fidelity < -1e-9 || result.fidelity > 1.0 + 1e-9)
    throw NumericError("run_protocol: fidelity outside [0, 1]");
  return result;
}

Eigen::Matrix4d momentum_matrix() {
  Eigen::Matrix4d m;
  m << 1, -1, -1, 1,
      -1, 1, -1, 1,
      -1, -1, 1, 1,
      1, 1, 1, 1;
  return 0.5 * m;
}

OperatorMatrix momentum_mode_creator(const BasisPtr& basis, int m) {
  if (m < 0 || m >= 4) throw InvalidArgumentError("momentum_mode_creator: mode out of range");
  if (!basis || basis->n_sites() != 4)
    throw InvalidArgumentError("momentum_mode_creator: expected a 4-mode basis");
  const Eigen::Matrix4d mm = momentum_matrix();
  SpMat out(basis->dimension(), basis->dimension());
  for (int k = 0; k < 4; ++k)
    out += mm(m, k) * site_operator(basis, k, SiteOperator::Create).mat;
  return {basis, std::move(out)};
}

namespace {

QuantumState vacuum_state(const BasisPtr& basis) {
  QuantumState s;
  s.basis = basis;
  s.amp = Eigen::VectorXcd::Zero(basis->dimension());
  const int vac = basis->index_of(0);  // all sites in (n=0, qubit down)
  if (vac < 0) throw InvalidArgumentError("vacuum state missing from basis");
  s.amp[vac] = 1.0;
  return s;
}

QuantumState pair_state(const BasisPtr& basis, const OperatorMatrix& c1, const OperatorMatrix& c3,
                        const OperatorMatrix& c2, const OperatorMatrix& c4) {
  QuantumState vac = vacuum_state(basis);
  Eigen::VectorXcd amp = (c1.mat * (c3.mat * vac.amp) - c2.mat * (c4.mat * vac.amp)) /
                         std::sqrt(2.0);
  return {basis, std::move(amp), 0.0};
}

}  // namespace

QuantumState spatial_entangled_pair(const BasisPtr& basis) {
  return pair_state(basis, site_operator(basis, 0, SiteOperator::Create),
                    site_operator(basis, 2, SiteOperator::Create),
                    site_operator(basis, 1, SiteOperator::Create),
                    site_operator(basis, 3, SiteOperator::Create));
}

QuantumState momentum_entangled_pair(const BasisPtr& basis) {
  return pair_state(basis, momentum_mode_creator(basis, 0), momentum_mode_creator(basis, 2),
                    momentum_mode_creator(basis, 1), momentum_mode_creator(basis, 3));
}

Eigen::Matrix4cd to_momentum_pair_coefficients(const Eigen::Matrix4cd& spatial) {
  const Eigen::Matrix4d m = momentum_matrix();
  return m.cast<cplx>() * spatial * m.transpose().cast<cplx>();
}

cplx raising_matrix_element(const DriveGenerator& drive, const QuantumState& to,
                            const QuantumState& from) {
  if (to.amp.size() != drive.raising.mat.rows() || from.amp.size() != drive.raising.mat.cols())
    throw InvalidArgumentError("raising_matrix_element: dimension mismatch");
  return to.amp.dot(drive.raising.mat * from.amp);
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) return {lo};
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

std::vector<double> logspace(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > 0.0)) throw InvalidArgumentError("logspace: bounds must be > 0");
  if (n < 2) return {lo};
  std::vector<double> v(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i) v[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  return v;
}

namespace {

// Run points concurrently; results land in their slot, so output order is
// deterministic regardless of scheduling.
template <class Fn>
void parallel_for_index(int n, Fn&& fn) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(n));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<FidelityCurve> sweep_fidelity_vs_u(const SystemParams& params,
                                               const std::vector<double>& eps_over_j,
                                               const std::vector<double>& u_over_j_grid,
                                               double gamma_p_over_j,
                                               const ProtocolOptions& opts) {
  std::vector<FidelityCurve> curves;
  for (double er : eps_over_j) {
    FidelityCurve c;
    c.label = "eps_over_j=" + std::to_string(er);
    c.meta["eps_over_j"] = er;
    c.meta["gamma_p_over_j"] = gamma_p_over_j;
    c.x = u_over_j_grid;
    c.fidelity.assign(u_over_j_grid.size(), 0.0);
    curves.push_back(std::move(c));
  }
  const int nx = static_cast<int>(u_over_j_grid.size());
  const int total = static_cast<int>(eps_over_j.size()) * nx;
  parallel_for_index(total, [&](int t) {
    const int ci = t / nx, xi = t % nx;
    ProtocolOptions o = opts;
    o.u_override = u_over_j_grid[xi] * params.j_hop;
    o.gamma_p_override = gamma_p_over_j * params.j_hop;
    const double eps = eps_over_j[ci] * params.j_hop;
    curves[ci].fidelity[xi] =
        run_protocol(ModelKind::BoseHubbard, params, eps, true, o).fidelity;
  });
  return curves;
}

std::vector<FidelityCurve> sweep_fidelity_vs_epsilon(const SystemParams& params,
                                                     const std::vector<double>& gamma_p_over_j,
                                                     const std::vector<double>& eps_over_j_grid,
                                                     double u_over_j,
                                                     const ProtocolOptions& opts) {
  std::vector<FidelityCurve> curves;
  for (double gr : gamma_p_over_j) {
    FidelityCurve c;
    c.label = "gamma_p_over_j=" + std::to_string(gr);
    c.meta["gamma_p_over_j"] = gr;
    c.meta["u_over_j"] = u_over_j;
    c.x = eps_over_j_grid;
    c.fidelity.assign(eps_over_j_grid.size(), 0.0);
    curves.push_back(std::move(c));
  }
  const int nx = static_cast<int>(eps_over_j_grid.size());
  const int total = static_cast<int>(gamma_p_over_j.size()) * nx;
  parallel_for_index(total, [&](int t) {
    const int ci = t / nx, xi = t % nx;
    ProtocolOptions o = opts;
    o.u_override = u_over_j * params.j_hop;
    o.gamma_p_override = gamma_p_over_j[ci] * params.j_hop;
    const double eps = eps_over_j_grid[xi] * params.j_hop;
    curves[ci].fidelity[xi] =
        run_protocol(ModelKind::BoseHubbard, params, eps, true, o).fidelity;
  });
  return curves;
}

std::vector<CompensationCurve> compensation_curve(const std::vector<double>& delta_g_over_g,
                                                  const std::vector<double>& delta_omega0_over_g,
                                                  double g, double j_hop) {
  if (!(g > 0.0) || !(j_hop > 0.0))
    throw InvalidArgumentError("compensation_curve: g and J must be > 0");
  std::vector<CompensationCurve> out;
  for (double dgr : delta_g_over_g) {
    CompensationCurve c;
    c.delta_g_over_g = dgr;
    for (double dwr : delta_omega0_over_g) {
      const double dg = dgr * g;
      const double dw = dwr * g;
      const double det = compensating_detuning(g, dg, dw);
      // Post-compensation interaction from the shifted polariton ladder.
      const double u = effective_kerr_u(0.0, det, g + dg);
      c.delta_omega0_over_g.push_back(dwr);
      c.detuning_over_g.push_back(det / g);
      c.u_over_j.push_back(u / j_hop);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace jcring
