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

#include "core/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "core/spectrum.hpp"

namespace jcring {

namespace {

struct SchrodingerRhs {
  const SpMat* h;
  const SpMat* d_plus = nullptr;
  SpMat d_minus_store;
  double omega_d = 0.0;
  mutable Eigen::VectorXcd tmp;

  void operator()(double t, const Eigen::VectorXcd& y, Eigen::VectorXcd& out) const {
    out.noalias() = (*h) * y;
    if (d_plus) {
      const cplx ph = std::exp(cplx(0.0, -omega_d * t));
      tmp.noalias() = (*d_plus) * y;
      out += ph * tmp;
      tmp.noalias() = d_minus_store * y;
      out += std::conj(ph) * tmp;
    }
    out *= cplx(0.0, -1.0);
  }
};

struct PreparedChannel {
  SpMat l;
  SpMat ldl;  // L^dag L
  double rate;
};

struct LindbladRhs {
  const SpMat* h;
  const SpMat* d_plus = nullptr;
  SpMat d_minus_store;
  double omega_d = 0.0;
  std::vector<PreparedChannel> channels;
  mutable Eigen::MatrixXcd t1, t2;

  void operator()(double t, const Eigen::MatrixXcd& rho, Eigen::MatrixXcd& out) const {
    // -i [H + D(t), rho]
    out.noalias() = (*h) * rho;
    t1.noalias() = rho * (*h);
    out -= t1;
    if (d_plus) {
      const cplx ph = std::exp(cplx(0.0, -omega_d * t));
      t1.noalias() = (*d_plus) * rho;
      t2.noalias() = rho * (*d_plus);
      out += ph * (t1 - t2);
      t1.noalias() = d_minus_store * rho;
      t2.noalias() = rho * d_minus_store;
      out += std::conj(ph) * (t1 - t2);
    }
    out *= cplx(0.0, -1.0);
    for (const auto& c : channels) {
      t1.noalias() = c.l * rho;
      t2.noalias() = t1 * SpMat(c.l.adjoint());
      out += c.rate * t2;
      t1.noalias() = c.ldl * rho;
      t2.noalias() = rho * c.ldl;
      out -= (0.5 * c.rate) * (t1 + t2);
    }
  }
};

std::vector<double> with_final(std::vector<double> times, double t0, double t1) {
  const double slack = 1e-12 * (std::abs(t0) + std::abs(t1)) + 1e-30;
  for (double t : times)
    if (t < t0 - slack || t > t1 + slack)
      throw InvalidArgumentError("sample time outside evolution span");
  if (times.empty() || times.back() < t1) times.push_back(t1);
  return times;
}

void check_density_sample(Eigen::MatrixXcd& rho, double t, double trace0,
                          const LindbladOptions& opts) {
  rho = 0.5 * (rho + rho.adjoint().eval());
  const double tr = rho.real().trace();
  if (std::abs(tr - trace0) > opts.trace_tolerance)
    throw NumericError("evolve_lindblad: trace drift " + std::to_string(tr - trace0) +
                       " at t=" + std::to_string(t));
  if (opts.check_positivity) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    const double mineig = es.eigenvalues().minCoeff();
    if (mineig < opts.positivity_floor)
      throw NumericError("evolve_lindblad: positivity violation, min eigenvalue " +
                         std::to_string(mineig) + " at t=" + std::to_string(t));
  }
}

std::vector<PreparedChannel> prepare_channels(const std::vector<CollapseChannel>& channels,
                                              const FockBasis& basis) {
  std::vector<PreparedChannel> out;
  out.reserve(channels.size());
  for (const auto& c : channels) {
    if (c.rate < 0.0) throw InvalidArgumentError("collapse channel rate must be >= 0");
    if (!c.op.basis || !same_basis(*c.op.basis, basis))
      throw InvalidArgumentError("collapse channel basis mismatch");
    PreparedChannel p;
    p.l = c.op.mat;
    p.ldl = SpMat(c.op.mat.adjoint()) * c.op.mat;
    p.rate = c.rate;
    out.push_back(std::move(p));
  }
  return out;
}

// e^{i phi N} applied componentwise; N is the per-index excitation number.
void rotate_state(Eigen::VectorXcd& amp, const std::vector<int>& exc, double phi) {
  for (int i = 0; i < amp.size(); ++i) amp[i] *= std::exp(cplx(0.0, phi * exc[i]));
}

void rotate_density(Eigen::MatrixXcd& rho, const std::vector<int>& exc, double phi) {
  for (int c = 0; c < rho.cols(); ++c)
    for (int r = 0; r < rho.rows(); ++r)
      rho(r, c) *= std::exp(cplx(0.0, phi * (exc[r] - exc[c])));
}

std::vector<int> excitation_table(const FockBasis& basis) {
  std::vector<int> exc(basis.dimension());
  for (int i = 0; i < basis.dimension(); ++i) exc[i] = basis.excitation(i);
  return exc;
}

}  // namespace

std::vector<QuantumState> evolve_schrodinger(const OperatorMatrix& h, const DriveGenerator* drive,
                                             const QuantumState& psi0, double t0, double t1,
                                             const std::vector<double>& sample_times,
                                             const IntegratorOptions& opts) {
  if (!h.basis || psi0.amp.size() != h.mat.rows())
    throw InvalidArgumentError("evolve_schrodinger: dimension mismatch");
  SchrodingerRhs rhs;
  rhs.h = &h.mat;
  if (drive) {
    if (drive->raising.mat.rows() != h.mat.rows())
      throw InvalidArgumentError("evolve_schrodinger: drive dimension mismatch");
    rhs.d_plus = &drive->raising.mat;
    rhs.d_minus_store = drive->raising.mat.adjoint();
    rhs.omega_d = drive->omega_d;
  }
  AdaptiveRk<Eigen::VectorXcd, SchrodingerRhs&> rk(rhs, opts);

  std::vector<QuantumState> traj;
  Eigen::VectorXcd y = psi0.amp;
  double t = t0;
  for (double ts : with_final(sample_times, t0, t1)) {
    rk.integrate(y, t, ts);
    t = ts;
    traj.push_back({h.basis, y, t});
  }
  return traj;
}

std::vector<DensityMatrix> evolve_lindblad(const OperatorMatrix& h, const DriveGenerator* drive,
                                           const std::vector<CollapseChannel>& channels,
                                           const DensityMatrix& rho0, double t0, double t1,
                                           const std::vector<double>& sample_times,
                                           const LindbladOptions& opts) {
  if (!h.basis || rho0.rho.rows() != h.mat.rows() || rho0.rho.cols() != h.mat.cols())
    throw InvalidArgumentError("evolve_lindblad: dimension mismatch");
  LindbladRhs rhs;
  rhs.h = &h.mat;
  if (drive) {
    rhs.d_plus = &drive->raising.mat;
    rhs.d_minus_store = drive->raising.mat.adjoint();
    rhs.omega_d = drive->omega_d;
  }
  rhs.channels = prepare_channels(channels, *h.basis);
  AdaptiveRk<Eigen::MatrixXcd, LindbladRhs&> rk(rhs, opts.integ);

  const double trace0 = rho0.rho.real().trace();
  std::vector<DensityMatrix> traj;
  Eigen::MatrixXcd y = rho0.rho;
  double t = t0;
  for (double ts : with_final(sample_times, t0, t1)) {
    rk.integrate(y, t, ts);
    t = ts;
    check_density_sample(y, t, trace0, opts);
    traj.push_back({h.basis, y, t});
  }
  return traj;
}

QuantumState evolve_pulsed_state(const OperatorMatrix& h, const OperatorMatrix& n_op,
                                 const std::vector<PulseSegment>& segments,
                                 const std::vector<DriveGenerator>& drives,
                                 const QuantumState& psi0, Frame frame,
                                 const IntegratorOptions& opts, const SegmentCallback& on_boundary) {
  if (segments.size() != drives.size())
    throw InvalidArgumentError("evolve_pulsed_state: segments/drives size mismatch");
  if (n_op.mat.rows() != h.mat.rows())
    throw InvalidArgumentError("evolve_pulsed_state: excitation operator dimension mismatch");
  const auto exc = excitation_table(*h.basis);

  QuantumState psi = psi0;
  if (on_boundary) on_boundary(0, psi);
  double t = psi0.time;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const double t_end = t + segments[k].duration;
    if (frame == Frame::Lab) {
      auto traj = evolve_schrodinger(h, &drives[k], psi, t, t_end, {}, opts);
      psi = traj.back();
    } else {
      const double wd = drives[k].omega_d;
      SpMat h_rot = h.mat - wd * n_op.mat + drives[k].raising.mat +
                    SpMat(drives[k].raising.mat.adjoint());
      OperatorMatrix hr{h.basis, std::move(h_rot)};
      rotate_state(psi.amp, exc, wd * t);
      auto traj = evolve_schrodinger(hr, nullptr, psi, t, t_end, {}, opts);
      psi = traj.back();
      rotate_state(psi.amp, exc, -wd * t_end);
    }
    psi.time = t = t_end;
    if (on_boundary) on_boundary(static_cast<int>(k) + 1, psi);
  }
  return psi;
}

DensityMatrix evolve_pulsed_density(const OperatorMatrix& h, const OperatorMatrix& n_op,
                                    const std::vector<PulseSegment>& segments,
                                    const std::vector<DriveGenerator>& drives,
                                    const std::vector<CollapseChannel>& channels,
                                    const DensityMatrix& rho0, Frame frame,
                                    const LindbladOptions& opts,
                                    const SegmentCallbackRho& on_boundary) {
  if (segments.size() != drives.size())
    throw InvalidArgumentError("evolve_pulsed_density: segments/drives size mismatch");
  const auto exc = excitation_table(*h.basis);

  DensityMatrix rho = rho0;
  if (on_boundary) on_boundary(0, rho);
  double t = rho0.time;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const double t_end = t + segments[k].duration;
    if (frame == Frame::Lab) {
      auto traj = evolve_lindblad(h, &drives[k], channels, rho, t, t_end, {}, opts);
      rho = traj.back();
    } else {
      const double wd = drives[k].omega_d;
      SpMat h_rot = h.mat - wd * n_op.mat + drives[k].raising.mat +
                    SpMat(drives[k].raising.mat.adjoint());
      OperatorMatrix hr{h.basis, std::move(h_rot)};
      rotate_density(rho.rho, exc, wd * t);
      auto traj = evolve_lindblad(hr, nullptr, channels, rho, t, t_end, {}, opts);
      rho = traj.back();
      rotate_density(rho.rho, exc, -wd * t_end);
    }
    rho.time = t = t_end;
    if (on_boundary) on_boundary(static_cast<int>(k) + 1, rho);
  }
  return rho;
}

RampResult adiabatic_ramp(const SystemParams& params, const RampSpec& ramp,
                          const QuantumState& psi_init, const IntegratorOptions& opts) {
  if (!(ramp.duration > 0.0)) throw InvalidArgumentError("adiabatic_ramp: duration must be > 0");
  if (!psi_init.basis) throw InvalidArgumentError("adiabatic_ramp: state without basis");
  RampResult result;
  result.warnings = params.validate();
  const BasisPtr basis = psi_init.basis;

  // H(omega_z) = H_base + omega_z * Sz/2 summed over sites.
  const OperatorMatrix h_base = build_lattice_hamiltonian_at(params, 0.0, basis);
  SpMat sz_half(basis->dimension(), basis->dimension());
  for (int j = 0; j < basis->n_sites(); ++j)
    sz_half += 0.5 * site_operator(basis, j, SiteOperator::SigmaZ).mat;

  // Restrict to the excitation sectors carrying amplitude; the ramp conserves N.
  std::vector<int> idx;
  {
    std::vector<bool> keep_sector;
    for (int i = 0; i < basis->dimension(); ++i) {
      const int n = basis->excitation(i);
      if (static_cast<int>(keep_sector.size()) <= n) keep_sector.resize(n + 1, false);
      if (std::norm(psi_init.amp[i]) > 1e-24) keep_sector[n] = true;
    }
    for (int i = 0; i < basis->dimension(); ++i)
      if (keep_sector[basis->excitation(i)]) idx.push_back(i);
  }
  const int k = static_cast<int>(idx.size());
  Eigen::MatrixXcd h0 = Eigen::MatrixXcd::Zero(k, k);
  Eigen::MatrixXcd sz = Eigen::MatrixXcd::Zero(k, k);
  {
    std::vector<int> pos(basis->dimension(), -1);
    for (int r = 0; r < k; ++r) pos[idx[r]] = r;
    for (int c = 0; c < k; ++c) {
      for (SpMat::InnerIterator it(h_base.mat, idx[c]); it; ++it)
        if (pos[it.row()] >= 0) h0(pos[it.row()], c) = it.value();
      for (SpMat::InnerIterator it(sz_half, idx[c]); it; ++it)
        if (pos[it.row()] >= 0) sz(pos[it.row()], c) = it.value();
    }
  }
  // Rotating frame at omega0 * N removes the fast carrier.
  Eigen::VectorXd n_diag(k);
  for (int r = 0; r < k; ++r) n_diag[r] = basis->excitation(idx[r]);
  for (int r = 0; r < k; ++r) h0(r, r) -= params.omega0 * n_diag[r];

  Eigen::VectorXcd y(k);
  for (int r = 0; r < k; ++r) y[r] = psi_init.amp[idx[r]];

  // Warn when the initial state is not close to an eigenstate of H(start).
  {
    Eigen::MatrixXcd h_start = h0 + ramp.omega_z_start * sz;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h_start);
    double best = 0.0;
    for (int i = 0; i < k; ++i)
      best = std::max(best, std::norm(es.eigenvectors().col(i).dot(y)));
    if (best < 0.99)
      result.warnings.push_back("adiabatic_ramp: initial state overlaps nearest eigenstate by " +
                                std::to_string(best));
  }

  const double rate = (ramp.omega_z_end - ramp.omega_z_start) / ramp.duration;
  struct RampRhs {
    const Eigen::MatrixXcd* h0;
    const Eigen::MatrixXcd* sz;
    double w0, rate, t_origin;
    mutable Eigen::VectorXcd tmp;
    void operator()(double t, const Eigen::VectorXcd& y, Eigen::VectorXcd& out) const {
      const double wz = w0 + rate * (t - t_origin);
      out.noalias() = (*h0) * y;
      tmp.noalias() = (*sz) * y;
      out += wz * tmp;
      out *= cplx(0.0, -1.0);
    }
  };
  RampRhs rhs{&h0, &sz, ramp.omega_z_start, rate, psi_init.time, {}};
  AdaptiveRk<Eigen::VectorXcd, RampRhs&> rk(rhs, opts);
  rk.integrate(y, psi_init.time, psi_init.time + ramp.duration);

  QuantumState out;
  out.basis = basis;
  out.time = psi_init.time + ramp.duration;
  out.amp = Eigen::VectorXcd::Zero(basis->dimension());
  for (int r = 0; r < k; ++r)
    out.amp[idx[r]] = y[r] * std::exp(cplx(0.0, -params.omega0 * n_diag[r] * ramp.duration));

  result.state = std::move(out);
  result.adiabaticity_ratio = std::abs(rate) / (4.0 * params.g * params.g);
  return result;
}

}  // namespace jcring
