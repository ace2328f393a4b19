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

#include "core/model.hpp"

#include <cmath>

#include "core/spectrum.hpp"

namespace jcring {

bool SystemParams::uniform() const {
  for (double d : delta_omega0)
    if (d != 0.0) return false;
  for (double d : delta_g)
    if (d != 0.0) return false;
  return true;
}

std::vector<std::string> SystemParams::validate() const {
  if (!(g > 0.0)) throw InvalidArgumentError("SystemParams: g must be > 0");
  if (j_hop < 0.0) throw InvalidArgumentError("SystemParams: J must be >= 0");
  if (kappa < 0.0) throw InvalidArgumentError("SystemParams: kappa must be >= 0");
  if (gamma_q < 0.0) throw InvalidArgumentError("SystemParams: gamma_q must be >= 0");
  std::vector<std::string> warnings;
  if (g < 5.0 * j_hop)
    warnings.push_back("g < 5J: outside the strong-coupling regime assumed by the scheme");
  return warnings;
}

std::vector<std::string> PulseSegment::validate(double j_hop) const {
  if (!(duration > 0.0)) throw InvalidArgumentError("PulseSegment: duration must be > 0");
  std::vector<std::string> warnings;
  double amax = 0.0;
  for (const cplx& a : amplitudes) amax = std::max(amax, std::abs(a));
  if (j_hop > 0.0 && amax > j_hop / 5.0)
    warnings.push_back("drive amplitude above J/5: off-resonant transitions are not negligible");
  return warnings;
}

namespace {

// Ring bonds (j, j+1): none for a single cell, one bond for two sites so the
// pair is not coupled twice, the full ring for three or more.
std::vector<std::pair<int, int>> ring_bonds(int n) {
  std::vector<std::pair<int, int>> bonds;
  if (n == 2) bonds.emplace_back(0, 1);
  if (n >= 3)
    for (int j = 0; j < n; ++j) bonds.emplace_back(j, (j + 1) % n);
  return bonds;
}

}  // namespace

OperatorMatrix build_lattice_hamiltonian_at(const SystemParams& params, double omega_z,
                                            const BasisPtr& basis) {
  if (!basis) throw InvalidArgumentError("build_lattice_hamiltonian: null basis");
  if (!basis->has_qubits())
    throw InvalidArgumentError("build_lattice_hamiltonian: basis must include qubits");
  const int n = basis->n_sites();
  const int dim = basis->dimension();

  SpMat h(dim, dim);
  // Diagonal part: photon energies and qubit splitting.
  {
    std::vector<Eigen::Triplet<cplx>> trip;
    trip.reserve(dim);
    for (int i = 0; i < dim; ++i) {
      double e = 0.0;
      for (int j = 0; j < n; ++j) {
        e += params.site_omega0(j) * basis->photons(i, j);
        e += 0.5 * omega_z * (basis->qubit(i, j) == 1 ? 1.0 : -1.0);
      }
      if (e != 0.0) trip.emplace_back(i, i, e);
    }
    h.setFromTriplets(trip.begin(), trip.end());
  }
  // Qubit-resonator exchange per cell.
  for (int j = 0; j < n; ++j) {
    SpMat ex = site_operator(basis, j, SiteOperator::Create).mat *
               site_operator(basis, j, SiteOperator::SigmaMinus).mat;
    h += params.site_g(j) * (ex + SpMat(ex.adjoint()));
  }
  // Photon tunneling around the ring.
  for (auto [a, b] : ring_bonds(n)) {
    SpMat hop = site_operator(basis, a, SiteOperator::Create).mat *
                site_operator(basis, b, SiteOperator::Annihilate).mat;
    h += params.j_hop * (hop + SpMat(hop.adjoint()));
  }
  h.makeCompressed();
  return {basis, std::move(h)};
}

OperatorMatrix build_lattice_hamiltonian(const SystemParams& params, const BasisPtr& basis) {
  return build_lattice_hamiltonian_at(params, params.omega_z(), basis);
}

DriveGenerator build_drive_generator(const PulseSegment& segment, const BasisPtr& basis) {
  if (!basis) throw InvalidArgumentError("build_drive_generator: null basis");
  const int n = basis->n_sites();
  const int dim = basis->dimension();
  SpMat raising(dim, dim);
  for (int j = 0; j < n && j < 4; ++j) {
    if (segment.amplitudes[j] == cplx(0.0)) continue;
    raising += segment.amplitudes[j] * site_operator(basis, j, SiteOperator::Create).mat;
  }
  raising.makeCompressed();
  return DriveGenerator{OperatorMatrix{basis, std::move(raising)}, segment.omega_d};
}

DriveGenerator build_bose_hubbard_drive(const BoseHubbardParams& bh, const PulseSegment& segment,
                                        const BasisPtr& basis) {
  PulseSegment scaled = segment;
  for (cplx& a : scaled.amplitudes) a *= bh.drive_projection;
  return build_drive_generator(scaled, basis);
}

OperatorMatrix build_bose_hubbard(const BoseHubbardParams& bh, const BasisPtr& basis) {
  if (!basis) throw InvalidArgumentError("build_bose_hubbard: null basis");
  if (basis->has_qubits())
    throw InvalidArgumentError("build_bose_hubbard: expected a bosonic basis without qubits");
  const int n = basis->n_sites();
  const int dim = basis->dimension();

  SpMat h(dim, dim);
  {
    std::vector<Eigen::Triplet<cplx>> trip;
    trip.reserve(dim);
    for (int i = 0; i < dim; ++i) {
      double e = 0.0;
      for (int j = 0; j < n; ++j) {
        const double nj = basis->photons(i, j);
        e += bh.onsite_energy * nj + 0.5 * bh.u * nj * (nj - 1.0);
      }
      if (e != 0.0) trip.emplace_back(i, i, e);
    }
    h.setFromTriplets(trip.begin(), trip.end());
  }
  for (auto [a, b] : ring_bonds(n)) {
    SpMat hop = site_operator(basis, a, SiteOperator::Create).mat *
                site_operator(basis, b, SiteOperator::Annihilate).mat;
    h += bh.hopping * (hop + SpMat(hop.adjoint()));
  }
  h.makeCompressed();
  return {basis, std::move(h)};
}

BoseHubbardParams effective_polariton_params(const SystemParams& params) {
  params.validate();
  BoseHubbardParams bh;
  bh.onsite_energy = polariton_energy(params.omega0, params.delta, params.g, 1, Branch::Lower);
  // Photon amplitude of the lower polariton: eigenvector of
  // [[0, g], [g, Delta]] at the lower eigenvalue.
  const double e_rel = 0.5 * params.delta - std::sqrt(0.25 * params.delta * params.delta +
                                                      params.g * params.g);
  const double alpha2 = params.g * params.g / (params.g * params.g + e_rel * e_rel);
  bh.hopping = params.j_hop * alpha2;
  bh.drive_projection = std::sqrt(alpha2);
  bh.u = effective_kerr_u(params.omega0, params.delta, params.g);
  bh.gamma_p = 0.5 * (params.kappa + params.gamma_q);
  return bh;
}

double tunneling_from_capacitance(double omega0, double c_coupling, double c_resonator,
                                  std::vector<std::string>* warnings) {
  if (c_coupling < 0.0 || !(c_resonator > 0.0))
    throw InvalidArgumentError("tunneling_from_capacitance: capacitances must be positive");
  if (warnings && c_coupling > 0.1 * c_resonator)
    warnings->push_back("coupling capacitance is not small against the resonator capacitance");
  return omega0 * c_coupling / c_resonator;
}

double compensating_detuning(double g, double delta_g, double delta_omega0) {
  const double denom = delta_omega0 + g;
  if (std::abs(denom) < 1e-12 * std::abs(g))
    throw InvalidArgumentError("compensating_detuning: singular denominator delta_omega0 + g");
  const double gp = delta_g + g;
  return (gp * gp - denom * denom) / denom;
}

}  // namespace jcring
