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

#include <array>
#include <optional>
#include <vector>

#include "core/basis.hpp"

namespace jcring {

/// Physical parameters of the resonator-qubit ring. All angular (rad/s).
struct SystemParams {
  double omega0 = 0.0;   ///< resonator frequency
  double delta = 0.0;    ///< qubit-resonator detuning, omega_z - omega0
  double g = 0.0;        ///< resonator-qubit coupling
  double j_hop = 0.0;    ///< inter-resonator tunneling
  double kappa = 0.0;    ///< resonator damping rate
  double gamma_q = 0.0;  ///< qubit decoherence rate
  /// Per-site fabrication deviations (empty = uniform).
  std::vector<double> delta_omega0;
  std::vector<double> delta_g;

  double omega_z() const { return omega0 + delta; }
  bool uniform() const;
  double site_omega0(int j) const {
    return omega0 + (j < static_cast<int>(delta_omega0.size()) ? delta_omega0[j] : 0.0);
  }
  double site_g(int j) const {
    return g + (j < static_cast<int>(delta_g.size()) ? delta_g[j] : 0.0);
  }

  /// Throws on invalid values; returns warnings for regimes outside the
  /// assumptions of the pumping scheme (e.g. g < 5J).
  std::vector<std::string> validate() const;
};

/// One segment of a piecewise monochromatic drive on the resonators.
struct PulseSegment {
  std::array<cplx, 4> amplitudes{};  ///< eps_j, rad/s
  double omega_d = 0.0;              ///< drive frequency, rad/s
  double duration = 0.0;             ///< seconds

  std::vector<std::string> validate(double j_hop) const;
};

/// Effective lower-polariton lattice parameters. All angular (rad/s).
struct BoseHubbardParams {
  double onsite_energy = 0.0;     ///< omega_L, the single-polariton energy
  double hopping = 0.0;           ///< effective polariton hopping
  double u = 0.0;                 ///< self-interaction (Kerr strength)
  double gamma_p = 0.0;           ///< polariton damping rate
  double drive_projection = 1.0;  ///< amplitude scale of eps_j onto the polariton mode
};

/// Lattice Hamiltonian: per-site resonator-qubit cells plus nearest-neighbour
/// photon tunneling on a ring (site n couples back to site 1). Entries are
/// H/hbar in rad/s.
OperatorMatrix build_lattice_hamiltonian(const SystemParams& params, const BasisPtr& basis);

/// Lattice Hamiltonian with the qubit energy overridden to omega_z
/// (used by detuning ramps).
OperatorMatrix build_lattice_hamiltonian_at(const SystemParams& params, double omega_z,
                                            const BasisPtr& basis);

/// Time-dependent drive H_d(t)/hbar = sum_j (eps_j e^{-i w_d t} a_j^dag + h.c.).
/// The raising part is stored once; evaluate() assembles the matrix at time t.
struct DriveGenerator {
  OperatorMatrix raising;  ///< sum_j eps_j a_j^dag (rad/s)
  double omega_d = 0.0;

  SpMat evaluate(double t) const {
    const cplx ph = std::exp(cplx(0.0, -omega_d * t));
    return SpMat(ph * raising.mat + std::conj(ph) * SpMat(raising.mat.adjoint()));
  }
};

/// Drive on the resonator modes of `basis`. The drive never acts on qubits.
DriveGenerator build_drive_generator(const PulseSegment& segment, const BasisPtr& basis);

/// Drive projected onto the polariton modes of the effective model: the
/// amplitudes are scaled by bh.drive_projection.
DriveGenerator build_bose_hubbard_drive(const BoseHubbardParams& bh, const PulseSegment& segment,
                                        const BasisPtr& basis);

/// Effective polariton-lattice Hamiltonian on a bosonic 4-mode ring:
/// H/hbar = sum_j [w_L n_j + (U/2) n_j (n_j - 1)] + J_eff sum_j (b_j^dag b_j+1 + h.c.)
OperatorMatrix build_bose_hubbard(const BoseHubbardParams& bh, const BasisPtr& basis);

/// Lower-polariton effective parameters derived from the full model.
/// The hopping is J * alpha^2 and the drive projection alpha, where alpha is
/// the photon amplitude of the lower polariton (1/sqrt(2) at Delta = 0);
/// gamma_p defaults to (kappa + gamma_q)/2.
BoseHubbardParams effective_polariton_params(const SystemParams& params);

/// Tunneling rate from the capacitive-coupling geometry: J = omega0 * C1/Cr.
double tunneling_from_capacitance(double omega0, double c_coupling, double c_resonator,
                                  std::vector<std::string>* warnings = nullptr);

/// Detuning that restores the single lower-polariton energy to omega0 - g in
/// the presence of fabrication deviations (delta_g, delta_omega0):
/// Delta = [(delta_g + g)^2 - (delta_omega0 + g)^2] / (delta_omega0 + g)
double compensating_detuning(double g, double delta_g, double delta_omega0);

}  // namespace jcring
