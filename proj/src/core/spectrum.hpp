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
#include <vector>

#include "core/basis.hpp"

namespace jcring {

enum class Branch { Lower, Upper };

/// Closed-form polariton ladder energy relative to the cell ground state:
/// E_{n,±}/hbar = n*omega0 + Delta/2 ± sqrt(Delta^2/4 + n g^2).
double polariton_energy(double omega0, double delta, double g, int n_excitations, Branch branch);

/// Effective Kerr strength U = (E_{2-} - 2 E_{1-})/hbar; equals (2 - sqrt 2) g
/// at Delta = 0.
double effective_kerr_u(double omega0, double delta, double g);

enum class EigenBackend { SelfAdjoint, General };

/// Spectrum of one excitation sector, ascending, with symmetry labels.
///
/// Where the ring is translation invariant, each eigenvector carries its
/// cyclic-shift eigenvalue (a 4th root of unity); degenerate clusters are
/// resolved by simultaneous diagonalization with the shift operator and,
/// for real shift labels, with the reflection operator. Eigenvector phases
/// are fixed so the largest-magnitude amplitude is real positive.
struct EigenSystem {
  int sector = 0;
  BasisPtr basis;
  std::vector<int> indices;           ///< basis indices of the sector block
  Eigen::VectorXd energies;           ///< ascending, rad/s
  Eigen::MatrixXcd vectors;           ///< columns, full-space embedding done by make_state
  std::vector<cplx> translation_label;
  std::vector<bool> translation_ok;
  std::vector<int> reflection_label;  ///< +1/-1, 0 when unresolved

  /// Full-space state for eigenvector `k`.
  QuantumState make_state(int k) const;
};

/// Exact diagonalization of the N-sector block of H. Checks that H commutes
/// with the total excitation number before trusting the block structure.
EigenSystem diagonalize_sector(const OperatorMatrix& h, int sector,
                               EigenBackend backend = EigenBackend::SelfAdjoint);

/// The protocol's named eigenstates.
struct NamedStates {
  QuantumState ground;   ///< |psi_0>
  QuantumState psi_1_4;  ///< symmetric single lower-polariton state
  QuantumState psi_2_3;  ///< entangled two-polariton target state
  double e_ground = 0.0, e_psi_1_4 = 0.0, e_psi_2_3 = 0.0;  ///< rad/s, absolute
  std::vector<std::string> warnings;
};

/// Identify |psi_0>, |psi_1,4> and |psi_2,3> from the N = 0, 1, 2 sectors:
/// |psi_1,4> is the shift-symmetric state among the lowest four of N = 1;
/// |psi_2,3> is the state among the lowest six of N = 2 with shift eigenvalue
/// -1 and reflection eigenvalue +1 (the reflection resolves the remaining
/// two-fold ambiguity in the shift-odd subspace). Ambiguities are reported
/// as errors, never guessed.
NamedStates identify_named_states(const EigenSystem& n0, const EigenSystem& n1,
                                  const EigenSystem& n2);

struct DegeneracyCluster {
  int sector = 0;
  double energy = 0.0;  ///< cluster mean, rad/s
  int multiplicity = 0;
};

/// Eigenvalue multiplicities per sector with clustering tolerance
/// `cluster_tol` (rad/s). Intended for the uncoupled lattice (J = 0).
std::vector<DegeneracyCluster> degeneracy_profile(const OperatorMatrix& h, int max_sector,
                                                  double cluster_tol);

}  // namespace jcring
