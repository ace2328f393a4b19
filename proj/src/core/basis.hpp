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

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "core/types.hpp"

namespace jcring {

using SpMat = Eigen::SparseMatrix<cplx>;

/// Truncated product basis of (photon number x qubit level) per site.
///
/// Site states are ordered with the qubit level as the least-significant
/// digit, and basis states lexicographically over (site 1, ..., site n)
/// with site 1 most significant. The ordering is fixed so that saved
/// states are portable between runs.
class FockBasis {
 public:
  int n_sites() const { return n_sites_; }
  int photon_cutoff() const { return photon_cutoff_; }
  bool has_qubits() const { return has_qubits_; }
  /// Global excitation cutoff N_max, or -1 when unbounded.
  int global_excitation_cutoff() const { return n_max_; }
  int dimension() const { return static_cast<int>(labels_.size()); }

  /// Photon count of basis state `index` at `site`.
  int photons(int index, int site) const {
    int s = site_state_[static_cast<std::size_t>(index) * n_sites_ + site];
    return has_qubits_ ? (s >> 1) : s;
  }
  /// Qubit excitation (0/1) of basis state `index` at `site`.
  int qubit(int index, int site) const {
    return has_qubits_ ? (site_state_[static_cast<std::size_t>(index) * n_sites_ + site] & 1) : 0;
  }
  /// Total excitation number N of basis state `index`.
  int excitation(int index) const { return excitation_[index]; }

  std::uint64_t label(int index) const { return labels_[index]; }
  /// Index of a packed label, or -1 when the label is outside the basis.
  int index_of(std::uint64_t label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
  }

  /// Index reached from `index` by setting site `site` to site-state `s`,
  /// or -1 when the target lies outside the truncated space.
  int with_site_state(int index, int site, int s) const;

  int site_state(int index, int site) const {
    return site_state_[static_cast<std::size_t>(index) * n_sites_ + site];
  }
  int site_dim() const { return site_dim_; }

 private:
  friend std::shared_ptr<const FockBasis> build_basis(int, int, bool, int, std::size_t);

  int n_sites_ = 0;
  int photon_cutoff_ = 0;
  bool has_qubits_ = false;
  int n_max_ = -1;
  int site_dim_ = 0;
  std::vector<std::uint64_t> strides_;
  std::vector<std::uint64_t> labels_;
  std::vector<std::uint16_t> site_state_;
  std::vector<std::int32_t> excitation_;
  std::unordered_map<std::uint64_t, std::int32_t> index_;
};

using BasisPtr = std::shared_ptr<const FockBasis>;

/// Enumerate the truncated product space.
///
/// global_excitation_cutoff < 0 means no global cutoff. The hard dimension
/// cap guards against runaway memory from careless cutoffs.
BasisPtr build_basis(int n_sites, int photon_cutoff, bool has_qubits,
                     int global_excitation_cutoff = -1,
                     std::size_t hard_dimension_cap = 200000);

/// True when the two bases enumerate the same space (identical parameters).
bool same_basis(const FockBasis& a, const FockBasis& b);

/// Complex matrix over a FockBasis; the representation of Hamiltonians,
/// drives and collapse operators.
struct OperatorMatrix {
  BasisPtr basis;
  SpMat mat;
};

enum class SiteOperator {
  Annihilate,
  Create,
  Number,
  SigmaMinus,
  SigmaPlus,
  SigmaZ,
};

/// Site-local operator embedded in the full product space. Ladder matrix
/// elements follow a|n> = sqrt(n)|n-1>; creation out of the truncated
/// space maps to zero amplitude (hard truncation).
OperatorMatrix site_operator(const BasisPtr& basis, int site, SiteOperator kind);

/// Diagonal operator N = sum_j (a_j^dag a_j + sigma_j+ sigma_j-).
OperatorMatrix total_excitation_operator(const BasisPtr& basis);

/// Indices of all basis states with total excitation exactly N (ascending).
std::vector<int> sector_indices(const FockBasis& basis, int N);

/// Permutation operator for a site relabelling: site j's content moves to
/// site perm[j]. perm must be a permutation of 0..n_sites-1.
OperatorMatrix site_permutation_operator(const BasisPtr& basis, const std::vector<int>& perm);

/// Cyclic shift by one site (j -> j+1 mod n).
OperatorMatrix translation_operator(const BasisPtr& basis);

/// Reflection fixing site 0 (j -> n-j mod n); for the 4-ring this swaps
/// sites 1 and 3 (0-based) and fixes the diagonal 0-2.
OperatorMatrix reflection_operator(const BasisPtr& basis);

OperatorMatrix adjoint_of(const OperatorMatrix& op);

double frobenius_norm(const SpMat& m);
/// ||AB - BA||_F
double commutator_norm(const SpMat& a, const SpMat& b);
bool is_hermitian(const SpMat& m, double rel_tol = 1e-12);

/// Pure state over a FockBasis with a physical time stamp (seconds).
struct QuantumState {
  BasisPtr basis;
  Eigen::VectorXcd amp;
  double time = 0.0;
};

/// Density operator over a FockBasis with a physical time stamp (seconds).
struct DensityMatrix {
  BasisPtr basis;
  Eigen::MatrixXcd rho;
  double time = 0.0;
};

/// |<a|b>|^2. Bases must match.
double overlap_squared(const QuantumState& a, const QuantumState& b);
/// <psi|rho|psi>, real part (rho Hermitian).
double state_fidelity(const QuantumState& psi, const DensityMatrix& rho);

}  // namespace jcring
