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

#include "core/basis.hpp"

#include <cmath>
#include <numeric>

namespace jcring {

namespace {

int site_excitation(int s, bool has_qubits) {
  return has_qubits ? (s >> 1) + (s & 1) : s;
}

}  // namespace

int FockBasis::with_site_state(int index, int site, int s) const {
  if (s < 0 || s >= site_dim_) return -1;
  const int old = site_state(index, site);
  const std::uint64_t lbl =
      labels_[index] + (static_cast<std::uint64_t>(s) - static_cast<std::uint64_t>(old)) * strides_[site];
  return index_of(lbl);
}

BasisPtr build_basis(int n_sites, int photon_cutoff, bool has_qubits,
                     int global_excitation_cutoff, std::size_t hard_dimension_cap) {
  if (n_sites < 1) throw InvalidArgumentError("build_basis: n_sites must be >= 1");
  if (photon_cutoff < 0) throw InvalidArgumentError("build_basis: photon_cutoff must be >= 0");

  auto basis = std::make_shared<FockBasis>();
  basis->n_sites_ = n_sites;
  basis->photon_cutoff_ = photon_cutoff;
  basis->has_qubits_ = has_qubits;
  basis->n_max_ = global_excitation_cutoff < 0 ? -1 : global_excitation_cutoff;
  basis->site_dim_ = has_qubits ? 2 * (photon_cutoff + 1) : (photon_cutoff + 1);

  basis->strides_.assign(n_sites, 1);
  for (int j = n_sites - 2; j >= 0; --j)
    basis->strides_[j] = basis->strides_[j + 1] * static_cast<std::uint64_t>(basis->site_dim_);

  // Depth-first enumeration in lexicographic order (site 0 most significant),
  // pruning on the global excitation cutoff.
  std::vector<int> state(n_sites, 0);
  const int nmax = basis->n_max_;
  int depth = 0;
  int partial_exc = 0;
  while (true) {
    if (depth == n_sites) {
      std::uint64_t lbl = 0;
      for (int j = 0; j < n_sites; ++j) lbl += static_cast<std::uint64_t>(state[j]) * basis->strides_[j];
      const auto idx = static_cast<std::int32_t>(basis->labels_.size());
      if (basis->labels_.size() >= hard_dimension_cap)
        throw InvalidArgumentError("build_basis: dimension exceeds hard cap of " +
                                   std::to_string(hard_dimension_cap));
      basis->labels_.push_back(lbl);
      basis->excitation_.push_back(partial_exc);
      for (int j = 0; j < n_sites; ++j) basis->site_state_.push_back(static_cast<std::uint16_t>(state[j]));
      basis->index_.emplace(lbl, idx);
      // backtrack
      --depth;
      while (depth >= 0) {
        partial_exc -= site_excitation(state[depth], has_qubits);
        if (++state[depth] < basis->site_dim_) break;
        state[depth] = 0;
        --depth;
      }
      if (depth < 0) break;
      // fall through to re-descend
    }
    const int e = site_excitation(state[depth], has_qubits);
    if (nmax >= 0 && partial_exc + e > nmax) {
      // All later site-states at this digit have equal or larger excitation
      // only for the photon part; qubit bit alternates, so just advance.
      while (depth >= 0) {
        if (++state[depth] < basis->site_dim_) break;
        state[depth] = 0;
        --depth;
        if (depth >= 0) partial_exc -= site_excitation(state[depth], has_qubits);
      }
      if (depth < 0) break;
      continue;
    }
    partial_exc += e;
    ++depth;
  }

  return basis;
}

bool same_basis(const FockBasis& a, const FockBasis& b) {
  return a.n_sites() == b.n_sites() && a.photon_cutoff() == b.photon_cutoff() &&
         a.has_qubits() == b.has_qubits() &&
         a.global_excitation_cutoff() == b.global_excitation_cutoff();
}

OperatorMatrix site_operator(const BasisPtr& basis, int site, SiteOperator kind) {
  if (!basis) throw InvalidArgumentError("site_operator: null basis");
  if (site < 0 || site >= basis->n_sites())
    throw InvalidArgumentError("site_operator: site index out of range");
  const bool qubit_kind = kind == SiteOperator::SigmaMinus || kind == SiteOperator::SigmaPlus ||
                          kind == SiteOperator::SigmaZ;
  if (qubit_kind && !basis->has_qubits())
    throw InvalidArgumentError("site_operator: qubit operator requested on a bosonic basis");

  const int dim = basis->dimension();
  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    const int n = basis->photons(i, site);
    const int q = basis->qubit(i, site);
    const int s = basis->site_state(i, site);
    switch (kind) {
      case SiteOperator::Annihilate: {
        if (n > 0) {
          const int j = basis->with_site_state(i, site, s - (basis->has_qubits() ? 2 : 1));
          if (j >= 0) trip.emplace_back(j, i, std::sqrt(static_cast<double>(n)));
        }
        break;
      }
      case SiteOperator::Create: {
        if (n + 1 <= basis->photon_cutoff()) {
          const int j = basis->with_site_state(i, site, s + (basis->has_qubits() ? 2 : 1));
          if (j >= 0) trip.emplace_back(j, i, std::sqrt(static_cast<double>(n + 1)));
        }
        break;
      }
      case SiteOperator::Number:
        if (n != 0) trip.emplace_back(i, i, static_cast<double>(n));
        break;
      case SiteOperator::SigmaMinus: {
        if (q == 1) {
          const int j = basis->with_site_state(i, site, s - 1);
          if (j >= 0) trip.emplace_back(j, i, 1.0);
        }
        break;
      }
      case SiteOperator::SigmaPlus: {
        if (q == 0) {
          const int j = basis->with_site_state(i, site, s + 1);
          if (j >= 0) trip.emplace_back(j, i, 1.0);
        }
        break;
      }
      case SiteOperator::SigmaZ:
        trip.emplace_back(i, i, q == 1 ? 1.0 : -1.0);
        break;
      default:
        throw InvalidArgumentError("site_operator: invalid kind");
    }
  }
  SpMat m(dim, dim);
  m.setFromTriplets(trip.begin(), trip.end());
  return {basis, std::move(m)};
}

OperatorMatrix total_excitation_operator(const BasisPtr& basis) {
  if (!basis) throw InvalidArgumentError("total_excitation_operator: null basis");
  const int dim = basis->dimension();
  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    const int n = basis->excitation(i);
    if (n != 0) trip.emplace_back(i, i, static_cast<double>(n));
  }
  SpMat m(dim, dim);
  m.setFromTriplets(trip.begin(), trip.end());
  return {basis, std::move(m)};
}

std::vector<int> sector_indices(const FockBasis& basis, int N) {
  std::vector<int> out;
  for (int i = 0; i < basis.dimension(); ++i)
    if (basis.excitation(i) == N) out.push_back(i);
  return out;
}

OperatorMatrix site_permutation_operator(const BasisPtr& basis, const std::vector<int>& perm) {
  if (!basis) throw InvalidArgumentError("site_permutation_operator: null basis");
  const int n = basis->n_sites();
  if (static_cast<int>(perm.size()) != n)
    throw InvalidArgumentError("site_permutation_operator: permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p])
      throw InvalidArgumentError("site_permutation_operator: not a permutation");
    seen[p] = true;
  }
  // Stride of each site in the packed label.
  std::vector<std::uint64_t> stride(n, 1);
  for (int j = n - 2; j >= 0; --j)
    stride[j] = stride[j + 1] * static_cast<std::uint64_t>(basis->site_dim());

  const int dim = basis->dimension();
  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    std::uint64_t lbl = 0;
    // Content of site j moves to site perm[j].
    for (int j = 0; j < n; ++j)
      lbl += static_cast<std::uint64_t>(basis->site_state(i, j)) * stride[perm[j]];
    const int tgt = basis->index_of(lbl);
    if (tgt < 0)
      throw NumericError("site_permutation_operator: permuted state left the basis");
    trip.emplace_back(tgt, i, 1.0);
  }
  SpMat m(dim, dim);
  m.setFromTriplets(trip.begin(), trip.end());
  return {basis, std::move(m)};
}

OperatorMatrix translation_operator(const BasisPtr& basis) {
  const int n = basis->n_sites();
  std::vector<int> perm(n);
  for (int j = 0; j < n; ++j) perm[j] = (j + 1) % n;
  return site_permutation_operator(basis, perm);
}

OperatorMatrix reflection_operator(const BasisPtr& basis) {
  const int n = basis->n_sites();
  std::vector<int> perm(n);
  for (int j = 0; j < n; ++j) perm[j] = (n - j) % n;
  return site_permutation_operator(basis, perm);
}

OperatorMatrix adjoint_of(const OperatorMatrix& op) {
  return {op.basis, SpMat(op.mat.adjoint())};
}

double frobenius_norm(const SpMat& m) {
  double s = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it) s += std::norm(it.value());
  return std::sqrt(s);
}

double commutator_norm(const SpMat& a, const SpMat& b) {
  SpMat c = a * b - b * a;
  return frobenius_norm(c);
}

bool is_hermitian(const SpMat& m, double rel_tol) {
  SpMat d = m - SpMat(m.adjoint());
  const double scale = frobenius_norm(m);
  return frobenius_norm(d) <= rel_tol * (scale > 0 ? scale : 1.0);
}

double overlap_squared(const QuantumState& a, const QuantumState& b) {
  if (a.amp.size() != b.amp.size())
    throw InvalidArgumentError("overlap_squared: dimension mismatch");
  return std::norm(a.amp.dot(b.amp));
}

double state_fidelity(const QuantumState& psi, const DensityMatrix& rho) {
  if (psi.amp.size() != rho.rho.rows())
    throw InvalidArgumentError("state_fidelity: dimension mismatch");
  return std::real(psi.amp.dot(rho.rho * psi.amp));
}

}  // namespace jcring
