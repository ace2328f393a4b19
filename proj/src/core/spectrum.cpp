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

#include "core/spectrum.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace jcring {

double polariton_energy(double omega0, double delta, double g, int n_excitations, Branch branch) {
  if (n_excitations < 1)
    throw InvalidArgumentError("polariton_energy: n must be >= 1 (the ground energy is 0)");
  const double root = std::sqrt(0.25 * delta * delta + n_excitations * g * g);
  const double sign = branch == Branch::Lower ? -1.0 : 1.0;
  return n_excitations * omega0 + 0.5 * delta + sign * root;
}

double effective_kerr_u(double omega0, double delta, double g) {
  return polariton_energy(omega0, delta, g, 2, Branch::Lower) -
         2.0 * polariton_energy(omega0, delta, g, 1, Branch::Lower);
}

QuantumState EigenSystem::make_state(int k) const {
  QuantumState s;
  s.basis = basis;
  s.amp = Eigen::VectorXcd::Zero(basis->dimension());
  for (std::size_t r = 0; r < indices.size(); ++r) s.amp[indices[r]] = vectors(r, k);
  return s;
}

namespace {

Eigen::MatrixXcd dense_block(const SpMat& m, const std::vector<int>& idx) {
  const int k = static_cast<int>(idx.size());
  std::vector<int> pos(m.rows(), -1);
  for (int r = 0; r < k; ++r) pos[idx[r]] = r;
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(k, k);
  for (int c = 0; c < k; ++c)
    for (SpMat::InnerIterator it(m, idx[c]); it; ++it)
      if (pos[it.row()] >= 0) b(pos[it.row()], c) = it.value();
  return b;
}

void fix_phase(Eigen::Ref<Eigen::VectorXcd> v) {
  int arg = 0;
  double best = 0.0;
  for (int i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > best + 1e-14) {
      best = a;
      arg = i;
    }
  }
  if (best > 0.0) v *= std::conj(v[arg]) / best;
}

// Group ascending eigenvalues into near-degenerate clusters.
std::vector<std::pair<int, int>> cluster_ranges(const Eigen::VectorXd& e, double tol) {
  std::vector<std::pair<int, int>> out;
  int start = 0;
  for (int i = 1; i <= e.size(); ++i) {
    if (i == e.size() || e[i] - e[i - 1] > tol) {
      out.emplace_back(start, i);
      start = i;
    }
  }
  return out;
}

}  // namespace

EigenSystem diagonalize_sector(const OperatorMatrix& h, int sector, EigenBackend backend) {
  if (!h.basis) throw InvalidArgumentError("diagonalize_sector: operator without basis");
  const auto& basis = *h.basis;

  // The sector structure is only meaningful when H conserves N.
  {
    const SpMat nop = total_excitation_operator(h.basis).mat;
    const double hnorm = std::max(frobenius_norm(h.mat), 1.0);
    double nscale = 1.0;
    for (int i = 0; i < basis.dimension(); ++i)
      nscale = std::max(nscale, static_cast<double>(basis.excitation(i)));
    if (commutator_norm(h.mat, nop) > 1e-12 * hnorm * nscale)
      throw NumericError("diagonalize_sector: H does not commute with the excitation number");
  }

  EigenSystem es;
  es.sector = sector;
  es.basis = h.basis;
  es.indices = sector_indices(basis, sector);
  if (es.indices.empty())
    throw InvalidArgumentError("diagonalize_sector: empty sector N=" + std::to_string(sector));

  Eigen::MatrixXcd block = dense_block(h.mat, es.indices);
  const int k = static_cast<int>(es.indices.size());

  if (backend == EigenBackend::SelfAdjoint) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block);
    if (solver.info() != Eigen::Success)
      throw NumericError("diagonalize_sector: eigensolver failed");
    es.energies = solver.eigenvalues();
    es.vectors = solver.eigenvectors();
  } else {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(block);
    if (solver.info() != Eigen::Success)
      throw NumericError("diagonalize_sector: eigensolver failed");
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    const auto& ev = solver.eigenvalues();
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ev[a].real() < ev[b].real(); });
    es.energies.resize(k);
    es.vectors.resize(k, k);
    for (int i = 0; i < k; ++i) {
      es.energies[i] = ev[order[i]].real();
      es.vectors.col(i) = solver.eigenvectors().col(order[i]).normalized();
    }
  }

  // Residual check against the block.
  const double bnorm = std::max(block.norm(), 1.0);
  for (int i = 0; i < k; ++i) {
    const double resid = (block * es.vectors.col(i) - es.energies[i] * es.vectors.col(i)).norm();
    if (resid > 1e-10 * bnorm)
      throw NumericError("diagonalize_sector: eigenpair residual above tolerance");
  }

  es.translation_label.assign(k, cplx(0.0));
  es.translation_ok.assign(k, false);
  es.reflection_label.assign(k, 0);

  // Symmetry labels only make sense when the shift commutes with H.
  const SpMat tr_full = translation_operator(h.basis).mat;
  const double hnorm = frobenius_norm(h.mat);
  const bool shift_symmetric =
      commutator_norm(h.mat, tr_full) <= 1e-10 * (hnorm > 0 ? hnorm : 1.0);
  if (!shift_symmetric) {
    for (int i = 0; i < k; ++i) fix_phase(es.vectors.col(i));
    return es;
  }

  const Eigen::MatrixXcd tr = dense_block(tr_full, es.indices);
  const Eigen::MatrixXcd rf = dense_block(reflection_operator(h.basis).mat, es.indices);

  const double scale = std::max(std::abs(es.energies[0]), std::abs(es.energies[k - 1]));
  const double cluster_tol = 1e-11 * std::max(scale, 1.0);

  for (auto [b, e] : cluster_ranges(es.energies, cluster_tol)) {
    const int sz = e - b;
    auto sub = es.vectors.middleCols(b, sz);
    if (sz > 1) {
      // Re-orthonormalize the cluster span, then rotate into shift
      // eigenvectors. The restricted shift is unitary, so its Schur form is
      // diagonal and the Schur basis is an orthonormal eigenbasis (a plain
      // eigensolver does not orthogonalize degenerate columns).
      Eigen::HouseholderQR<Eigen::MatrixXcd> qr(sub);
      sub = qr.householderQ() * Eigen::MatrixXcd::Identity(k, sz);
      Eigen::MatrixXcd t_sub = sub.adjoint() * (tr * sub);
      Eigen::ComplexSchur<Eigen::MatrixXcd> tschur(t_sub);
      sub = sub * tschur.matrixU();
      for (int c = 0; c < sz; ++c) {
        const cplx lam = tschur.matrixT()(c, c);
        es.translation_label[b + c] = lam;
        es.translation_ok[b + c] = std::abs(std::abs(lam) - 1.0) < 1e-8 &&
                                   (tr * sub.col(c) - lam * sub.col(c)).norm() < 1e-8;
      }
      // Within the cluster, resolve identical real shift labels by reflection.
      for (int c0 = 0; c0 < sz; ++c0) {
        if (!es.translation_ok[b + c0]) continue;
        const cplx lam = es.translation_label[b + c0];
        if (std::abs(lam.imag()) > 1e-6) continue;
        std::vector<int> grp;
        for (int c = c0; c < sz; ++c)
          if (es.reflection_label[b + c] == 0 && es.translation_ok[b + c] &&
              std::abs(es.translation_label[b + c] - lam) < 1e-6)
            grp.push_back(c);
        if (grp.size() > 1) {
          Eigen::MatrixXcd g(k, grp.size());
          for (std::size_t c = 0; c < grp.size(); ++c) g.col(c) = sub.col(grp[c]);
          Eigen::MatrixXcd r_sub = g.adjoint() * (rf * g);
          Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> rsolve(r_sub);
          g = g * rsolve.eigenvectors();
          for (std::size_t c = 0; c < grp.size(); ++c) {
            sub.col(grp[c]) = g.col(c);
            es.reflection_label[b + grp[c]] = rsolve.eigenvalues()[c] > 0 ? 1 : -1;
          }
        }
      }
    }
    // Per-vector labels for anything not fixed above.
    for (int c = 0; c < sz; ++c) {
      const int i = b + c;
      if (!es.translation_ok[i]) {
        const Eigen::VectorXcd tv = tr * es.vectors.col(i);
        const cplx lam = es.vectors.col(i).dot(tv);
        if ((tv - lam * es.vectors.col(i)).norm() < 1e-8) {
          es.translation_label[i] = lam;
          es.translation_ok[i] = true;
        }
      }
      if (es.reflection_label[i] == 0 && es.translation_ok[i] &&
          std::abs(es.translation_label[i].imag()) < 1e-6) {
        const Eigen::VectorXcd rv = rf * es.vectors.col(i);
        const cplx lam = es.vectors.col(i).dot(rv);
        if ((rv - lam * es.vectors.col(i)).norm() < 1e-8)
          es.reflection_label[i] = lam.real() > 0 ? 1 : -1;
      }
    }
  }

  for (int i = 0; i < k; ++i) fix_phase(es.vectors.col(i));
  return es;
}

NamedStates identify_named_states(const EigenSystem& n0, const EigenSystem& n1,
                                  const EigenSystem& n2) {
  if (n0.sector != 0 || n1.sector != 1 || n2.sector != 2)
    throw InvalidArgumentError("identify_named_states: expected sectors 0, 1, 2");
  NamedStates out;

  if (n0.indices.size() != 1)
    throw NumericError("identify_named_states: N=0 sector is not one-dimensional");
  out.ground = n0.make_state(0);
  out.e_ground = n0.energies[0];

  // |psi_1,4>: shift-symmetric state among the lowest four of N = 1.
  {
    const int m = std::min<int>(4, static_cast<int>(n1.indices.size()));
    std::vector<int> cand;
    for (int i = 0; i < m; ++i)
      if (n1.translation_ok[i] && std::abs(n1.translation_label[i] - cplx(1.0)) < 1e-6)
        cand.push_back(i);
    if (cand.size() != 1)
      throw NumericError("identify_named_states: expected exactly one shift-symmetric state "
                         "among the lowest four N=1 levels, found " +
                         std::to_string(cand.size()));
    out.psi_1_4 = n1.make_state(cand[0]);
    out.e_psi_1_4 = n1.energies[cand[0]];
  }

  // |psi_2,3>: shift-odd, reflection-even state among the lowest six of N = 2.
  {
    const int m = std::min<int>(6, static_cast<int>(n2.indices.size()));
    std::vector<int> cand;
    for (int i = 0; i < m; ++i)
      if (n2.translation_ok[i] && std::abs(n2.translation_label[i] + cplx(1.0)) < 1e-6 &&
          n2.reflection_label[i] == 1)
        cand.push_back(i);
    if (cand.size() != 1)
      throw NumericError("identify_named_states: expected exactly one shift-odd reflection-even "
                         "state among the lowest six N=2 levels, found " +
                         std::to_string(cand.size()));
    out.psi_2_3 = n2.make_state(cand[0]);
    out.e_psi_2_3 = n2.energies[cand[0]];
  }

  return out;
}

std::vector<DegeneracyCluster> degeneracy_profile(const OperatorMatrix& h, int max_sector,
                                                  double cluster_tol) {
  std::vector<DegeneracyCluster> out;
  for (int n = 0; n <= max_sector; ++n) {
    EigenSystem es = diagonalize_sector(h, n);
    for (auto [b, e] : cluster_ranges(es.energies, cluster_tol)) {
      DegeneracyCluster c;
      c.sector = n;
      c.multiplicity = e - b;
      c.energy = es.energies.segment(b, e - b).mean();
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace jcring
