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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "core/model.hpp"
#include "core/spectrum.hpp"

using namespace jcring;

namespace {

SystemParams nominal_params() {
  SystemParams p;
  p.omega0 = hz_to_radps(10e9);
  p.delta = 0.0;
  p.g = hz_to_radps(100e6);
  p.j_hop = hz_to_radps(50e6);
  p.kappa = hz_to_radps(10e3);
  p.gamma_q = hz_to_radps(100e3);
  return p;
}

Eigen::VectorXd sector_eigenvalues(const OperatorMatrix& h, int n) {
  const auto idx = sector_indices(*h.basis, n);
  Eigen::MatrixXcd block(idx.size(), idx.size());
  Eigen::MatrixXcd dense(h.mat);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) block(r, c) = dense(idx[r], idx[c]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block);
  return es.eigenvalues();
}

// Analytic oracle for two hard-core bosons on a 4-ring with hopping t:
// the free-fermion mapping gives pair energies {-2 sqrt(2) t, 0 x4, +2 sqrt(2) t}.
// Cross-checked against direct diagonalization of the 6x6 pair-state block.
Eigen::VectorXd hard_core_pair_energies(double t) {
  Eigen::VectorXd e(6);
  e << -2.0 * std::sqrt(2.0) * t, 0.0, 0.0, 0.0, 0.0, 2.0 * std::sqrt(2.0) * t;
  return e;
}

Eigen::VectorXd hard_core_pair_energies_numeric(double t) {
  // Pair states on sites {01,02,03,12,13,23}; hopping moves one boson by one
  // ring step, forbidding double occupancy.
  const std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  auto find = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i] == std::make_pair(a, b)) return static_cast<int>(i);
    return -1;
  };
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(6, 6);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    for (int d : {-1, +1}) {
      const int a2 = ((a + d) % 4 + 4) % 4;
      if (a2 != b && find(a2, b) >= 0) h(find(a2, b), i) += t;
      const int b2 = ((b + d) % 4 + 4) % 4;
      if (b2 != a && find(a, b2) >= 0) h(find(a, b2), i) += t;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  return es.eigenvalues();
}

}  // namespace

TEST_CASE("single-site polariton doublet at resonance") {
  SystemParams p = nominal_params();
  p.j_hop = 0.0;
  auto basis = build_basis(1, 2, true, 2);
  auto h = build_lattice_hamiltonian(p, basis);
  CHECK(is_hermitian(h.mat));

  const auto e0 = sector_eigenvalues(h, 0);
  const auto e1 = sector_eigenvalues(h, 1);
  REQUIRE(e1.size() == 2);
  CHECK(std::abs((e1[0] - e0[0]) - (p.omega0 - p.g)) < 1e-3);
  CHECK(std::abs((e1[1] - e0[0]) - (p.omega0 + p.g)) < 1e-3);
}

TEST_CASE("photon block at g=0 gives the ring mode energies") {
  SystemParams p = nominal_params();
  p.g = 1e-6;  // validate() requires g > 0; effectively decoupled
  auto basis = build_basis(4, 1, true, 1);
  auto h = build_lattice_hamiltonian(p, basis);
  auto e1 = sector_eigenvalues(h, 1);
  const auto e0 = sector_eigenvalues(h, 0);
  REQUIRE(e1.size() == 8);
  // Photon modes at omega0 + {-2J, 0, 0, +2J} and four qubit levels at omega_z.
  std::vector<double> expect = {p.omega0 - 2 * p.j_hop, p.omega0, p.omega0, p.omega0 + 2 * p.j_hop,
                                p.omega_z(), p.omega_z(), p.omega_z(), p.omega_z()};
  std::sort(expect.begin(), expect.end());
  for (int i = 0; i < 8; ++i) CHECK(std::abs((e1[i] - e0[0]) - expect[i]) < 1.0);
}

TEST_CASE("all couplings off leaves a diagonal matrix of bare occupancies") {
  SystemParams p = nominal_params();
  p.g = 1e-12;
  p.j_hop = 0.0;
  auto basis = build_basis(2, 2, true, 2);
  auto h = build_lattice_hamiltonian(p, basis);
  Eigen::MatrixXcd dense(h.mat);
  for (int i = 0; i < basis->dimension(); ++i)
    for (int j = 0; j < basis->dimension(); ++j)
      if (i != j) CHECK(std::abs(dense(i, j)) < 1e-9);
}

TEST_CASE("lattice Hamiltonian commutes with the excitation number and the shift") {
  SystemParams p = nominal_params();
  auto basis = build_basis(4, 2, true, 3);
  auto h = build_lattice_hamiltonian(p, basis);
  auto nop = total_excitation_operator(basis);
  const double hnorm = frobenius_norm(h.mat);
  CHECK(commutator_norm(h.mat, nop.mat) <= 1e-12 * hnorm);

  // Translation covariance is exact for uniform parameters.
  auto tr = translation_operator(basis);
  SpMat conj = tr.mat * h.mat * SpMat(tr.mat.adjoint());
  CHECK(frobenius_norm(SpMat(conj - h.mat)) <= 1e-12 * hnorm);

  // A per-site deviation breaks it.
  SystemParams q = p;
  q.delta_omega0 = {0.0, 0.01 * p.g, 0.0, 0.0};
  auto h2 = build_lattice_hamiltonian(q, basis);
  SpMat conj2 = tr.mat * h2.mat * SpMat(tr.mat.adjoint());
  CHECK(frobenius_norm(SpMat(conj2 - h2.mat)) > 1e-9 * hnorm);
}

TEST_CASE("drive generator evaluates to the expected matrices") {
  auto basis = build_basis(4, 1, true, 2);
  PulseSegment seg;
  seg.amplitudes = {cplx(0.0), cplx(0.0), cplx(0.0), cplx(0.0)};
  seg.omega_d = hz_to_radps(9.95e9);
  seg.duration = 1e-8;
  auto zero = build_drive_generator(seg, basis);
  CHECK(frobenius_norm(zero.evaluate(0.0)) == 0.0);
  CHECK(frobenius_norm(zero.evaluate(1.3e-9)) == 0.0);

  const double eps = hz_to_radps(5e6);
  seg.amplitudes = {cplx(eps), cplx(eps), cplx(eps), cplx(eps)};
  auto drive = build_drive_generator(seg, basis);
  // At t=0 the matrix is eps * sum_j (a_j + a_j^dag).
  SpMat expect(basis->dimension(), basis->dimension());
  for (int j = 0; j < 4; ++j) {
    expect += eps * site_operator(basis, j, SiteOperator::Create).mat;
    expect += eps * site_operator(basis, j, SiteOperator::Annihilate).mat;
  }
  CHECK(frobenius_norm(SpMat(drive.evaluate(0.0) - expect)) < 1e-9);

  // Hermitian at every sampled time.
  for (double t : {1e-10, 7.7e-10, 3.1e-9, 1.9e-8})
    CHECK(is_hermitian(drive.evaluate(t)));
}

TEST_CASE("Bose-Hubbard interaction and decoupled limits") {
  auto basis = build_basis(1, 2, false);
  BoseHubbardParams bh;
  bh.onsite_energy = hz_to_radps(9.9e9);
  bh.hopping = 0.0;
  bh.u = hz_to_radps(58.6e6);
  auto h = build_bose_hubbard(bh, basis);
  Eigen::MatrixXcd dense(h.mat);
  const double e1 = dense(basis->index_of(1), basis->index_of(1)).real();
  const double e2 = dense(basis->index_of(2), basis->index_of(2)).real();
  // E(n=2) - 2 E(n=1) = U exactly.
  CHECK(std::abs((e2 - 2 * e1) - bh.u) < 1e-6);

  // J_eff = 0, U = 0: four decoupled harmonic modes.
  auto ring = build_basis(4, 2, false, 2);
  BoseHubbardParams flat;
  flat.onsite_energy = bh.onsite_energy;
  auto hflat = build_bose_hubbard(flat, ring);
  Eigen::MatrixXcd df(hflat.mat);
  for (int i = 0; i < ring->dimension(); ++i) {
    for (int j = 0; j < ring->dimension(); ++j)
      if (i != j) CHECK(std::abs(df(i, j)) == 0.0);
    CHECK(std::abs(df(i, i).real() - bh.onsite_energy * ring->excitation(i)) < 1e-3);
  }

  // Qubit bases are rejected.
  auto wrong = build_basis(4, 1, true);
  CHECK_THROWS_AS(build_bose_hubbard(bh, wrong), InvalidArgumentError);
}

TEST_CASE("hard-core limit reproduces the free-fermion pair spectrum") {
  const double j_eff = hz_to_radps(25e6);  // J/2 at Delta = 0
  const auto oracle = hard_core_pair_energies(j_eff);
  const auto oracle_numeric = hard_core_pair_energies_numeric(j_eff);
  for (int i = 0; i < 6; ++i) CHECK(std::abs(oracle[i] - oracle_numeric[i]) < 1e-3);

  BoseHubbardParams bh;
  bh.onsite_energy = hz_to_radps(9.9e9);
  bh.hopping = j_eff;
  bh.u = 1e8 * j_eff;  // hard-core limit
  auto basis = build_basis(4, 2, false, 2);
  auto h = build_bose_hubbard(bh, basis);
  auto e2 = sector_eigenvalues(h, 2);
  REQUIRE(e2.size() == 10);
  for (int i = 0; i < 6; ++i)
    CHECK(std::abs((e2[i] - 2 * bh.onsite_energy) - oracle[i]) < 1e-4 * j_eff);
}

TEST_CASE("effective polariton parameters at resonance") {
  SystemParams p = nominal_params();
  auto bh = effective_polariton_params(p);
  CHECK(std::abs(bh.onsite_energy - (p.omega0 - p.g)) < 1e-3);
  CHECK(std::abs(bh.hopping - 0.5 * p.j_hop) < 1e-6);
  CHECK(std::abs(bh.drive_projection - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(bh.u - (2.0 - std::sqrt(2.0)) * p.g) < 1e-3);
  CHECK(std::abs(bh.gamma_p - 0.5 * (p.kappa + p.gamma_q)) < 1e-9);
}

TEST_CASE("tunneling from the coupling capacitance") {
  const double w0 = hz_to_radps(10e9);
  CHECK(std::abs(tunneling_from_capacitance(w0, 10e-15, 2e-12) - hz_to_radps(50e6)) < 1e-3);
  CHECK(tunneling_from_capacitance(w0, 0.0, 2e-12) == 0.0);
  const double w5 = hz_to_radps(5e9);
  CHECK(std::abs(tunneling_from_capacitance(w5, 20e-15, 1e-12) - hz_to_radps(100e6)) < 1e-3);
  CHECK_THROWS_AS(tunneling_from_capacitance(w0, 1e-15, 0.0), InvalidArgumentError);
  std::vector<std::string> warnings;
  tunneling_from_capacitance(w0, 0.5e-12, 2e-12, &warnings);
  CHECK(warnings.size() == 1);
}

TEST_CASE("compensating detuning restores the lower polariton energy") {
  const double g = hz_to_radps(100e6);
  CHECK(compensating_detuning(g, 0.0, 0.0) == 0.0);
  CHECK(std::abs(compensating_detuning(g, 0.1 * g, 0.0) - 0.21 * g) < 1e-6);
  CHECK_THROWS_AS(compensating_detuning(g, 0.0, -g), InvalidArgumentError);

  // Contract: E_1- with the compensated detuning equals omega0 - g to 1e-12
  // relative, across a grid of deviations; the upper branch is not restored.
  const double w0 = hz_to_radps(10e9);
  for (double dgr : {-0.1, -0.05, 0.0, 0.05, 0.1}) {
    for (double dwr : {-0.1, -0.04, 0.0, 0.04, 0.1}) {
      const double dg = dgr * g, dw = dwr * g;
      const double det = compensating_detuning(g, dg, dw);
      const double e_low = polariton_energy(w0 + dw, det, g + dg, 1, Branch::Lower);
      CHECK(std::abs(e_low - (w0 - g)) <= 1e-12 * (w0 - g));
      if (dgr != 0.0 || dwr != 0.0) {
        const double e_up = polariton_energy(w0 + dw, det, g + dg, 1, Branch::Upper);
        CHECK(std::abs(e_up - (w0 + g)) > 1e-9 * (w0 + g));
      }
    }
  }
}

TEST_CASE("parameter validation and warnings") {
  SystemParams p = nominal_params();
  CHECK(p.validate().empty());
  p.g = 3.0 * p.j_hop;
  CHECK(p.validate().size() == 1);
  p.g = -1.0;
  CHECK_THROWS_AS(p.validate(), InvalidArgumentError);

  PulseSegment seg;
  seg.duration = 1e-8;
  seg.amplitudes = {cplx(1.0), cplx(1.0), cplx(1.0), cplx(1.0)};
  CHECK(seg.validate(10.0).empty());
  CHECK(seg.validate(4.0).size() == 1);
  seg.duration = 0.0;
  CHECK_THROWS_AS(seg.validate(10.0), InvalidArgumentError);
}
