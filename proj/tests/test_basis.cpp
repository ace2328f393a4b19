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

#include <set>

#include "core/basis.hpp"

using namespace jcring;

namespace {

// Independent oracle: count product states by brute-force nested enumeration,
// with no shared code with FockBasis.
long count_states_brute_force(int n_sites, int cutoff, bool qubits, int nmax) {
  long count = 0;
  const int site_dim = qubits ? 2 * (cutoff + 1) : (cutoff + 1);
  std::vector<int> s(n_sites, 0);
  while (true) {
    int exc = 0;
    for (int j = 0; j < n_sites; ++j) exc += qubits ? (s[j] >> 1) + (s[j] & 1) : s[j];
    if (nmax < 0 || exc <= nmax) ++count;
    int j = n_sites - 1;
    while (j >= 0 && ++s[j] == site_dim) s[j--] = 0;
    if (j < 0) break;
  }
  return count;
}

}  // namespace

TEST_CASE("basis dimensions match brute-force enumeration") {
  // 4 sites, one photon level pair per site: (2 photon levels x 2 qubit levels)^4.
  CHECK(build_basis(4, 1, true)->dimension() == 256);
  CHECK(count_states_brute_force(4, 1, true, -1) == 256);

  // Single qubit-only cell.
  CHECK(build_basis(1, 0, true)->dimension() == 2);

  // Global cutoff N_max = 2: sector sizes 1 + 8 + 32 by direct enumeration.
  const long expect = count_states_brute_force(4, 2, true, 2);
  CHECK(expect == 41);
  auto basis = build_basis(4, 2, true, 2);
  CHECK(basis->dimension() == expect);
  CHECK(sector_indices(*basis, 0).size() == 1);
  CHECK(sector_indices(*basis, 1).size() == 8);
  CHECK(sector_indices(*basis, 2).size() == 32);

  // Effective-model default: 4 bosonic modes, cutoff 2.
  CHECK(build_basis(4, 2, false)->dimension() == 81);
}

TEST_CASE("index map is a bijection and ordering is lexicographic") {
  auto basis = build_basis(3, 2, true, 3);
  std::set<std::uint64_t> labels;
  for (int i = 0; i < basis->dimension(); ++i) {
    const auto lbl = basis->label(i);
    CHECK(basis->index_of(lbl) == i);
    labels.insert(lbl);
  }
  CHECK(static_cast<int>(labels.size()) == basis->dimension());
  for (int i = 1; i < basis->dimension(); ++i) CHECK(basis->label(i - 1) < basis->label(i));

  // Sector sizes partition the basis.
  int total = 0;
  for (int n = 0; n <= 3; ++n) total += static_cast<int>(sector_indices(*basis, n).size());
  CHECK(total == basis->dimension());
}

TEST_CASE("dimension hard cap rejects runaway bases") {
  CHECK_THROWS_AS(build_basis(4, 20, true), InvalidArgumentError);
  CHECK_NOTHROW(build_basis(2, 20, true, -1, 10'000));
}

TEST_CASE("ladder operators follow standard conventions") {
  auto basis = build_basis(1, 3, true);
  auto a = site_operator(basis, 0, SiteOperator::Annihilate);
  auto adag = site_operator(basis, 0, SiteOperator::Create);
  auto num = site_operator(basis, 0, SiteOperator::Number);

  // <2| adag |1> = sqrt(2). Site state = 2n + q, qubit down.
  const int i1 = basis->index_of(2);
  const int i2 = basis->index_of(4);
  CHECK(std::abs(Eigen::MatrixXcd(adag.mat)(i2, i1) - std::sqrt(2.0)) < 1e-15);

  // Number operator annihilates the vacuum.
  Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(basis->dimension());
  vac[basis->index_of(0)] = 1.0;
  CHECK((num.mat * vac).norm() == 0.0);

  // adag is exactly the adjoint of a.
  CHECK(frobenius_norm(SpMat(adag.mat - SpMat(a.mat.adjoint()))) == 0.0);

  // [a, adag] = 1 away from the truncation edge (n < cutoff).
  Eigen::MatrixXcd comm = Eigen::MatrixXcd(a.mat * adag.mat - adag.mat * a.mat);
  for (int i = 0; i < basis->dimension(); ++i)
    if (basis->photons(i, 0) < basis->photon_cutoff())
      CHECK(std::abs(comm(i, i) - 1.0) < 1e-14);
}

TEST_CASE("hard truncation drops creation out of the space") {
  auto basis = build_basis(2, 1, false, 1);  // two bosonic modes, N_max = 1
  auto adag = site_operator(basis, 0, SiteOperator::Create);
  // |10> is in the basis; adag_0 |10> would be |20>, outside both cutoffs.
  const int i10 = basis->index_of(1 * 2 + 0);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis->dimension());
  v[i10] = 1.0;
  CHECK((adag.mat * v).norm() == 0.0);
  // adag_1 |10> = |11> is outside N_max = 1 as well.
  auto adag1 = site_operator(basis, 1, SiteOperator::Create);
  CHECK((adag1.mat * v).norm() == 0.0);
}

TEST_CASE("site operators on distinct sites commute exactly") {
  auto basis = build_basis(3, 2, true, 2);
  auto a0 = site_operator(basis, 0, SiteOperator::Annihilate);
  auto adag1 = site_operator(basis, 1, SiteOperator::Create);
  auto sp2 = site_operator(basis, 2, SiteOperator::SigmaPlus);
  CHECK(commutator_norm(a0.mat, adag1.mat) == 0.0);
  CHECK(commutator_norm(a0.mat, sp2.mat) == 0.0);
  CHECK(commutator_norm(adag1.mat, sp2.mat) == 0.0);
}

TEST_CASE("total excitation operator is diagonal with integer eigenvalues") {
  auto basis = build_basis(4, 2, true, 3);
  auto nop = total_excitation_operator(basis);
  Eigen::MatrixXcd dense(nop.mat);
  for (int i = 0; i < basis->dimension(); ++i) {
    for (int j = 0; j < basis->dimension(); ++j)
      if (i != j) CHECK(dense(i, j) == cplx(0.0));
    const double v = dense(i, i).real();
    CHECK(v == static_cast<double>(basis->excitation(i)));
    CHECK(v == std::floor(v));
  }

  // One photon at site 1 plus one qubit flip at site 3 carries N = 2.
  std::uint64_t lbl = 0;
  const std::uint64_t d = 6;  // site_dim for cutoff 2 with qubits
  lbl += 2 * d * d * d;       // site 0: n=1,q=0 -> s=2 (most significant)
  lbl += 1 * d;               // site 2: n=0,q=1 -> s=1
  const int idx = basis->index_of(lbl);
  REQUIRE(idx >= 0);
  CHECK(basis->excitation(idx) == 2);
}

TEST_CASE("invalid site or kind is rejected") {
  auto bosons = build_basis(2, 1, false);
  CHECK_THROWS_AS(site_operator(bosons, 2, SiteOperator::Number), InvalidArgumentError);
  CHECK_THROWS_AS(site_operator(bosons, -1, SiteOperator::Number), InvalidArgumentError);
  CHECK_THROWS_AS(site_operator(bosons, 0, SiteOperator::SigmaZ), InvalidArgumentError);
  CHECK_THROWS_AS(site_operator(bosons, 0, SiteOperator::SigmaMinus), InvalidArgumentError);
}

TEST_CASE("translation and reflection operators are permutations") {
  auto basis = build_basis(4, 1, true, 2);
  auto tr = translation_operator(basis);
  auto rf = reflection_operator(basis);
  const int dim = basis->dimension();
  // T^4 = 1 and R^2 = 1.
  SpMat t4 = tr.mat * tr.mat * tr.mat * tr.mat;
  SpMat r2 = rf.mat * rf.mat;
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  CHECK((Eigen::MatrixXcd(t4) - id).norm() == 0.0);
  CHECK((Eigen::MatrixXcd(r2) - id).norm() == 0.0);
  // T moves a site-0 photon to site 1.
  auto n1 = site_operator(basis, 1, SiteOperator::Number);
  auto n0 = site_operator(basis, 0, SiteOperator::Number);
  SpMat moved = tr.mat * n0.mat * SpMat(tr.mat.adjoint());
  CHECK(frobenius_norm(SpMat(moved - n1.mat)) == 0.0);
}
