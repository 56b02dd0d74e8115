// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "symproj/core_ops.hpp"
#include "symproj/lie.hpp"
#include "symproj/models.hpp"
#include "test_helpers.hpp"

using namespace symproj;
namespace st = symproj::testing;

TEST_CASE("total spin operators") {
  SUBCASE("one site: Pauli over two, S^2 = 3/4 identity") {
    const TotalSpinOperators ops = total_spin_operators(SpinSystem::make(1));
    CHECK((ops.sx.entries() - 0.5 * st::pauli_x()).norm() <= 1e-15);
    CHECK((ops.sy.entries() - 0.5 * st::pauli_y()).norm() <= 1e-15);
    CHECK((ops.sz.entries() - 0.5 * st::pauli_z()).norm() <= 1e-15);
    CHECK((ops.s_squared.entries() - 0.75 * st::Mat::Identity(2, 2)).norm() <= 1e-15);
  }

  SUBCASE("two sites: singlet-triplet split of S^2") {
    const TotalSpinOperators ops = total_spin_operators(SpinSystem::make(2));
    const SpectrumSpec spec = oracle_spectrum(ops.s_squared);
    REQUIRE(spec.size() == 2);
    CHECK(spec.values()[0] == doctest::Approx(0.0));
    CHECK(spec.values()[1] == doctest::Approx(2.0));
    CHECK((*spec.degeneracies())[0] == 1);
    CHECK((*spec.degeneracies())[1] == 3);
  }

  SUBCASE("four sites: binomial Sz multiplicities") {
    const TotalSpinOperators ops = total_spin_operators(SpinSystem::make(4));
    const SpectrumSpec spec = oracle_spectrum(ops.sz);
    REQUIRE(spec.size() == 5);
    const std::vector<int> expected{1, 4, 6, 4, 1};
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(spec.values()[k] == doctest::Approx(-2.0 + double(k)));
      CHECK((*spec.degeneracies())[k] == expected[k]);
    }
  }

  SUBCASE("S^2 commutes with each component") {
    const TotalSpinOperators ops = total_spin_operators(SpinSystem::make(3));
    for (const Operator* a : {&ops.sx, &ops.sy, &ops.sz}) {
      CHECK(commutator(ops.s_squared, *a).frobenius_norm() <= 1e-12);
    }
  }

  SUBCASE("matches the independent tensor construction") {
    const TotalSpinOperators ops = total_spin_operators(SpinSystem::make(3));
    CHECK((ops.sx.entries() - st::total_sx(3)).norm() <= 1e-14);
    CHECK((ops.sz.entries() - st::total_sz(3)).norm() <= 1e-14);
  }

  CHECK_THROWS_AS(SpinSystem::make(0), std::invalid_argument);
  CHECK_THROWS_AS(SpinSystem::make(13), std::invalid_argument);
}

TEST_CASE("jordan-wigner ladder operators") {
  SUBCASE("single mode annihilator") {
    const auto [a, ad] = jordan_wigner_ladder(FermionSystem::make(1), 0);
    st::Mat expected(2, 2);
    expected << 0, 1, 0, 0;
    CHECK((a.entries() - expected).norm() == 0.0);
    CHECK((ad.entries() - expected.adjoint()).norm() == 0.0);
  }

  SUBCASE("mixed anticommutator vanishes across modes") {
    const FermionSystem sys = FermionSystem::make(2);
    const auto [a0, a0d] = jordan_wigner_ladder(sys, 0);
    const auto [a1, a1d] = jordan_wigner_ladder(sys, 1);
    const st::Mat anti = a0.entries() * a1d.entries() + a1d.entries() * a0.entries();
    CHECK(anti.norm() <= 1e-15);
  }

  SUBCASE("exhaustive anticommutation on three modes") {
    const FermionSystem sys = FermionSystem::make(3);
    std::vector<Operator> a, ad;
    for (int p = 0; p < 3; ++p) {
      auto [lo, hi] = jordan_wigner_ladder(sys, p);
      a.push_back(std::move(lo));
      ad.push_back(std::move(hi));
    }
    for (int p = 0; p < 3; ++p) {
      for (int q = 0; q < 3; ++q) {
        const st::Mat mixed = a[p].entries() * ad[q].entries() + ad[q].entries() * a[p].entries();
        const st::Mat same = a[p].entries() * a[q].entries() + a[q].entries() * a[p].entries();
        const st::Mat expected =
            p == q ? st::Mat(st::Mat::Identity(8, 8)) : st::Mat(st::Mat::Zero(8, 8));
        CHECK((mixed - expected).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK(same.cwiseAbs().maxCoeff() <= 1e-12);
      }
    }
  }

  CHECK_THROWS_AS(jordan_wigner_ladder(FermionSystem::make(2), 2), std::invalid_argument);
}

TEST_CASE("number operator") {
  const Operator n1 = number_operator(FermionSystem::make(1));
  st::Mat expected(2, 2);
  expected << 0, 0, 0, 1;
  CHECK((n1.entries() - expected).norm() == 0.0);

  const SpectrumSpec spec = oracle_spectrum(number_operator(FermionSystem::make(2)));
  REQUIRE(spec.size() == 3);
  CHECK((*spec.degeneracies()) == std::vector<int>{1, 2, 1});

  // Equals the ladder-built sum a^dag_p a_p on three modes.
  const FermionSystem sys = FermionSystem::make(3);
  st::Mat sum = st::Mat::Zero(8, 8);
  for (int p = 0; p < 3; ++p) {
    const auto [a, ad] = jordan_wigner_ladder(sys, p);
    sum += ad.entries() * a.entries();
  }
  CHECK((number_operator(sys).entries() - sum).norm() <= 1e-14);
}

TEST_CASE("heisenberg chain") {
  SUBCASE("two sites: singlet-triplet eigenvalues") {
    const SpectrumSpec spec = oracle_spectrum(heisenberg_chain(2, 1.0, false));
    REQUIRE(spec.size() == 2);
    CHECK(spec.values()[0] == doctest::Approx(-0.75));
    CHECK(spec.values()[1] == doctest::Approx(0.25));
    CHECK((*spec.degeneracies()) == std::vector<int>{1, 3});
  }

  SUBCASE("agrees with the independent bit-level construction") {
    for (bool periodic : {false, true}) {
      const Operator h = heisenberg_chain(4, 0.7, periodic);
      CHECK((h.entries() - st::heisenberg_bits(4, 0.7, periodic)).norm() <= 1e-13);
    }
  }

  SUBCASE("rotational invariance") {
    for (int n : {2, 3, 4, 5}) {
      const Operator h = heisenberg_chain(n, 1.0, true);
      const TotalSpinOperators ops = total_spin_operators(SpinSystem::make(n));
      CHECK(commutator(h, ops.sz).frobenius_norm() <= 1e-12);
      CHECK(commutator(h, ops.s_squared).frobenius_norm() <= 1e-12);
    }
  }

  CHECK_THROWS_AS(heisenberg_chain(1, 1.0, false), std::invalid_argument);
}

TEST_CASE("hubbard model") {
  SUBCASE("single site: only double occupation pays U") {
    const Operator h = hubbard_model(1, 1.0, 4.0);
    const EigenSystem sys = hermitian_eigensystem(h);
    CHECK(sys.eigenvalues(0) == doctest::Approx(0.0));
    CHECK(sys.eigenvalues(1) == doctest::Approx(0.0));
    CHECK(sys.eigenvalues(2) == doctest::Approx(0.0));
    CHECK(sys.eigenvalues(3) == doctest::Approx(4.0));
  }

  SUBCASE("dimer symmetries") {
    const Operator h = hubbard_model(2, 1.0, 4.0);
    const Operator n = hubbard_number_operator(2);
    const TotalSpinOperators spin = hubbard_spin_operators(2);
    CHECK(commutator(h, n).frobenius_norm() <= 1e-12);
    CHECK(commutator(h, spin.sz).frobenius_norm() <= 1e-12);
    CHECK(commutator(h, spin.s_squared).frobenius_norm() <= 1e-12);
  }

  SUBCASE("dimer half-filled ground state has zero spin") {
    const Operator h = hubbard_model(2, 1.0, 4.0);
    const EigenSystem sys = hermitian_eigensystem(h);
    const Operator n = hubbard_number_operator(2);
    const TotalSpinOperators spin = hubbard_spin_operators(2);
    // Lowest eigenstate inside the N = 2 sector (the absolute ground state
    // of the grand-canonical dimer is the one-electron bonding state).
    for (Index i = 0; i < h.dim(); ++i) {
      const Eigen::VectorXcd v = sys.eigenvectors.col(i);
      if ((n.entries() * v - 2.0 * v).norm() > 1e-8) continue;
      CHECK((v.adjoint() * spin.s_squared.entries() * v)(0).real() <= 1e-10);
      // Exact half-filled ground energy (U - sqrt(U^2 + 16 t^2)) / 2.
      CHECK(sys.eigenvalues(i) ==
            doctest::Approx((4.0 - std::sqrt(16.0 + 16.0)) / 2).epsilon(1e-12));
      break;
    }
  }

  CHECK_THROWS_AS(hubbard_model(5, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("site permutations and spin flip") {
  const SpinSystem two = SpinSystem::make(2);
  const Operator swap = site_permutation_operator(two, {1, 0});
  // SWAP in the little-endian product basis.
  st::Mat expected = st::Mat::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = 1;
  expected(1, 2) = expected(2, 1) = 1;
  CHECK((swap.entries() - expected).norm() == 0.0);

  const Operator flip = global_spin_flip(two);
  CHECK((flip.entries() * flip.entries() - st::Mat::Identity(4, 4)).norm() == 0.0);
  CHECK_THROWS_AS(site_permutation_operator(two, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(site_permutation_operator(two, {0}), std::invalid_argument);
}

TEST_CASE("declared spectra match the oracle") {
  SUBCASE("spin systems") {
    for (int n : {1, 2, 3, 4}) {
      const TotalSpinOperators ops = total_spin_operators(SpinSystem::make(n));
      const SpectrumSpec sz_declared = sz_total_spectrum(n);
      const SpectrumSpec sz_oracle = oracle_spectrum(ops.sz);
      REQUIRE(sz_declared.size() == sz_oracle.size());
      for (std::size_t k = 0; k < sz_declared.size(); ++k) {
        CHECK(sz_declared.values()[k] == doctest::Approx(sz_oracle.values()[k]));
        CHECK((*sz_declared.degeneracies())[k] == (*sz_oracle.degeneracies())[k]);
      }
      sz_declared.validate_against_dim(ops.sz.dim());

      const SpectrumSpec sq_declared = s_squared_spectrum(n);
      const SpectrumSpec sq_oracle = oracle_spectrum(ops.s_squared);
      REQUIRE(sq_declared.size() == sq_oracle.size());
      for (std::size_t k = 0; k < sq_declared.size(); ++k) {
        CHECK(sq_declared.values()[k] == doctest::Approx(sq_oracle.values()[k]));
        CHECK((*sq_declared.degeneracies())[k] == (*sq_oracle.degeneracies())[k]);
      }
    }
  }

  SUBCASE("fermion systems") {
    for (int n : {1, 2, 3}) {
      const SpectrumSpec declared = number_spectrum(n);
      const SpectrumSpec oracle = oracle_spectrum(number_operator(FermionSystem::make(n)));
      REQUIRE(declared.size() == oracle.size());
      for (std::size_t k = 0; k < declared.size(); ++k) {
        CHECK(declared.values()[k] == doctest::Approx(oracle.values()[k]));
        CHECK((*declared.degeneracies())[k] == (*oracle.degeneracies())[k]);
      }
    }
  }

  SUBCASE("hubbard operators") {
    const TotalSpinOperators spin = hubbard_spin_operators(2);
    const SpectrumSpec sz_declared = hubbard_sz_spectrum(2);
    const SpectrumSpec sz_oracle = oracle_spectrum(spin.sz);
    REQUIRE(sz_declared.size() == sz_oracle.size());
    for (std::size_t k = 0; k < sz_declared.size(); ++k) {
      CHECK(sz_declared.values()[k] == doctest::Approx(sz_oracle.values()[k]));
      CHECK((*sz_declared.degeneracies())[k] == (*sz_oracle.degeneracies())[k]);
    }

    const SpectrumSpec sq_declared = hubbard_s_squared_spectrum(2);
    const SpectrumSpec sq_oracle = oracle_spectrum(spin.s_squared);
    REQUIRE(sq_declared.size() == sq_oracle.size());
    for (std::size_t k = 0; k < sq_declared.size(); ++k) {
      CHECK(sq_declared.values()[k] == doctest::Approx(sq_oracle.values()[k]));
    }
  }
}

TEST_CASE("model symmetry sets close as expected") {
  // su(2): three total-spin components.
  const TotalSpinOperators ops = total_spin_operators(SpinSystem::make(3));
  const LieBasis su2 = lie_closure({ops.sx, ops.sy, ops.sz}, 8);
  CHECK(su2.size() == 3);

  // Abelian pair for the Hubbard dimer: number and Sz.
  const LieBasis abelian = lie_closure({hubbard_number_operator(2), hubbard_spin_operators(2).sz}, 8);
  CHECK(abelian.size() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) CHECK(std::abs(abelian.structure().at(i, j, k)) <= 1e-12);
}
