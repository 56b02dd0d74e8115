// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "symproj/core_ops.hpp"
#include "test_helpers.hpp"

using namespace symproj;
namespace st = symproj::testing;

namespace {

Operator herm(const st::Mat& m) { return Operator(m, Hermiticity::Yes); }

Operator random_operator(std::mt19937& rng, Index dim) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  st::Mat m(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) m(i, j) = Complex(u(rng), u(rng));
  return Operator(m);
}

}  // namespace

TEST_CASE("commutator basics") {
  const Operator sx = herm(0.5 * st::pauli_x());
  const Operator sy = herm(0.5 * st::pauli_y());
  const Operator sz = herm(0.5 * st::pauli_z());

  CHECK(commutator(Operator::identity(2), sx).frobenius_norm() == doctest::Approx(0.0));

  // [Sx, Sy] = i Sz
  const Operator c = commutator(sx, sy);
  CHECK((c.entries() - Complex(0, 1) * sz.entries()).norm() <= 1e-15);

  // [Sz_total, S^2_total] on two spins, both matrices built explicitly.
  const Operator sz2 = herm(st::total_sz(2));
  const Operator ssq2 = herm(st::total_s_squared(2));
  CHECK(commutator(sz2, ssq2).entries().cwiseAbs().maxCoeff() <= 1e-14);

  CHECK_THROWS_WITH_AS(commutator(sx, Operator::identity(4)),
                       doctest::Contains("2 vs 4"), std::invalid_argument);
}

TEST_CASE("commutator is bilinear and satisfies Jacobi on random triples") {
  std::mt19937 rng(20240811);
  for (Index dim : {2, 5, 16}) {
    const Operator a = random_operator(rng, dim);
    const Operator b = random_operator(rng, dim);
    const Operator c = random_operator(rng, dim);

    // antisymmetry
    CHECK((commutator(a, b).entries() + commutator(b, a).entries()).norm() <= 1e-12);

    // bilinearity in the first argument
    const Complex alpha(0.7, -0.3);
    const st::Mat lhs = commutator(Operator(alpha * a.entries() + b.entries()), c).entries();
    const st::Mat rhs = alpha * commutator(a, c).entries() + commutator(b, c).entries();
    CHECK((lhs - rhs).norm() <= 1e-12);

    // Jacobi identity
    const st::Mat jac = commutator(a, commutator(b, c)).entries() +
                        commutator(b, commutator(c, a)).entries() +
                        commutator(c, commutator(a, b)).entries();
    CHECK(jac.norm() <= 1e-12 * std::max(1.0, a.entries().norm() * b.entries().norm() *
                                                  c.entries().norm()));
  }
}

TEST_CASE("matrix_exponential basics") {
  const Operator sz = herm(0.5 * st::pauli_z());

  SUBCASE("zero scalar gives identity") {
    std::mt19937 rng(7);
    const Operator a = random_operator(rng, 6);
    const Operator e = matrix_exponential(a, Complex(0, 0));
    CHECK((e.entries() - st::Mat::Identity(6, 6)).norm() <= 1e-15);
  }

  SUBCASE("exp(i 2pi Sz) = -I for spin-1/2") {
    const Operator e = matrix_exponential(sz, Complex(0, 2 * M_PI));
    CHECK((e.entries() + st::Mat::Identity(2, 2)).norm() <= 1e-13);
  }

  SUBCASE("matches the eigendecomposition oracle for Hermitian input") {
    const Operator jy = herm(st::total_sy(2));
    const Operator e = matrix_exponential(jy, Complex(0, M_PI));
    const EigenSystem sys = hermitian_eigensystem(jy);
    st::Mat expected = st::Mat::Zero(4, 4);
    for (Index i = 0; i < 4; ++i) {
      expected += std::exp(Complex(0, M_PI) * sys.eigenvalues(i)) * sys.eigenvectors.col(i) *
                  sys.eigenvectors.col(i).adjoint();
    }
    CHECK((e.entries() - expected).norm() <= 1e-11);
  }

  SUBCASE("unitary for Hermitian generator and real angle") {
    const Operator jx = herm(st::total_sx(3));
    for (double phi : {0.3, 1.7, 5.5}) {
      const Operator u = matrix_exponential(jx, Complex(0, phi));
      CHECK((u.entries().adjoint() * u.entries() - st::Mat::Identity(8, 8)).norm() <= 1e-11);
    }
  }

  SUBCASE("non-finite entries are rejected") {
    st::Mat bad = st::Mat::Zero(2, 2);
    bad(0, 0) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(matrix_exponential(Operator(bad), Complex(1, 0)), std::invalid_argument);
  }
}

TEST_CASE("hermitian_eigensystem") {
  SUBCASE("sorts a diagonal matrix") {
    st::Mat d = st::Mat::Zero(3, 3);
    d(0, 0) = 3;
    d(1, 1) = 1;
    d(2, 2) = 2;
    const EigenSystem sys = hermitian_eigensystem(herm(d));
    CHECK(sys.eigenvalues(0) == doctest::Approx(1));
    CHECK(sys.eigenvalues(1) == doctest::Approx(2));
    CHECK(sys.eigenvalues(2) == doctest::Approx(3));
  }

  SUBCASE("Sz_total on two spins has spectrum (-1, 0, 0, 1)") {
    const EigenSystem sys = hermitian_eigensystem(herm(st::total_sz(2)));
    CHECK(sys.eigenvalues(0) == doctest::Approx(-1));
    CHECK(sys.eigenvalues(1) == doctest::Approx(0));
    CHECK(sys.eigenvalues(2) == doctest::Approx(0));
    CHECK(sys.eigenvalues(3) == doctest::Approx(1));
  }

  SUBCASE("Heisenberg 4-site spectrum matches an independent dense solver") {
    const st::Mat h = st::heisenberg_bits(4, 1.0, true);
    const EigenSystem sys = hermitian_eigensystem(herm(h));
    // Independent route: general (non-selfadjoint) complex QR solver.
    Eigen::ComplexEigenSolver<st::Mat> general(h);
    Eigen::VectorXd ref = general.eigenvalues().real();
    std::sort(ref.begin(), ref.end());
    for (Index i = 0; i < h.rows(); ++i) {
      CHECK(sys.eigenvalues(i) == doctest::Approx(ref(i)).epsilon(1e-10));
    }
  }

  SUBCASE("rejects non-Hermitian input with the violation magnitude") {
    st::Mat m = st::Mat::Zero(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_WITH_AS(hermitian_eigensystem(Operator(m)), doctest::Contains("not Hermitian"),
                         std::invalid_argument);
  }
}

TEST_CASE("spectral_projector_oracle") {
  SUBCASE("diagonal matrix, isolated eigenvalue") {
    st::Mat d = st::Mat::Zero(3, 3);
    d(0, 0) = 1;
    d(1, 1) = 2;
    d(2, 2) = 3;
    const Operator p = spectral_projector_oracle(herm(d), 2.0);
    st::Mat expected = st::Mat::Zero(3, 3);
    expected(1, 1) = 1;
    CHECK((p.entries() - expected).norm() <= 1e-13);
  }

  SUBCASE("Sz two spins, target 0 is the rank-2 middle sector") {
    const Operator p = spectral_projector_oracle(herm(st::total_sz(2)), 0.0);
    CHECK(std::abs(p.entries().trace() - Complex(2, 0)) <= 1e-12);
    st::Mat expected = st::Mat::Zero(4, 4);
    expected(1, 1) = expected(2, 2) = 1;
    CHECK((p.entries() - expected).norm() <= 1e-12);
  }

  SUBCASE("S^2 two spins, target 0 is the singlet projector") {
    const Operator p = spectral_projector_oracle(herm(st::total_s_squared(2)), 0.0);
    st::Mat expected = st::Mat::Zero(4, 4);
    expected(1, 1) = expected(2, 2) = 0.5;
    expected(1, 2) = expected(2, 1) = -0.5;
    CHECK((p.entries() - expected).norm() <= 1e-12);
  }

  SUBCASE("missing eigenvalue lists the nearest one") {
    st::Mat d = st::Mat::Zero(2, 2);
    d(1, 1) = 1;
    CHECK_THROWS_WITH_AS(spectral_projector_oracle(herm(d), 0.4),
                         doctest::Contains("nearest"), std::invalid_argument);
  }

  SUBCASE("projector axioms and resolution of identity") {
    for (int n : {2, 3}) {
      const Operator a = herm(st::total_sz(n));
      const SpectrumSpec spec = oracle_spectrum(a);
      const Index dim = a.dim();
      st::Mat sum = st::Mat::Zero(dim, dim);
      for (double v : spec.values()) {
        const Operator p = spectral_projector_oracle(a, v);
        const double scale = static_cast<double>(dim);
        CHECK((p.entries() * p.entries() - p.entries()).norm() / scale <= 1e-12);
        CHECK((p.entries() - p.entries().adjoint()).norm() / scale <= 1e-12);
        CHECK(commutator(p, a).entries().norm() / scale <= 1e-12);
        sum += p.entries();
      }
      CHECK((sum - st::Mat::Identity(dim, dim)).norm() <= 1e-11);
    }
  }
}

TEST_CASE("frobenius_inner") {
  const Operator sx = herm(0.5 * st::pauli_x());
  const Operator sy = herm(0.5 * st::pauli_y());
  const Operator sz = herm(0.5 * st::pauli_z());
  CHECK(frobenius_inner(Operator::identity(2), Operator::identity(2)) == Complex(2, 0));
  CHECK(std::abs(frobenius_inner(sx, sy)) <= 1e-15);
  CHECK(std::abs(frobenius_inner(sz, sz) - Complex(0.5, 0)) <= 1e-15);
  CHECK_THROWS_AS(frobenius_inner(sx, Operator::identity(4)), std::invalid_argument);
}

TEST_CASE("operator construction and hermiticity metadata") {
  st::Mat m(2, 3);
  m.setZero();
  CHECK_THROWS_WITH_AS(Operator{m}, doctest::Contains("square"), std::invalid_argument);

  st::Mat almost = st::pauli_x();
  almost(0, 1) += 1e-6;
  CHECK_THROWS_AS(Operator(almost, Hermiticity::Yes), std::invalid_argument);
  CHECK_NOTHROW(Operator(almost, Hermiticity::Unknown));
}

TEST_CASE("operator text round trip is bit exact") {
  std::mt19937 rng(99);
  const Operator a = random_operator(rng, 5);
  const Operator b = from_text(to_text(a));
  REQUIRE(b.dim() == a.dim());
  CHECK(a.entries() == b.entries());

  // A second trip through text is byte identical.
  CHECK(to_text(a) == to_text(b));
}

TEST_CASE("spectrum spec validation") {
  CHECK_THROWS_AS(SpectrumSpec::declared({1.0, 1.0 + 1e-9}), std::invalid_argument);
  CHECK_THROWS_AS(SpectrumSpec::declared({0.0, 1.0, 2.1}, std::nullopt, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(SpectrumSpec::declared({0.0, 1.0}, std::vector<int>{1, 0}),
                  std::invalid_argument);

  const SpectrumSpec s = SpectrumSpec::declared({-1.0, 0.0, 1.0}, std::vector<int>{1, 2, 1}, 1.0);
  CHECK(s.index_of(0.0) == 1);
  CHECK(s.contains(1.0));
  CHECK_FALSE(s.contains(0.5));
  CHECK(s.min_adjacent_gap(1) == doctest::Approx(1.0));
  CHECK_NOTHROW(s.validate_against_dim(4));
  CHECK_THROWS_AS(s.validate_against_dim(5), std::invalid_argument);

  const SpectrumSpec derived = oracle_spectrum(herm(st::total_sz(2)));
  CHECK(derived.source() == SpectrumSpec::Source::Oracle);
  REQUIRE(derived.size() == 3);
  CHECK(derived.values()[0] == doctest::Approx(-1.0));
  CHECK(derived.spacing().has_value());
  CHECK(*derived.spacing() == doctest::Approx(1.0));
  CHECK((*derived.degeneracies())[1] == 2);
}
