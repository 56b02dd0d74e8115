// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#include "symproj/core_ops.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "format17.hpp"

namespace symproj {

Operator commutator(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "commutator");
  return Operator(a.entries() * b.entries() - b.entries() * a.entries());
}

Complex frobenius_inner(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "frobenius_inner");
  return (a.entries().adjoint() * b.entries()).trace();
}

Operator matrix_exponential(const Operator& a, Complex scalar) {
  Matrix m = scalar * a.entries();
  if (!m.allFinite()) {
    throw std::invalid_argument("matrix_exponential: non-finite entries in scalar * a");
  }
  const Index n = m.rows();

  // Scale until the infinity norm is at most 1/2, Taylor-sum to machine
  // precision, then square back up.
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    m /= std::pow(2.0, squarings);
  }

  Matrix sum = Matrix::Identity(n, n) + m;
  Matrix term = m;
  constexpr int kMaxTerms = 64;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int k = 2; k <= kMaxTerms; ++k) {
    term = (term * m) / static_cast<double>(k);
    sum += term;
    if (term.norm() <= eps * sum.norm()) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return Operator(std::move(sum));
}

EigenSystem hermitian_eigensystem(const Operator& a) {
  const double violation = a.hermiticity_violation();
  if (violation > 1e-10) {
    throw std::invalid_argument("hermitian_eigensystem: input not Hermitian, max|A - A^dag| = " +
                                detail::g17(violation));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(
      0.5 * (a.entries() + a.entries().adjoint()));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigensystem: eigensolver failed to converge");
  }
  EigenSystem sys{solver.eigenvalues(), solver.eigenvectors()};

  const Matrix recon = sys.eigenvectors * sys.eigenvalues.cast<Complex>().asDiagonal() *
                       sys.eigenvectors.adjoint();
  const double max_a = a.entries().cwiseAbs().maxCoeff();
  const double recon_err = (a.entries() - recon).cwiseAbs().maxCoeff();
  if (recon_err > 1e-10 * std::max(max_a, 1.0)) {
    throw std::runtime_error("hermitian_eigensystem: reconstruction residual " +
                             detail::g17(recon_err) + " exceeds tolerance");
  }
  const Index n = a.dim();
  const double ortho_err =
      (sys.eigenvectors.adjoint() * sys.eigenvectors - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (ortho_err > 1e-12) {
    throw std::runtime_error("hermitian_eigensystem: eigenvector columns not orthonormal, residual " +
                             detail::g17(ortho_err));
  }
  return sys;
}

Operator spectral_projector_oracle(const Operator& a, double target, double cluster_tol) {
  const EigenSystem sys = hermitian_eigensystem(a);
  const Index n = a.dim();
  std::vector<Index> selected;
  double nearest = sys.eigenvalues(0);
  for (Index i = 0; i < n; ++i) {
    const double lam = sys.eigenvalues(i);
    if (std::abs(lam - target) <= cluster_tol) selected.push_back(i);
    if (std::abs(lam - target) < std::abs(nearest - target)) nearest = lam;
  }
  if (selected.empty()) {
    throw std::invalid_argument("spectral_projector_oracle: no eigenvalue within " +
                                detail::g17(cluster_tol) + " of target " + detail::g17(target) +
                                "; nearest is " + detail::g17(nearest));
  }
  Matrix p = Matrix::Zero(n, n);
  for (Index i : selected) {
    p += sys.eigenvectors.col(i) * sys.eigenvectors.col(i).adjoint();
  }
  p = 0.5 * (p + p.adjoint().eval());
  return Operator(std::move(p), Hermiticity::Yes);
}

SpectrumSpec oracle_spectrum(const Operator& a, double cluster_tol) {
  const EigenSystem sys = hermitian_eigensystem(a);
  std::vector<double> values;
  std::vector<int> degeneracies;
  const Index n = a.dim();
  Index i = 0;
  while (i < n) {
    // Chain eigenvalues whose adjacent gap stays within cluster_tol.
    Index j = i;
    double sum = 0.0;
    while (j < n && (j == i || sys.eigenvalues(j) - sys.eigenvalues(j - 1) <= cluster_tol)) {
      sum += sys.eigenvalues(j);
      ++j;
    }
    values.push_back(sum / static_cast<double>(j - i));
    degeneracies.push_back(static_cast<int>(j - i));
    i = j;
  }
  return SpectrumSpec::oracle_derived(std::move(values), std::move(degeneracies), cluster_tol);
}

}  // namespace symproj
