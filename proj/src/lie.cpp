// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#include "symproj/lie.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "format17.hpp"

namespace symproj {

namespace {

Eigen::MatrixXcd gram_matrix(const std::vector<Operator>& elements) {
  const std::size_t n = elements.size();
  Eigen::MatrixXcd g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = frobenius_inner(elements[i], elements[j]);
  return g;
}

void require_equal_dims(const std::vector<Operator>& ops, const char* context) {
  for (const Operator& op : ops) {
    if (op.dim() != ops.front().dim()) {
      throw std::invalid_argument(std::string(context) + ": operators of unequal dimension " +
                                  std::to_string(ops.front().dim()) + " vs " +
                                  std::to_string(op.dim()));
    }
  }
}

}  // namespace

StructureConstants structure_constants(const std::vector<Operator>& elements,
                                       double residual_tol) {
  if (elements.empty()) throw std::invalid_argument("structure_constants: empty element list");
  require_equal_dims(elements, "structure_constants");
  const std::size_t n = elements.size();
  const Eigen::MatrixXcd g = gram_matrix(elements);
  const auto solver = g.fullPivLu();

  StructureConstants c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Operator comm = commutator(elements[i], elements[j]);
      Eigen::VectorXcd rhs(n);
      for (std::size_t k = 0; k < n; ++k) rhs(k) = frobenius_inner(elements[k], comm);
      const Eigen::VectorXcd coeff = solver.solve(rhs);

      Matrix recon = Matrix::Zero(comm.dim(), comm.dim());
      for (std::size_t k = 0; k < n; ++k) recon += coeff(k) * elements[k].entries();
      const double residual = (comm.entries() - recon).norm();
      if (residual > residual_tol) {
        throw std::invalid_argument("structure_constants: set not closed; commutator (" +
                                    std::to_string(i) + ", " + std::to_string(j) +
                                    ") leaves the span with residual " + detail::g17(residual));
      }
      for (std::size_t k = 0; k < n; ++k) {
        c.at(i, j, k) = coeff(k);
        c.at(j, i, k) = -coeff(k);
      }
    }
  }
  return c;
}

LieBasis LieBasis::make(std::vector<Operator> elements, double gram_tol, double closure_tol) {
  if (elements.empty()) throw std::invalid_argument("LieBasis: empty element list");
  require_equal_dims(elements, "LieBasis");

  const Eigen::MatrixXcd g = gram_matrix(elements);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig <= gram_tol) {
    throw std::invalid_argument("LieBasis: elements not linearly independent; smallest Gram "
                                "eigenvalue " + detail::g17(min_eig) + " <= gram_tol " +
                                detail::g17(gram_tol));
  }

  StructureConstants c = structure_constants(elements, closure_tol);
  const std::size_t n = elements.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (std::abs(c.at(i, j, k) + c.at(j, i, k)) > 1e-12) {
          throw std::logic_error("LieBasis: structure constants not antisymmetric");
        }

  return LieBasis(std::move(elements), std::move(c), gram_tol);
}

LieBasis lie_closure(const std::vector<Operator>& seed, std::size_t max_dim, double tol) {
  if (seed.empty()) throw std::invalid_argument("lie_closure: empty seed");
  require_equal_dims(seed, "lie_closure");
  if (max_dim < seed.size()) {
    throw std::invalid_argument("lie_closure: max_dim " + std::to_string(max_dim) +
                                " smaller than seed size " + std::to_string(seed.size()));
  }

  std::vector<Operator> basis;
  std::size_t dropped = 0;

  // Gram-Schmidt admission; returns true when the candidate opened a new
  // direction. Anti-Hermitian residuals are rephased by -i so Hermitian
  // seeds close into Hermitian bases.
  const auto admit = [&](const Operator& candidate) -> bool {
    const double original_norm = candidate.frobenius_norm();
    if (original_norm == 0.0) return false;
    Matrix r = candidate.entries();
    for (const Operator& e : basis) {
      r -= (e.entries().adjoint() * r).trace() * e.entries();
    }
    const double residual = r.norm();
    if (residual <= tol * original_norm) return false;
    if ((r + r.adjoint().eval()).norm() <= 1e-12 * residual) {
      r = Complex(0, -1) * r;
    }
    basis.emplace_back(Matrix(r / residual));
    return true;
  };

  for (const Operator& s : seed) {
    if (!admit(s)) ++dropped;
  }
  if (dropped > 0) {
    std::cerr << "lie_closure: dropped " << dropped
              << " linearly dependent seed member(s)\n";
  }
  if (basis.empty()) throw std::invalid_argument("lie_closure: seed spans nothing");

  // Breadth-first over commutator pairs; newly admitted elements extend the
  // pair frontier.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (admit(commutator(basis[j], basis[i])) && basis.size() > max_dim) {
        throw std::runtime_error("lie_closure: closure reached dimension " +
                                 std::to_string(basis.size()) + " exceeding max_dim " +
                                 std::to_string(max_dim));
      }
    }
  }

  LieBasis result = LieBasis::make(std::move(basis), 1e-10, std::max(tol, 1e-10));
  result.dropped_seed_members = dropped;
  return result;
}

CommutingSet maximal_commuting_subset(const LieBasis& basis, double tol) {
  CommutingSet set;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool commutes = true;
    for (std::size_t m : set.member_indices) {
      if (commutator(basis.elements()[i], basis.elements()[m]).frobenius_norm() > tol) {
        commutes = false;
        break;
      }
    }
    if (commutes) set.member_indices.push_back(i);
  }
  try {
    Operator casimir = quadratic_casimir(basis);
    if (is_casimir(casimir, basis) <= 1e-10) set.casimirs.push_back(std::move(casimir));
  } catch (const std::invalid_argument&) {
    // Killing form not regular; no automatic Casimir for this basis.
  }
  return set;
}

Operator quadratic_casimir(const LieBasis& basis) {
  const std::size_t n = basis.size();
  const StructureConstants& c = basis.structure();

  // Killing form from the adjoint representation: (ad_i)_{kj} = c_ij^(k).
  std::vector<Eigen::MatrixXcd> ad(n, Eigen::MatrixXcd::Zero(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) ad[i](k, j) = c.at(i, j, k);

  Eigen::MatrixXcd killing(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) killing(i, j) = (ad[i] * ad[j]).trace();

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(killing, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (smin <= 0 || smax / smin > 1e8) {
    throw std::invalid_argument("quadratic_casimir: algebra not semi-simple; supply Casimir "
                                "manually (Killing form condition " +
                                (smin > 0 ? detail::g17(smax / smin) : std::string("inf")) + ")");
  }
  const Eigen::MatrixXcd kinv = killing.fullPivLu().inverse();

  const Index d = basis.dim();
  Matrix cas = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cas += kinv(i, j) * basis.elements()[i].entries() * basis.elements()[j].entries();

  Operator result(std::move(cas), Hermiticity::Unknown);
  const double residual = is_casimir(result, basis);
  if (residual > 1e-9) {
    throw std::runtime_error("quadratic_casimir: candidate fails to commute with the basis, "
                             "residual " + detail::g17(residual));
  }
  return result;
}

double is_casimir(const Operator& c, const LieBasis& basis) {
  double worst = 0.0;
  for (const Operator& e : basis.elements()) {
    require_same_dim(c, e, "is_casimir");
    worst = std::max(worst, commutator(c, e).frobenius_norm());
  }
  return worst;
}

double jacobi_residual(const StructureConstants& c) {
  const std::size_t n = c.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Complex sum(0, 0);
          for (std::size_t m = 0; m < n; ++m) {
            sum += c.at(i, j, m) * c.at(m, k, l) + c.at(j, k, m) * c.at(m, i, l) +
                   c.at(k, i, m) * c.at(m, j, l);
          }
          worst = std::max(worst, std::abs(sum));
        }
  return worst;
}

}  // namespace symproj
