// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "symproj/core_ops.hpp"
#include "symproj/operator.hpp"

namespace symproj {

/// Expansion coefficients c[i][j][k] of each pairwise commutator
/// [e_i, e_j] = sum_k c_ij^(k) e_k in a closed operator basis.
class StructureConstants {
public:
  explicit StructureConstants(std::size_t n) : n_(n), c_(n * n * n, Complex(0, 0)) {}

  Complex& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
  Complex at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  std::size_t size() const { return n_; }

private:
  std::size_t n_;
  std::vector<Complex> c_;
};

/// Least-squares expansion of every [e_i, e_j] in the span of `elements`
/// under the Frobenius inner product. A per-pair residual above residual_tol
/// throws "set not closed". The result is antisymmetric in (i, j).
StructureConstants structure_constants(const std::vector<Operator>& elements,
                                       double residual_tol = 1e-10);

/// A linearly independent operator list closed under commutation, together
/// with its structure-constant tensor.
class LieBasis {
public:
  /// Validates linear independence (smallest Gram eigenvalue > gram_tol),
  /// commutator closure (residual <= closure_tol) and antisymmetry of the
  /// computed structure constants.
  static LieBasis make(std::vector<Operator> elements, double gram_tol = 1e-10,
                       double closure_tol = 1e-10);

  const std::vector<Operator>& elements() const { return elements_; }
  const StructureConstants& structure() const { return structure_; }
  double gram_tol() const { return gram_tol_; }
  std::size_t size() const { return elements_.size(); }
  Index dim() const { return elements_.front().dim(); }

  /// Number of seed members dropped as linearly dependent when this basis
  /// was produced by lie_closure; zero otherwise.
  std::size_t dropped_seed_members = 0;

private:
  LieBasis(std::vector<Operator> elements, StructureConstants structure, double gram_tol)
      : dropped_seed_members(0),
        elements_(std::move(elements)),
        structure_(std::move(structure)),
        gram_tol_(gram_tol) {}

  std::vector<Operator> elements_;
  StructureConstants structure_;
  double gram_tol_;
};

/// Maximal mutually commuting subset of a LieBasis plus any Casimir
/// operators attached to it (each commuting with every basis element).
struct CommutingSet {
  std::vector<std::size_t> member_indices;
  std::vector<Operator> casimirs;
};

/// Breadth-first commutator closure of the seed with Gram-Schmidt admission
/// under the Frobenius inner product: a commutator direction is admitted
/// when its orthogonal residual exceeds tol times its norm. Elements of the
/// result are orthonormal; anti-Hermitian new directions are rephased by -i
/// so a Hermitian seed stays Hermitian. Linearly dependent seed members are
/// dropped with a notice. Throws when the closure exceeds max_dim.
LieBasis lie_closure(const std::vector<Operator>& seed, std::size_t max_dim, double tol = 1e-10);

/// Greedy (input-order) maximal subset with pairwise commutator norms
/// <= tol. The quadratic Casimir is attached when the Killing form is
/// regular and the candidate commutes with the whole basis to 1e-10.
CommutingSet maximal_commuting_subset(const LieBasis& basis, double tol = 1e-10);

/// C = sum_ij (kappa^-1)_ij e_i e_j with kappa the Killing form computed
/// from the structure constants. Requires a semi-simple basis: kappa
/// invertible with condition number below 1e8, otherwise throws
/// "algebra not semi-simple; supply Casimir manually".
Operator quadratic_casimir(const LieBasis& basis);

/// Max over basis elements of ||[c, e_i]||_F; the caller compares against a
/// tolerance.
double is_casimir(const Operator& c, const LieBasis& basis);

/// Max over (i,j,k,l) of |sum_m (c_ij^m c_mk^l + c_jk^m c_mi^l + c_ki^m c_mj^l)|.
double jacobi_residual(const StructureConstants& c);

}  // namespace symproj
