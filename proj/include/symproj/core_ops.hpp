// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "symproj/operator.hpp"
#include "symproj/spectrum.hpp"

namespace symproj {

/// ab - ba. Dimension mismatch throws, naming both dims.
Operator commutator(const Operator& a, const Operator& b);

/// trace(a^dag b).
Complex frobenius_inner(const Operator& a, const Operator& b);

/// exp(scalar * a) by scaling-and-squaring with a truncated Taylor series.
/// Deliberately avoids diagonalization so projector constructors built on it
/// never depend on an eigensolve; the eigendecomposition route is reserved
/// for oracle cross-checks.
Operator matrix_exponential(const Operator& a, Complex scalar);

/// Dense Hermitian eigendecomposition. Input must be Hermitian to 1e-10
/// (entrywise); otherwise throws with the violation magnitude.
EigenSystem hermitian_eigensystem(const Operator& a);

/// P = sum of |phi_n><phi_n| over eigenvalues within cluster_tol of target.
/// Throws if no eigenvalue is that close, listing the nearest one.
Operator spectral_projector_oracle(const Operator& a, double target,
                                   double cluster_tol = kClusterTol);

/// Distinct eigenvalues of `a` clustered to cluster_tol, with degeneracies,
/// provenance tagged Source::Oracle. Spacing is set when the clustered values
/// are equidistant to 1e-10.
SpectrumSpec oracle_spectrum(const Operator& a, double cluster_tol = kClusterTol);

}  // namespace symproj
