// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "symproj/operator.hpp"

namespace symproj {

/// Default absolute tolerance for clustering nearby eigenvalues into one
/// spectrum entry.
inline constexpr double kClusterTol = 1e-8;

/// The distinct eigenvalues of a symmetry operator, optionally with
/// degeneracies and an equidistant spacing, plus provenance: declared by the
/// caller or derived from the eigendecomposition oracle.
class SpectrumSpec {
public:
  enum class Source { Declared, Oracle };

  /// Validated construction from caller-supplied data. Values must be
  /// strictly increasing with adjacent gaps >= cluster_tol; if `spacing` is
  /// set every gap must match it to 1e-10; degeneracies must be positive.
  static SpectrumSpec declared(std::vector<double> values,
                               std::optional<std::vector<int>> degeneracies = std::nullopt,
                               std::optional<double> spacing = std::nullopt,
                               double cluster_tol = kClusterTol);

  /// Same validation, provenance tagged as oracle-derived.
  static SpectrumSpec oracle_derived(std::vector<double> values,
                                     std::vector<int> degeneracies,
                                     double cluster_tol = kClusterTol);

  const std::vector<double>& values() const { return values_; }
  const std::optional<std::vector<int>>& degeneracies() const { return degeneracies_; }
  std::optional<double> spacing() const { return spacing_; }
  Source source() const { return source_; }

  std::size_t size() const { return values_.size(); }

  /// Index of the spectrum value within `tol` of x; throws if none matches.
  std::size_t index_of(double x, double tol = kClusterTol) const;
  bool contains(double x, double tol = kClusterTol) const;

  /// Smallest gap between x = values()[j] and its neighbours; throws for a
  /// one-point spectrum.
  double min_adjacent_gap(std::size_t j) const;

  /// Degeneracy sum must equal the dimension of the operator described.
  void validate_against_dim(Index dim) const;

private:
  SpectrumSpec() = default;

  std::vector<double> values_;
  std::optional<std::vector<int>> degeneracies_;
  std::optional<double> spacing_;
  Source source_ = Source::Declared;
};

/// Eigendecomposition of a Hermitian operator: ascending eigenvalues and the
/// unitary matrix of eigenvector columns.
struct EigenSystem {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;
};

}  // namespace symproj
