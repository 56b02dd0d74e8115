// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symproj/core_ops.hpp"
#include "symproj/operator.hpp"
#include "symproj/spectrum.hpp"

namespace symproj {

enum class ProjectorMethod {
  Lagrange,
  FourierEquidistant,
  CyclicQuadrature,
  Riesz,
  GroupCharacter,
  AngularMomentum,
  Composite,
  Oracle,
};

const char* to_string(ProjectorMethod method);

/// A constructed projector with its diagnostics. `converged` requires the
/// idempotency and hermiticity residuals below 1e-6, the trace within 1e-6
/// of a non-negative integer, and any aliasing/ordering residual in bounds.
/// `trivial` marks an identically vanishing product (norm <= 1e-10).
struct ProjectorReport {
  Operator matrix;
  double idempotency_residual;
  double hermiticity_residual;
  double trace;
  ProjectorMethod method;
  SpectrumSpec::Source spectrum_source;
  bool converged;
  bool trivial;

  /// Scalar orthogonality defect max over foreign spectrum values of the
  /// discrete exponential sum; set by the Fourier and cyclic constructors
  /// when a spectrum is supplied.
  std::optional<double> aliasing_residual;

  /// ||product - reversed product|| for composite constructions.
  std::optional<double> order_residual;
};

/// One irreducible representation row of a character table: the characters
/// are indexed by group-element position.
struct Irrep {
  std::string label;
  int dimension;
  std::vector<Complex> characters;
};

class CharacterTable {
public:
  /// Validates one character per element and row orthogonality
  /// sum_k chi*(k) chi'(k) = |G| delta to 1e-10. A complete table must in
  /// addition satisfy sum of squared irrep dimensions = |G|.
  static CharacterTable make(std::vector<Irrep> irreps, std::size_t group_order, bool complete);

  const std::vector<Irrep>& irreps() const { return irreps_; }
  std::size_t group_order() const { return group_order_; }
  bool complete() const { return complete_; }
  const Irrep& find(const std::string& label) const;

private:
  CharacterTable() = default;
  std::vector<Irrep> irreps_;
  std::size_t group_order_ = 0;
  bool complete_ = false;
};

/// Built-in complete tables: "Z2" .. "Z8" (cyclic, irreps labeled k0, k1,
/// ...) and "S3" (elements ordered e, (01), (02), (12), (012), (021); irreps
/// trivial, sign, standard).
CharacterTable builtin_character_table(const std::string& name);

/// A finite multiplicative group of operators together with its character
/// table. Element order fixes the character indexing.
class GroupRep {
public:
  /// Validates multiplicative closure to 1e-10, the presence of an identity
  /// element and of an inverse for every element, and the label/table sizes.
  static GroupRep make(std::vector<Operator> elements, std::vector<std::string> element_labels,
                       CharacterTable table);

  const std::vector<Operator>& elements() const { return elements_; }
  const std::vector<std::string>& element_labels() const { return element_labels_; }
  const CharacterTable& table() const { return table_; }
  std::size_t order() const { return elements_.size(); }

private:
  GroupRep(std::vector<Operator> e, std::vector<std::string> l, CharacterTable t)
      : elements_(std::move(e)), element_labels_(std::move(l)), table_(std::move(t)) {}
  std::vector<Operator> elements_;
  std::vector<std::string> element_labels_;
  CharacterTable table_;
};

/// Lagrange interpolation polynomial in the operator: the product over
/// non-target spectrum values of (O - o_n) / (o_j - o_n), ascending in n.
ProjectorReport lagrange_projector(const Operator& o, const SpectrumSpec& spectrum,
                                   std::size_t target_index);
/// Convenience path deriving the spectrum from the eigendecomposition
/// oracle; the report records the oracle provenance.
ProjectorReport lagrange_projector(const Operator& o, double target);

/// P = (1/M) sum_{k=1..M} exp(2 pi i k (O - target) / (spacing M)); exact
/// for spectra whose differences are integer multiples of `spacing` spanning
/// fewer than M values. With a spectrum supplied, predicted aliasing or a
/// spacing mismatch flags non-convergence and records the defect.
ProjectorReport equidistant_fourier_projector(const Operator& o, double target, double spacing,
                                              int terms,
                                              const std::optional<SpectrumSpec>& spectrum = {});

/// P = (1/M) sum_{m=0..M-1} exp(i phi_m (O - target) / rescale) with
/// phi_m = 2 pi m / M: the uniform discretization of the cyclic-group
/// integral, each element produced by matrix_exponential.
ProjectorReport cyclic_quadrature_projector(const Operator& o, double target, int nodes,
                                            double rescale,
                                            const std::optional<SpectrumSpec>& spectrum = {});

/// Contour integral of the resolvent over a counterclockwise circle of the
/// given radius centered at the target, trapezoid-discretized:
/// P = (1/2 pi i) sum_m w_m (z_m - O)^-1. The circle must enclose only the
/// target value of the supplied spectrum; violations throw before any solve.
ProjectorReport riesz_projector(const Operator& o, const SpectrumSpec& spectrum, double target,
                                double radius, int nodes = 64);
ProjectorReport riesz_projector(const Operator& o, double target, double radius, int nodes = 64);

/// P_Gamma = (d_Gamma / |G|) sum_k chi_Gamma*(k) O_k.
ProjectorReport finite_group_projector(const GroupRep& rep, const std::string& irrep_label);

struct Su2Generators {
  Operator jx, jy, jz;
};

/// (2j+1)-dimensional angular momentum matrices from the ladder elements
/// <j,m'|J+-|j,m> = sqrt(j(j+1) - m(m+-1)); Jz is diagonal with entries
/// j ... -j.
Su2Generators su2_irrep_generators(double j);

/// <jm| exp(i beta Jy) |jm> in the (2j+1)-dimensional irrep; real-valued up
/// to rounding.
Complex wigner_character(double j, double m, double beta);

/// Single-angle reduction of the rotation-group projector:
/// (j + 1/2) integral over [0, pi] of sin(beta) <jm|e^{i beta Jy}|jm>
/// e^{i beta Jy_total} d beta, Gauss-Legendre with `nodes` points. The
/// result still couples different Jz sectors; multiply with the Jz
/// eigen-projector for m (angular_momentum_sector_projector below) to
/// isolate the |jm> component.
ProjectorReport angular_momentum_projector(const Operator& jy_total, double j, double m,
                                           int nodes = 32);

/// The combined projector P_m * AM * P_m with P_m the Lagrange projector of
/// jz_total onto eigenvalue m: equals the simultaneous (J^2, Jz)
/// eigen-projector for converged quadrature.
ProjectorReport angular_momentum_sector_projector(const Operator& jy_total,
                                                  const Operator& jz_total,
                                                  const SpectrumSpec& jz_spectrum, double j,
                                                  double m, int nodes = 32);
ProjectorReport angular_momentum_sector_projector(const Operator& jy_total,
                                                  const Operator& jz_total, double j, double m,
                                                  int nodes = 32);

/// Ordered product of commuting projectors. Each part must be idempotent
/// and Hermitian to 1e-8 and all pairwise commutators below 1e-8 (violations
/// throw, naming the offending pair). The report compares against the
/// reversed-order product and flags an identically vanishing product as
/// trivial.
ProjectorReport composite_projector(const std::vector<Operator>& parts);

/// The eigendecomposition route packaged as a report, for side-by-side
/// comparisons.
ProjectorReport oracle_projector_report(const Operator& o, double target,
                                        double cluster_tol = kClusterTol);

}  // namespace symproj
