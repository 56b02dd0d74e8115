// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "symproj/spectrum.hpp"

namespace symproj {

/// The six differentiable Kronecker-delta representations, as scalar
/// functions of a point x, a target spectrum value and the full spectrum.
/// Forms 1-4 lift to operator-valued constructors (module projector); forms
/// 5 and 6 are scalar-only.
enum class IndicatorKind {
  UnitCircleReal,      // form 1: circle integral of exp(i phi (x - o_j))
  UnitCircleComplex,   // form 2: complex contour integral of z^(x - o_j - 1)
  Lagrange,            // form 3: Lagrange interpolation product
  ResolventContour,    // form 4: contour integral of the resolvent kernel
  LogisticDifference,  // form 5: difference of steep logistic steps
  Bump,                // form 6: compactly supported mollifier window
};

struct IndicatorForm {
  IndicatorKind kind;

  /// Quadrature node count for forms 1, 2 and 4. Zero selects the default:
  /// integer spread + 1 for forms 1-2, 64 for form 4.
  int nodes = 0;

  /// Form 5 steepness k; the tolerance of the form scales as exp(-k eps).
  double logistic_steepness = 0.0;

  /// Form 6 window parameter (support is |x - o_j| < sqrt(eps)). Defaults to
  /// half the smallest gap adjacent to the target. Form 5 always uses the
  /// half-gap, never this override.
  std::optional<double> half_gap;

  /// Form 4 contour radius; defaults to half the smallest adjacent gap.
  std::optional<double> contour_radius;

  static IndicatorForm unit_circle_real(int nodes = 0) { return {IndicatorKind::UnitCircleReal, nodes, 0, {}, {}}; }
  static IndicatorForm unit_circle_complex(int nodes = 0) { return {IndicatorKind::UnitCircleComplex, nodes, 0, {}, {}}; }
  static IndicatorForm lagrange() { return {IndicatorKind::Lagrange, 0, 0, {}, {}}; }
  static IndicatorForm resolvent_contour(int nodes = 64, std::optional<double> radius = {}) {
    return {IndicatorKind::ResolventContour, nodes, 0, {}, radius};
  }
  static IndicatorForm logistic_difference(double steepness) {
    return {IndicatorKind::LogisticDifference, 0, steepness, {}, {}};
  }
  static IndicatorForm bump(std::optional<double> half_gap = {}) {
    return {IndicatorKind::Bump, 0, 0, half_gap, {}};
  }
};

/// Evaluates the chosen representation F(x, target) against `spectrum`.
/// target must be a spectrum value. Forms 1-2 additionally require the
/// spectrum rescaled by its spacing to have integer differences and throw,
/// naming the offending gap, when it does not. For form 4 the point x must
/// not lie on the contour.
Complex indicator_value(const IndicatorForm& form, double x, double target,
                        const SpectrumSpec& spectrum);

}  // namespace symproj
