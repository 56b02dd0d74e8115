// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace symproj {

struct QuadratureNode {
  double x;
  double w;
};

/// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on the
/// Legendre recurrence. Exact for polynomials up to degree 2n - 1.
std::vector<QuadratureNode> gauss_legendre(int n);

}  // namespace symproj
