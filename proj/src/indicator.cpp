// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#include "symproj/indicator.hpp"

#include <cmath>
#include <stdexcept>

#include "format17.hpp"

namespace symproj {

namespace {

constexpr double kIntegerTol = 1e-9;

double rescale_unit(const SpectrumSpec& spectrum) {
  if (spectrum.spacing()) return *spectrum.spacing();
  if (spectrum.size() < 2) return 1.0;
  double d = std::numeric_limits<double>::infinity();
  const auto& v = spectrum.values();
  for (std::size_t k = 0; k + 1 < v.size(); ++k) d = std::min(d, v[k + 1] - v[k]);
  return d;
}

/// Integer spread of (values - target)/d; throws when a rescaled difference
/// is not an integer.
long checked_integer_spread(const SpectrumSpec& spectrum, double target, double d) {
  long lo = 0, hi = 0;
  for (double v : spectrum.values()) {
    const double s = (v - target) / d;
    const double r = std::round(s);
    if (std::abs(s - r) > kIntegerTol) {
      throw std::invalid_argument(
          "indicator: gap " + detail::g17(v - target) + " is not an integer multiple of the "
          "rescaling unit " + detail::g17(d));
    }
    lo = std::min(lo, static_cast<long>(r));
    hi = std::max(hi, static_cast<long>(r));
  }
  return hi - lo;
}

double stable_logistic(double t) {
  return t >= 0 ? 1.0 / (1.0 + std::exp(-t)) : std::exp(t) / (1.0 + std::exp(t));
}

}  // namespace

Complex indicator_value(const IndicatorForm& form, double x, double target,
                        const SpectrumSpec& spectrum) {
  const std::size_t j = spectrum.index_of(target);  // throws if absent
  const auto& values = spectrum.values();

  switch (form.kind) {
    case IndicatorKind::UnitCircleReal:
    case IndicatorKind::UnitCircleComplex: {
      const double d = rescale_unit(spectrum);
      const long spread = checked_integer_spread(spectrum, target, d);
      int m_nodes = form.nodes;
      if (m_nodes == 0) m_nodes = static_cast<int>(spread) + 1;
      if (m_nodes <= spread) {
        throw std::invalid_argument("indicator: node count " + std::to_string(m_nodes) +
                                    " must exceed the rescaled spectrum spread " +
                                    std::to_string(spread));
      }
      const double r = (x - target) / d;
      Complex sum(0, 0);
      if (form.kind == IndicatorKind::UnitCircleReal) {
        for (int m = 0; m < m_nodes; ++m) {
          sum += std::exp(Complex(0, 2 * M_PI * m * r / m_nodes));
        }
        return sum / static_cast<double>(m_nodes);
      }
      // Complex-plane variant: trapezoid weights w = i z dphi on |z| = 1 and
      // the principal branch of z^(r-1).
      for (int m = 0; m < m_nodes; ++m) {
        const double phi = 2 * M_PI * m / m_nodes;
        const Complex z = std::polar(1.0, phi);
        const Complex w = Complex(0, 1) * z * (2 * M_PI / m_nodes);
        sum += w * std::pow(z, Complex(r - 1.0, 0));
      }
      return sum / Complex(0, 2 * M_PI);
    }

    case IndicatorKind::Lagrange: {
      double prod = 1.0;
      for (std::size_t n = 0; n < values.size(); ++n) {
        if (n == j) continue;
        prod *= (x - values[n]) / (target - values[n]);
      }
      return Complex(prod, 0);
    }

    case IndicatorKind::ResolventContour: {
      const double radius = form.contour_radius
                                ? *form.contour_radius
                                : 0.5 * spectrum.min_adjacent_gap(j);
      if (radius <= 0) throw std::invalid_argument("indicator: contour radius must be positive");
      const int m_nodes = form.nodes > 0 ? form.nodes : 64;
      if (std::abs(std::abs(x - target) - radius) <= 1e-12 * std::max(1.0, radius)) {
        throw std::invalid_argument("indicator: evaluation point lies on the contour of radius " +
                                    detail::g17(radius));
      }
      // (1/2 pi i) oint dz / (z - x) over the counterclockwise circle.
      Complex sum(0, 0);
      for (int m = 0; m < m_nodes; ++m) {
        const double theta = 2 * M_PI * m / m_nodes;
        const Complex e = std::polar(1.0, theta);
        sum += e / (target + radius * e - x);
      }
      return sum * (radius / m_nodes);
    }

    case IndicatorKind::LogisticDifference: {
      const double k = form.logistic_steepness;
      if (k <= 0) throw std::invalid_argument("indicator: logistic steepness must be positive");
      const double eps = 0.5 * spectrum.min_adjacent_gap(j);
      const double t = x - target;
      return Complex(stable_logistic(k * (t + eps)) - stable_logistic(k * (t - eps)), 0);
    }

    case IndicatorKind::Bump: {
      const double eps = form.half_gap ? *form.half_gap : 0.5 * spectrum.min_adjacent_gap(j);
      if (eps <= 0) throw std::invalid_argument("indicator: bump half-gap must be positive");
      const double u = (x - target) * (x - target);
      if (u >= eps) return Complex(0, 0);
      // Normalized so the window peaks at exactly 1 on the target.
      return Complex(std::exp(1.0 / eps + 1.0 / (u - eps)), 0);
    }
  }
  throw std::logic_error("indicator: unknown form");
}

}  // namespace symproj
